#ifndef PHONEBENCH_BINIO_HPP
#define PHONEBENCH_BINIO_HPP

#include <charconv>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "phonebench/errors.hpp"

namespace phonebench {

// Little-endian binary writer/reader for the versioned file formats
// (.pbft feature matrices, .pbnn models, .pbml classifiers).

class BinWriter {
public:
    explicit BinWriter(std::ostream& out) : out_(out) {}

    void magic(const char tag[4]) { out_.write(tag, 4); }
    void u16(std::uint16_t v) { raw(&v, sizeof v); }
    void u32(std::uint32_t v) { raw(&v, sizeof v); }
    void u64(std::uint64_t v) { raw(&v, sizeof v); }
    void f64(double v) { raw(&v, sizeof v); }

    void str(const std::string& s) {
        u32(static_cast<std::uint32_t>(s.size()));
        out_.write(s.data(), static_cast<std::streamsize>(s.size()));
    }

    void f64_array(const double* p, std::size_t n) {
        out_.write(reinterpret_cast<const char*>(p),
                   static_cast<std::streamsize>(n * sizeof(double)));
    }

private:
    void raw(const void* p, std::size_t n) {
        out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    }

    std::ostream& out_;
};

class BinReader {
public:
    explicit BinReader(std::istream& in, std::string context = "")
        : in_(in), context_(std::move(context)) {}

    void expect_magic(const char tag[4]) {
        char got[4] = {};
        raw(got, 4);
        if (std::memcmp(got, tag, 4) != 0)
            throw Error(ErrorKind::parse,
                        context_ + ": bad magic, expected '" +
                            std::string(tag, 4) + "'");
    }

    std::uint16_t u16() { std::uint16_t v; raw(&v, sizeof v); return v; }
    std::uint32_t u32() { std::uint32_t v; raw(&v, sizeof v); return v; }
    std::uint64_t u64() { std::uint64_t v; raw(&v, sizeof v); return v; }
    double f64() { double v; raw(&v, sizeof v); return v; }

    std::string str() {
        std::uint32_t n = u32();
        std::string s(n, '\0');
        raw(s.data(), n);
        return s;
    }

    void f64_array(double* p, std::size_t n) {
        raw(p, n * sizeof(double));
    }

private:
    void raw(void* p, std::size_t n) {
        in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
        if (!in_)
            throw Error(ErrorKind::parse, context_ + ": truncated file");
    }

    std::istream& in_;
    std::string context_;
};

// Shortest decimal representation that round-trips the exact double.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s, const std::string& what) {
    double v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
        throw Error(ErrorKind::parse, "invalid number '" + s + "' in " + what);
    return v;
}

}  // namespace phonebench

#endif  // PHONEBENCH_BINIO_HPP
