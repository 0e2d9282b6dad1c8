#ifndef PHONEBENCH_ERRORS_HPP
#define PHONEBENCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace phonebench {

// Error taxonomy used across the toolkit. Everything a user can cause with
// bad inputs (files, configs, labels, shapes) is a user error; anything else
// escaping to the CLI is treated as internal.
enum class ErrorKind {
    parse,        // malformed file content
    inventory,    // label not in the phoneme inventory / bad inventory
    range,        // time range outside the audio
    geometry,     // wrong vector/window/frame dimensions
    data,         // empty or otherwise unusable data
    config,       // bad run configuration or arguments
    numeric,      // non-finite values where finite are required
    convergence,  // an iterative solver failed to converge
    render,       // report rendering on an incomplete grid
    io,           // file system failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::parse: return "parse";
        case ErrorKind::inventory: return "inventory";
        case ErrorKind::range: return "range";
        case ErrorKind::geometry: return "geometry";
        case ErrorKind::data: return "data";
        case ErrorKind::config: return "config";
        case ErrorKind::numeric: return "numeric";
        case ErrorKind::convergence: return "convergence";
        case ErrorKind::render: return "render";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

}  // namespace phonebench

#endif  // PHONEBENCH_ERRORS_HPP
