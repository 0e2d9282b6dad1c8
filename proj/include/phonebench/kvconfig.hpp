#ifndef PHONEBENCH_KVCONFIG_HPP
#define PHONEBENCH_KVCONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace phonebench {

// Flat key-value config file. One `key = value` pair per line, `#` starts a
// comment, keys may be dotted (`class.a.formants`), values may be quoted
// strings or comma-separated lists. Files carry a `version` key.
class KvConfig {
public:
    static KvConfig parse_file(const std::string& path);
    static KvConfig parse_string(const std::string& text,
                                 const std::string& context);

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;

    std::int64_t get_int(const std::string& key) const;
    std::int64_t get_int_or(const std::string& key, std::int64_t fallback) const;
    double get_double(const std::string& key) const;
    double get_double_or(const std::string& key, double fallback) const;
    bool get_bool_or(const std::string& key, bool fallback) const;

    std::vector<std::string> get_list(const std::string& key) const;

    // All keys beginning with `prefix`, in lexicographic order.
    std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

private:
    std::map<std::string, std::string> entries_;
    std::string context_;
};

}  // namespace phonebench

#endif  // PHONEBENCH_KVCONFIG_HPP
