#include "phonebench/kvconfig.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "phonebench/binio.hpp"
#include "phonebench/errors.hpp"

namespace phonebench {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

KvConfig KvConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::io, "cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

KvConfig KvConfig::parse_string(const std::string& text,
                                const std::string& context) {
    KvConfig cfg;
    cfg.context_ = context;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments, respecting quoted values
        bool in_quote = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_quote = !in_quote;
            if (line[i] == '#' && !in_quote) { line.resize(i); break; }
        }
        std::string t = strip(line);
        if (t.empty()) continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::parse, context + ":" + std::to_string(lineno) +
                                              ": expected 'key = value'");
        std::string key = strip(t.substr(0, eq));
        std::string value = strip(t.substr(eq + 1));
        if (key.empty())
            throw Error(ErrorKind::parse, context + ":" + std::to_string(lineno) +
                                              ": empty key");
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        if (cfg.entries_.count(key))
            throw Error(ErrorKind::parse, context + ":" + std::to_string(lineno) +
                                              ": duplicate key '" + key + "'");
        cfg.entries_[key] = value;
    }
    return cfg;
}

bool KvConfig::has(const std::string& key) const {
    return entries_.count(key) != 0;
}

const std::string& KvConfig::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
        throw Error(ErrorKind::config,
                    context_ + ": missing required key '" + key + "'");
    return it->second;
}

std::string KvConfig::get_or(const std::string& key,
                             const std::string& fallback) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second;
}

std::int64_t KvConfig::get_int(const std::string& key) const {
    const std::string& s = get(key);
    std::int64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw Error(ErrorKind::config,
                    context_ + ": key '" + key + "' is not an integer: " + s);
    return v;
}

std::int64_t KvConfig::get_int_or(const std::string& key,
                                  std::int64_t fallback) const {
    return has(key) ? get_int(key) : fallback;
}

double KvConfig::get_double(const std::string& key) const {
    return parse_double(get(key), context_ + " key '" + key + "'");
}

double KvConfig::get_double_or(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

bool KvConfig::get_bool_or(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string& s = get(key);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw Error(ErrorKind::config,
                context_ + ": key '" + key + "' is not a boolean: " + s);
}

std::vector<std::string> KvConfig::get_list(const std::string& key) const {
    const std::string& s = get(key);
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = comma == std::string::npos ? s.substr(pos)
                                                      : s.substr(pos, comma - pos);
        item = strip(item);
        if (!item.empty()) out.push_back(item);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<std::string> KvConfig::keys_with_prefix(
    const std::string& prefix) const {
    std::vector<std::string> out;
    for (auto it = entries_.lower_bound(prefix); it != entries_.end(); ++it) {
        if (it->first.compare(0, prefix.size(), prefix) != 0) break;
        out.push_back(it->first);
    }
    return out;
}

}  // namespace phonebench
