#pragma once

// Flat key=value configuration with dotted namespaces (mesh.h = 0.01).
// Full-line comments start with '#'. Parse errors carry file:line context.
// serialize() emits a canonical sorted form, so serialize -> parse ->
// serialize is idempotent.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "balaw/errors.hpp"

namespace balaw {

class Config {
  public:
    Config() = default;

    static Config parse_string(const std::string& text, const std::string& name = "<config>") {
        std::istringstream in(text);
        return parse_stream(in, name);
    }

    static Config parse_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw config_error("cannot open config file '" + path + "'");
        return parse_stream(in, path);
    }

    /// Apply a --set style override "key=value".
    void set_override(const std::string& assignment) {
        const auto eq = assignment.find('=');
        if (eq == std::string::npos)
            throw config_error("override '" + assignment + "': expected key=value");
        const std::string key = trim(assignment.substr(0, eq));
        const std::string value = trim(assignment.substr(eq + 1));
        if (!valid_key(key))
            throw config_error("override '" + assignment + "': bad key");
        kv_[key] = value;
    }

    void set(const std::string& key, const std::string& value) { kv_[key] = value; }

    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    std::string get_string(const std::string& key, const std::string& fallback) const {
        const auto it = kv_.find(key);
        return it == kv_.end() ? fallback : it->second;
    }

    double get_double(const std::string& key, double fallback) const {
        const auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        const char* s = it->second.c_str();
        char* end = nullptr;
        const double v = std::strtod(s, &end);
        if (end == s || *end != '\0')
            throw config_error("config key '" + key + "': invalid number '" + it->second + "'");
        return v;
    }

    long long get_long(const std::string& key, long long fallback) const {
        const auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        const char* s = it->second.c_str();
        char* end = nullptr;
        const long long v = std::strtoll(s, &end, 10);
        if (end == s || *end != '\0')
            throw config_error("config key '" + key + "': invalid integer '" + it->second + "'");
        return v;
    }

    bool get_bool(const std::string& key, bool fallback) const {
        const auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        const std::string& v = it->second;
        if (v == "true" || v == "on" || v == "1") return true;
        if (v == "false" || v == "off" || v == "0") return false;
        throw config_error("config key '" + key + "': invalid boolean '" + v + "'");
    }

    /// Canonical sorted "key = value" lines.
    std::string serialize() const {
        std::string out;
        for (const auto& [k, v] : kv_) {
            out += k;
            out += " = ";
            out += v;
            out += '\n';
        }
        return out;
    }

    const std::map<std::string, std::string>& entries() const { return kv_; }

  private:
    static std::string trim(const std::string& s) {
        std::size_t a = 0, b = s.size();
        while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
        return s.substr(a, b - a);
    }

    static bool valid_key(const std::string& key) {
        if (key.empty()) return false;
        for (const char c : key) {
            const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
            if (!ok) return false;
        }
        return true;
    }

    static Config parse_stream(std::istream& in, const std::string& name) {
        Config cfg;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const std::string t = trim(line);
            if (t.empty() || t[0] == '#') continue;
            const auto where = name + ":" + std::to_string(line_no);
            const auto eq = t.find('=');
            if (eq == std::string::npos)
                throw config_error(where + ": expected key=value, got '" + t + "'");
            const std::string key = trim(t.substr(0, eq));
            const std::string value = trim(t.substr(eq + 1));
            if (!valid_key(key))
                throw config_error(where + ": bad key '" + key + "'");
            cfg.kv_[key] = value;
        }
        return cfg;
    }

    std::map<std::string, std::string> kv_;
};

} // namespace balaw
