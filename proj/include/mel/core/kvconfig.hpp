#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace mel {

// Human-readable `key = value` configuration. One pair per line, '#' starts
// a comment, blank lines ignored. Keys mirror the config struct field names.
class KvConfig {
public:
    KvConfig() = default;

    static KvConfig parse(const std::string& text);
    static KvConfig parse_file(const std::filesystem::path& path);

    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    std::string get_str(const std::string& key) const;  // throws ConfigError when absent
    std::string get_str(const std::string& key, const std::string& def) const;
    int64_t get_int(const std::string& key, int64_t def) const;
    double get_double(const std::string& key, double def) const;
    bool get_bool(const std::string& key, bool def) const;

    void set(const std::string& key, const std::string& value) { kv_[key] = value; }
    void set_int(const std::string& key, int64_t v) { kv_[key] = std::to_string(v); }
    void set_double(const std::string& key, double v);
    void set_bool(const std::string& key, bool v) { kv_[key] = v ? "true" : "false"; }

    std::vector<std::string> keys() const;

    // Throws ConfigError when a key outside `allowed` is present (typo guard).
    void require_known(const std::vector<std::string>& allowed) const;

    std::string to_text() const;  // round-trippable `key = value` lines, sorted

private:
    std::map<std::string, std::string> kv_;
};

}  // namespace mel
