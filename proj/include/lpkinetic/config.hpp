#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace lpk {

// Plain-text key=value configuration. Lines starting with '#' and blank lines
// are skipped; later assignments override earlier ones.
class Config {
  public:
    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;

    // typed getters; missing key or malformed value throws ConfigError naming it
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long get_int(const std::string& key) const;
    long get_int(const std::string& key, long fallback) const;
    std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

  private:
    std::map<std::string, std::string> entries_;
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lpk
