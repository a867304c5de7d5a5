// config.hpp — flat `key = value` scenario configuration

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace iondecay {

// Text config: one `key = value` per line, `#` starts a comment. Keys with a
// `_us` or `_khz` suffix are converted to `_s` / `_hz` at parse time, so the
// resolved map only carries base units.
class Config {
 public:
  Config() = default;

  static Config parse(std::string_view text);
  static Config parse_file(const std::filesystem::path& path);

  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  // Throw ConfigError naming the key when absent or malformed.
  const std::string& get_string(const std::string& key) const;
  double get_double(const std::string& key) const;
  int get_int(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;

  void set(const std::string& key, const std::string& value) { kv_[key] = value; }
  void set(const std::string& key, double value);
  void set(const std::string& key, int value);

  // Sorted `key = value` lines; parses back to an identical map.
  std::string serialize() const;

  const std::map<std::string, std::string>& entries() const { return kv_; }

  bool operator==(const Config& other) const = default;

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace iondecay
