#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace lqg {

// flat INI: [section] headers, key = value lines, # or ; comments.
// keys are addressed as "section.key"; every experiment declares the keys it
// accepts and anything else is rejected with its source location
struct Config {
  struct Entry {
    std::string value;
    int line = 0;
  };

  std::string source_name;
  std::map<std::string, Entry> entries;

  static Config from_string(std::string_view text, std::string name);
  static Config from_file(const std::string& path);

  bool has(const std::string& key) const { return entries.count(key) > 0; }

  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  std::uint64_t get_uint64(const std::string& key, std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;

  // throws config_error naming the first key outside the allowed list
  void check_known(std::span<const std::string_view> allowed) const;

  // sorted key=value lines; the report hash is taken over this form
  std::string canonical() const;

 private:
  const Entry& require_entry(const std::string& key) const;
};

}  // namespace lqg
