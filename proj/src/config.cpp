#include "lqg/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "lqg/errors.hpp"

namespace lqg {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

Config Config::from_string(std::string_view text, std::string name) {
  Config cfg;
  cfg.source_name = std::move(name);
  std::string section;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw config_error(cfg.source_name + ":" + std::to_string(line_no) +
                           ": malformed section header");
      section = trim(std::string_view(t).substr(1, t.size() - 2));
      if (section.empty())
        throw config_error(cfg.source_name + ":" + std::to_string(line_no) +
                           ": empty section name");
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw config_error(cfg.source_name + ":" + std::to_string(line_no) +
                         ": expected key = value");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    if (key.empty())
      throw config_error(cfg.source_name + ":" + std::to_string(line_no) +
                         ": empty key");
    const std::string full = section.empty() ? key : section + "." + key;
    if (cfg.entries.count(full))
      throw config_error(cfg.source_name + ":" + std::to_string(line_no) +
                         ": duplicate key '" + full + "'");
    cfg.entries[full] = {value, line_no};
  }
  return cfg;
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str(), path);
}

const Config::Entry& Config::require_entry(const std::string& key) const {
  const auto it = entries.find(key);
  if (it == entries.end())
    throw config_error(source_name + ": missing required key '" + key + "'");
  return it->second;
}

namespace {

[[noreturn]] void bad_value(const Config& cfg, const std::string& key,
                            const Config::Entry& e, const char* kind) {
  throw config_error(cfg.source_name + ":" + std::to_string(e.line) + ": key '" +
                     key + "' is not a valid " + kind + " ('" + e.value + "')");
}

}  // namespace

double Config::get_double(const std::string& key) const {
  const Entry& e = require_entry(key);
  try {
    std::size_t pos = 0;
    const double v = std::stod(e.value, &pos);
    if (pos != e.value.size()) bad_value(*this, key, e, "number");
    return v;
  } catch (const config_error&) {
    throw;
  } catch (...) {
    bad_value(*this, key, e, "number");
  }
}

double Config::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

int Config::get_int(const std::string& key) const {
  const Entry& e = require_entry(key);
  int v = 0;
  const auto [p, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
  if (ec != std::errc{} || p != e.value.data() + e.value.size())
    bad_value(*this, key, e, "integer");
  return v;
}

int Config::get_int(const std::string& key, int fallback) const {
  return has(key) ? get_int(key) : fallback;
}

std::uint64_t Config::get_uint64(const std::string& key, std::uint64_t fallback) const {
  if (!has(key)) return fallback;
  const Entry& e = require_entry(key);
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), v);
  if (ec != std::errc{} || p != e.value.data() + e.value.size())
    bad_value(*this, key, e, "unsigned integer");
  return v;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const Entry& e = entries.at(key);
  std::string v = e.value;
  std::transform(v.begin(), v.end(), v.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad_value(*this, key, e, "boolean");
}

std::string Config::get_string(const std::string& key) const {
  return require_entry(key).value;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  return has(key) ? entries.at(key).value : fallback;
}

void Config::check_known(std::span<const std::string_view> allowed) const {
  for (const auto& [key, entry] : entries) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw config_error(source_name + ":" + std::to_string(entry.line) +
                         ": unknown key '" + key + "'");
  }
}

std::string Config::canonical() const {
  std::string out;
  for (const auto& [key, entry] : entries) {
    out += key;
    out += '=';
    out += entry.value;
    out += '\n';
  }
  return out;
}

}  // namespace lqg
