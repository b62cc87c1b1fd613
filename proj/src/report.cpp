#include "lqg/report.hpp"

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>

#include "lqg/errors.hpp"

namespace lqg {

nlohmann::json EstimateRecord::to_json() const {
  return {{"name", name},
          {"value", value},
          {"std_error", std_error},
          {"replicas", replicas}};
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["version"] = toolkit_version;
  j["experiment"] = experiment;
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a64(config.canonical())));
  j["config_hash"] = hex;
  j["passed"] = passed;
  j["records"] = nlohmann::json::array();
  for (const auto& r : records) j["records"].push_back(r.to_json());
  if (!extra.empty()) j["extra"] = extra;
  return j;
}

void Report::write(const std::string& dir) const {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir + "/report.json");
  if (!out) throw resource_error("cannot write report in " + dir);
  out << to_json().dump(2) << '\n';
}

void write_manifest(const std::string& dir, const std::string& experiment,
                    std::uint64_t seed, int replicas) {
  std::filesystem::create_directories(dir);
  nlohmann::json j;
  j["experiment"] = experiment;
  j["seed"] = seed;
  j["replicas"] = replicas;
  j["version"] = toolkit_version;
  const auto now = std::chrono::system_clock::now();
  j["written_unix"] =
      std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
  std::ofstream out(dir + "/manifest.json");
  if (!out) throw resource_error("cannot write manifest in " + dir);
  out << j.dump(2) << '\n';
}

struct CsvWriter::Impl {
  std::ofstream out;
};

CsvWriter::CsvWriter(const std::string& path) : impl_(new Impl) {
  impl_->out.open(path);
  if (!impl_->out) {
    delete impl_;
    throw resource_error("cannot open csv for writing: " + path);
  }
}

CsvWriter::~CsvWriter() { delete impl_; }

std::string CsvWriter::quote(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) impl_->out << ',';
    impl_->out << quote(cells[i]);
  }
  impl_->out << "\r\n";
}

std::string format_double(double v) {
  char buf[32];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

}  // namespace lqg
