#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lqg/config.hpp"
#include "lqg/stats.hpp"

namespace lqg {

inline constexpr const char* toolkit_version = "0.1.0";

// one named scalar result with uncertainty, as serialized into reports
struct EstimateRecord {
  std::string name;
  double value = 0.0;
  double std_error = 0.0;
  long replicas = 0;

  nlohmann::json to_json() const;
};

std::uint64_t fnv1a64(std::string_view bytes);

// deterministic report body: version, experiment name, config hash, records,
// checks.  no timestamps here, so identical runs produce identical bytes
struct Report {
  std::string experiment;
  Config config;
  std::vector<EstimateRecord> records;
  nlohmann::json extra = nlohmann::json::object();
  bool passed = true;

  nlohmann::json to_json() const;
  void write(const std::string& dir) const;  // <dir>/report.json
};

// run metadata lives apart from the report so reruns still diff clean
void write_manifest(const std::string& dir, const std::string& experiment,
                    std::uint64_t seed, int replicas);

// RFC 4180 quoting; rows written as-is, caller supplies the header row
struct CsvWriter {
  explicit CsvWriter(const std::string& path);
  ~CsvWriter();
  void row(const std::vector<std::string>& cells);
  static std::string quote(const std::string& cell);

 private:
  struct Impl;
  Impl* impl_;
};

std::string format_double(double v);  // shortest round-trip form

}  // namespace lqg
