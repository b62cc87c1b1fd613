#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "lqg/config.hpp"
#include "lqg/errors.hpp"
#include "lqg/experiments.hpp"
#include "lqg/report.hpp"
#include "lqg/rng.hpp"
#include "lqg/stats.hpp"

using namespace lqg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(bool(in));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag)
      : path(std::filesystem::temp_directory_path() / ("lqg_test_" + tag)) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("config parses sections, comments, and whitespace") {
  const Config cfg = Config::from_string(
      "# leading comment\n"
      "top = 1\n"
      "[geometry]\n"
      "  side = 6.28  \n"
      "; another comment\n"
      "cutoff=24\n"
      "[mc]\n"
      "replicas = 500\n"
      "verbose = yes\n",
      "inline");
  CHECK(cfg.get_double("top") == 1.0);
  CHECK(cfg.get_double("geometry.side") == 6.28);
  CHECK(cfg.get_int("geometry.cutoff") == 24);
  CHECK(cfg.get_int("mc.replicas") == 500);
  CHECK(cfg.get_bool("mc.verbose", false));
  CHECK(cfg.get_bool("mc.quiet", false) == false);
  CHECK(cfg.get_double("geometry.missing", 7.0) == 7.0);
  CHECK(cfg.get_uint64("mc.seed", 42) == 42);
}

TEST_CASE("config rejects malformed input with its location") {
  CHECK_THROWS_AS(Config::from_string("[geometry\nside=1\n", "f"), config_error);
  CHECK_THROWS_AS(Config::from_string("key value\n", "f"), config_error);
  CHECK_THROWS_AS(Config::from_string("= 3\n", "f"), config_error);
  CHECK_THROWS_AS(Config::from_string("a=1\na=2\n", "f"), config_error);
  try {
    Config::from_string("ok = 1\nbroken line\n", "myfile.ini");
  } catch (const config_error& e) {
    const std::string what = e.what();
    CHECK(what.find("myfile.ini:2") != std::string::npos);
  }

  const Config cfg = Config::from_string("[a]\nx = fast\ny = 1.5\n", "f");
  CHECK_THROWS_AS(cfg.get_double("a.x"), config_error);
  CHECK_THROWS_AS(cfg.get_int("a.y"), config_error);
  CHECK_THROWS_AS(cfg.get_double("a.gone"), config_error);
  try {
    (void)cfg.get_double("a.x");
  } catch (const config_error& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
}

TEST_CASE("unknown keys are refused by name and location") {
  const Config cfg = Config::from_string("[mc]\nseed = 1\ntypo = 2\n", "f");
  const std::string_view allowed[] = {"mc.seed"};
  try {
    cfg.check_known(allowed);
    FAIL("expected a config_error");
  } catch (const config_error& e) {
    const std::string what = e.what();
    CHECK(what.find("unknown key 'mc.typo'") != std::string::npos);
    CHECK(what.find("f:3") != std::string::npos);
  }
}

TEST_CASE("canonical form is sorted and insensitive to source order") {
  const Config a = Config::from_string("[b]\ny = 2\n[a]\nx = 1\n", "one");
  const Config b = Config::from_string("[a]\nx = 1\n[b]\ny = 2\n", "two");
  CHECK(a.canonical() == b.canonical());
  CHECK(a.canonical() == "a.x=1\nb.y=2\n");
  CHECK(fnv1a64(a.canonical()) == fnv1a64(b.canonical()));
}

TEST_CASE("hash function matches the reference vectors") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("ab") != fnv1a64("ba"));
}

TEST_CASE("mean and variance estimators on known data") {
  const std::vector<double> two = {2.0, 4.0};
  const Estimate m = mean_estimate(two);
  CHECK(m.value == doctest::Approx(3.0));
  CHECK(m.std_error == doctest::Approx(1.0));
  CHECK_THROWS_AS(mean_estimate(std::vector<double>{1.0}), config_error);

  const std::vector<double> four = {1.0, 2.0, 3.0, 4.0};
  const Estimate v = variance_estimate(four);
  CHECK(v.value == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  CHECK(v.std_error > 0.0);
  const std::vector<double> flat = {2.0, 2.0, 2.0, 2.0};
  CHECK(variance_estimate(flat).value == 0.0);
  CHECK_THROWS_AS(variance_estimate(two), config_error);
}

TEST_CASE("two-sample z separates what it should separate") {
  CHECK(two_sample_z({1.0, 0.1}, {1.0, 0.1}) == 0.0);
  CHECK(two_sample_z({1.0, 0.1}, {1.3, 0.0}) == doctest::Approx(-3.0).epsilon(1e-12));

  RngStream rng(501, 0);
  std::vector<double> a(400), b(400);
  for (auto& x : a) x = rng.normal();
  for (auto& x : b) x = 5.0 + rng.normal();
  CHECK(std::abs(two_sample_z(a, a)) == 0.0);
  CHECK(two_sample_z(a, b) < -20.0);
}

TEST_CASE("z statistic is calibrated on null data") {
  int inside = 0;
  const int trials = 1000, n = 200;
  std::vector<double> a(n), b(n);
  for (int t = 0; t < trials; ++t) {
    RngStream rng(511, std::uint64_t(t));
    for (auto& x : a) x = rng.normal();
    for (auto& x : b) x = rng.normal();
    if (std::abs(two_sample_z(a, b)) < 3.0) ++inside;
  }
  CHECK(inside >= 985);  // nominal miss rate 0.27%
}

TEST_CASE("jackknife collapses to the plain mean for flat weights") {
  RngStream rng(521, 0);
  std::vector<double> g(300), w(300, 1.0);
  for (auto& x : g) x = rng.normal() + 2.0;
  double ess = 0.0;
  const Estimate jk = jackknife_weighted_mean(g, w, &ess);
  const Estimate direct = mean_estimate(g);
  CHECK(jk.value == doctest::Approx(direct.value).epsilon(1e-13));
  CHECK(jk.std_error == doctest::Approx(direct.std_error).epsilon(1e-10));
  CHECK(ess == doctest::Approx(300.0).epsilon(1e-13));

  // a lone heavy weight dominates: the estimate moves to that sample
  std::vector<double> w2(300, 1e-12);
  w2[7] = 1.0;
  const Estimate dom = jackknife_weighted_mean(g, w2, &ess);
  CHECK(dom.value == doctest::Approx(g[7]).epsilon(1e-6));
  CHECK(ess < 1.5);
}

TEST_CASE("kolmogorov machinery: exact small case and monotone p-value") {
  const std::vector<double> s = {0.1, 0.5, 0.9};
  const double d = ks_statistic(s, [](double x) { return x; });
  CHECK(d == doctest::Approx(7.0 / 30.0).epsilon(1e-12));

  CHECK(ks_pvalue(0.02, 1000) > 0.5);
  CHECK(ks_pvalue(0.10, 1000) < 0.01);
  CHECK(ks_pvalue(0.10, 1000) < ks_pvalue(0.05, 1000));

  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(normal_cdf(1.96) == doctest::Approx(0.9750021).epsilon(1e-6));
  CHECK(normal_cdf(-1.0) == doctest::Approx(0.15865525).epsilon(1e-7));
}

TEST_CASE("csv writer quotes per rfc 4180") {
  CHECK(CsvWriter::quote("plain") == "plain");
  CHECK(CsvWriter::quote("with,comma") == "\"with,comma\"");
  CHECK(CsvWriter::quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(CsvWriter::quote("two\nlines") == "\"two\nlines\"");

  TempDir dir("csv");
  const std::string path = (dir.path / "t.csv").string();
  {
    CsvWriter csv(path);
    csv.row({"a", "b,c"});
    csv.row({"1", "2"});
  }
  CHECK(slurp(path) == "a,\"b,c\"\r\n1,2\r\n");
}

TEST_CASE("doubles round-trip through their shortest form") {
  for (double v : {0.1, 1.0 / 3.0, 6.283185307179586, -1e-17, 0.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("report json carries version, hash, and records") {
  Report r;
  r.experiment = "spectrum";
  r.config = Config::from_string("[geometry]\ncutoff = 8\n", "t");
  r.records.push_back({"mode_count", 197.0, 0.0, 0});
  r.passed = true;
  const nlohmann::json j = r.to_json();
  CHECK(j["version"] == toolkit_version);
  CHECK(j["experiment"] == "spectrum");
  CHECK(j["config_hash"].get<std::string>().size() == 16);
  CHECK(j["records"][0]["name"] == "mode_count");
  CHECK(j["records"][0]["value"] == 197.0);
  CHECK(j["passed"] == true);
}

TEST_CASE("experiment dispatch rejects unknown names and keys") {
  TempDir dir("dispatch");
  ExperimentConfig run;
  run.experiment = "uncharted";
  run.out_dir = dir.path.string();
  CHECK_THROWS_AS(run_experiment(run), config_error);

  run.experiment = "spectrum";
  run.config = Config::from_string("[geometry]\ncutoff = 8\nbogus = 1\n", "t");
  CHECK_THROWS_AS(run_experiment(run), config_error);
}

TEST_CASE("spectrum experiment writes a deterministic passing report") {
  TempDir a("spectrum_a"), b("spectrum_b");
  ExperimentConfig run;
  run.experiment = "spectrum";
  run.config = Config::from_string("[geometry]\ncutoff = 24\n", "t");

  run.out_dir = a.path.string();
  CHECK(run_experiment(run) == exit_ok);
  run.out_dir = b.path.string();
  CHECK(run_experiment(run) == exit_ok);

  const std::string ra = slurp((a.path / "report.json").string());
  CHECK(ra == slurp((b.path / "report.json").string()));
  CHECK(slurp((a.path / "modes.csv").string()) == slurp((b.path / "modes.csv").string()));

  const nlohmann::json j = nlohmann::json::parse(ra);
  CHECK(j["passed"] == true);
  CHECK(j["records"][0]["name"] == "mode_count");
  CHECK(j["records"][0]["value"] == 1793.0);

  // manifest carries the run metadata instead
  const nlohmann::json m = nlohmann::json::parse(slurp((a.path / "manifest.json").string()));
  CHECK(m["experiment"] == "spectrum");
  CHECK(m.contains("written_unix"));
}

TEST_CASE("experiments honor the replica floor") {
  TempDir dir("floor");
  ExperimentConfig run;
  run.experiment = "gff-cov";
  run.out_dir = dir.path.string();
  run.config = Config::from_string("[geometry]\ncutoff = 6\n[mc]\nreplicas = 7\n", "t");
  CHECK_THROWS_AS(run_experiment(run), config_error);
}
