#pragma once
#include <stdexcept>
#include <string>

namespace lqg {

// exit-code contract for the CLI and the acceptance harness
enum exit_code : int {
  exit_ok = 0,
  exit_assert = 2,    // a numerical check or invariant failed
  exit_config = 3,    // bad input: config, parameter domain, refused regime
  exit_resource = 4,  // requested work exceeds hard caps
};

struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// thrown when an internal numerical invariant is violated at runtime
struct check_error : std::runtime_error {
  explicit check_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw config_error(what);
}

}  // namespace lqg
