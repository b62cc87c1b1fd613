#pragma once
#include <cstdint>
#include <random>

namespace lqg {

// reproducible stream: the (seed, stream) pair fully determines the output
// sequence, independent of how many streams exist or which thread pulls from
// it.  replica i of an experiment always owns stream (base + i)
struct RngStream {
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  double uniform();  // [0, 1)
  double normal();   // standard normal via the polar method

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace lqg
