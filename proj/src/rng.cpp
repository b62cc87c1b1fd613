#include "lqg/rng.hpp"

#include <cmath>

namespace lqg {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed(seed), stream(stream) {
  std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  eng_.seed(sq);
}

double RngStream::uniform() {
  // 53-bit mantissa from the top bits, uniform on [0, 1)
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * m;
  has_spare_ = true;
  return u * m;
}

}  // namespace lqg
