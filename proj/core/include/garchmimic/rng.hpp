#pragma once

#include <cstdint>
#include <random>

namespace garchmimic {

// Seeded generator producing uniforms in the open interval (0,1).
// All samplers in the library draw through this class so that output is
// reproducible across platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // 53-bit uniform, strictly inside (0,1).
  double uniform() {
    const std::uint64_t x = gen_();
    return (static_cast<double>(x >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace garchmimic
