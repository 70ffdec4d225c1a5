#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace scenediff {

// splitmix64 step; the documented seed-derivation function. Child streams
// (per-sample scenes, per-chain noise, per-step training draws) use
// derive_seed(master, stream_id) so replay never depends on consumption order.
uint64_t derive_seed(uint64_t master, uint64_t stream_id);

// Seeded generator with fixed output mappings. std::mt19937_64 output is
// specified by the standard; the uniform/normal mappings below are pinned here
// rather than delegated to std::*_distribution (whose algorithms are
// implementation-defined), so identical seeds give identical streams.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(seed) {}

  uint64_t seed() const { return seed_; }
  uint64_t next_u64() { return engine_(); }

  // [0,1), 53-bit resolution
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // standard normal via Box-Muller; consumes two uniforms per draw, no cache
  float normal() {
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return static_cast<float>(r * std::cos(6.283185307179586476925286766559 * u2));
  }

  // inclusive bounds, multiply-shift bounded draw
  int uniform_int(int lo, int hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    auto wide = static_cast<unsigned __int128>(next_u64()) * span;
    return lo + static_cast<int>(wide >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  Rng split(uint64_t stream_id) const { return Rng(derive_seed(seed_, stream_id)); }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace scenediff
