#pragma once

#include <cstdint>

namespace fpplab::geom {

// Identifies one reproducible random stream. Streams for replicate k of a run
// with master seed m are derived by a fixed 64-bit mixing function, so results
// are bit-stable for a given build regardless of thread count or replay order.
struct SeedStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

std::uint64_t splitmix64(std::uint64_t& state);

// xoshiro256++ seeded from a SeedStream via splitmix64.
class RandomEngine {
 public:
  explicit RandomEngine(SeedStream stream);

  std::uint64_t next_u64();
  // Uniform in [0, 1), 53 random bits.
  double uniform01();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  std::uint64_t poisson(double mean);

 private:
  std::uint64_t s_[4];
};

}  // namespace fpplab::geom
