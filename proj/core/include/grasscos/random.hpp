#pragma once

#include <cstdint>
#include <random>

namespace grasscos {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of sub-stream `index` derived from `master`. Distinct indices give
/// statistically independent mt19937_64 streams.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

inline Rng make_stream(std::uint64_t master, std::uint64_t index) {
  return Rng(stream_seed(master, index));
}

}  // namespace grasscos
