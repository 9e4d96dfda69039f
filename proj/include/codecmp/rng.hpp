#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace codecmp::rng {

// splitmix64 finalizer (full-avalanche 64-bit mix).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stateless counter-based value at (seed, stream, counter). The value does not
// depend on evaluation order, so chunked or parallel fills are bit-identical
// to sequential ones.
constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) {
  return mix64(mix64(mix64(seed) ^ stream) ^ counter);
}

// Uniform in (0,1); never returns 0, so it is safe under log().
inline double uniform01(std::uint64_t seed, std::uint64_t stream,
                        std::uint64_t counter) {
  return (static_cast<double>(at(seed, stream, counter) >> 11) + 0.5) *
         0x1.0p-53;
}

// Standard normal via Box-Muller on two counter slots.
inline double gaussian(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t counter) {
  const double u1 = uniform01(seed, stream, 2 * counter);
  const double u2 = uniform01(seed, stream, 2 * counter + 1);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

// Derives an unrelated sub-seed; used to domain-separate independent
// consumers that share one user-facing seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return mix64(mix64(seed) ^ (tag * 0xd6e8feb86659fd93ULL + 1));
}

}  // namespace codecmp::rng
