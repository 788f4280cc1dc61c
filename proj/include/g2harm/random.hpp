#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "g2harm/types.hpp"

namespace g2harm {

/// splitmix64 mix of (seed, index); gives every sample in a loop its own
/// stream so parallel and serial sweeps draw identical inputs.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// Seeded source of unit-scale test inputs.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double normal() { return normal_(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Vec7R real_vector();
  Vec7C complex_vector();
  /// Gaussian direction normalized to unit Euclidean (Hermitian) norm.
  Vec7R unit_real();
  Vec7C unit_complex();
  /// Random skew matrix with unit Frobenius norm.
  Mat7R unit_skew();
  std::array<double, 14> gaussian14();

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

}  // namespace g2harm
