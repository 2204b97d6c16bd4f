#pragma once

#include "asmtss/cyclo.hpp"
#include "asmtss/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace asmtss {

/// Seeded source of small-height exact sample points: numerators in
/// [-13, 13], denominators in [1, 13].
class SamplePoints {
 public:
  explicit SamplePoints(std::uint64_t seed) : rng_(seed) {}

  Rational rational();
  Rational nonzero_rational();
  Cyclo cyclo();
  /// `count` rationals, pairwise distinct and nonzero.
  std::vector<Rational> distinct_rationals(std::size_t count);
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace asmtss
