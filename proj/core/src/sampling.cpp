#include "asmtss/sampling.hpp"

#include <algorithm>

namespace asmtss {

int SamplePoints::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational SamplePoints::rational() {
  const int num = integer(-13, 13);
  const int den = integer(1, 13);
  return Rational(num, den);
}

Rational SamplePoints::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (!r.is_zero()) return r;
  }
}

Cyclo SamplePoints::cyclo() { return {rational(), rational()}; }

std::vector<Rational> SamplePoints::distinct_rationals(std::size_t count) {
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational r = nonzero_rational();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

}  // namespace asmtss
