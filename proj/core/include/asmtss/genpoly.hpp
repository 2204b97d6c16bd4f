#pragma once

#include "asmtss/multipoly.hpp"
#include "asmtss/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace asmtss {

/// Which index convention a bivariate ASM generating polynomial uses:
/// kTilde counts x^{i-1} y^{j-1} with j the last-row column, kReversed uses
/// y^{n-j}. kPlain marks polynomials that are not ASM-indexed (path
/// statistics, integrals).
enum class Convention { kTilde, kReversed, kPlain };

const char* to_string(Convention c);

/// Bivariate generating polynomial with nonnegative integer coefficients.
/// Equality compares coefficients only, not the convention tag.
class GenPoly {
 public:
  using Coefficients = std::map<std::pair<int, int>, std::int64_t>;

  GenPoly() = default;
  explicit GenPoly(Convention convention) : convention_(convention) {}

  /// Converts an exact polynomial in two named variables; throws if a
  /// coefficient is negative or not an integer, or other variables occur.
  static GenPoly from_poly(const MultiPoly<Rational>& p, const std::string& x = "x", const std::string& y = "y",
                           Convention convention = Convention::kPlain);

  void add(int i, int j, std::int64_t count = 1);

  Convention convention() const { return convention_; }
  void set_convention(Convention c) { convention_ = c; }
  const Coefficients& coefficients() const { return coeffs_; }
  std::int64_t coefficient(int i, int j) const;
  std::int64_t total() const;
  int degree_x() const;
  int degree_y() const;

  /// Dense table [i][j] = coefficient of x^i y^j.
  std::vector<std::vector<std::int64_t>> matrix() const;

  template <class R>
  R evaluate(const R& x, const R& y) const {
    R sum(0);
    for (const auto& [ij, c] : coeffs_) {
      R term(static_cast<int>(c));
      for (int k = 0; k < ij.first; ++k) term = term * x;
      for (int k = 0; k < ij.second; ++k) term = term * y;
      sum = sum + term;
    }
    return sum;
  }

  MultiPoly<Rational> to_poly(const std::string& x = "x", const std::string& y = "y") const;
  std::string to_string(const std::string& x = "x", const std::string& y = "y") const;

  friend bool operator==(const GenPoly& a, const GenPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  Convention convention_ = Convention::kPlain;
  Coefficients coeffs_;
};

}  // namespace asmtss
