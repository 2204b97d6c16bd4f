#pragma once

#include "asmtss/nilp.hpp"

#include <string>
#include <vector>

namespace asmtss::nilp {

using Heights = std::vector<std::vector<int>>;

/// Bottom-right triangle of a TSSCPP: tri[r][c] = a(n+r+1, n+c+1) for
/// 0 <= c <= r < n (1-based array indices on the right).
using Triangle = std::vector<std::vector<int>>;

/// Totally symmetric self-complementary plane partition in a 2n box, as a
/// 2n x 2n array of stack heights.
class Tsscpp {
 public:
  Tsscpp() = default;
  /// Throws std::invalid_argument naming the violated constraint.
  Tsscpp(int n, Heights heights);
  /// Rebuilds the whole array from its triangle; throws if the triangle is
  /// out of range or not monotone.
  static Tsscpp from_triangle(int n, const Triangle& tri);

  int n() const { return n_; }
  const Heights& heights() const { return heights_; }
  /// 1-based access a(i, j).
  int a(int i, int j) const { return heights_[i - 1][j - 1]; }
  Triangle triangle() const;
  std::vector<std::string> row_strings() const;

  friend bool operator==(const Tsscpp&, const Tsscpp&) = default;

 private:
  int n_ = 0;
  Heights heights_;
};

/// Empty when valid, otherwise the violated constraint: range, row or
/// column monotonicity, symmetry, self-complementarity, or the cyclic
/// symmetry of the cube set.
std::string tsscpp_violation(int n, const Heights& heights);

/// Empty when valid: 0 <= tri[r][c] <= n-1-r, weakly decreasing along rows
/// and down columns.
std::string triangle_violation(int n, const Triangle& tri);

/// All valid triangles in lexicographic order of cells read row by row.
std::vector<Triangle> enumerate_triangles(int n);
std::vector<Tsscpp> enumerate_tsscpps(int n);

Nilp triangle_to_nilp(int n, const Triangle& tri);
Triangle nilp_to_triangle(const Nilp& p);
Nilp tsscpp_to_nilp(const Tsscpp& a);
Tsscpp nilp_to_tsscpp(const Nilp& p);

/// Statistics read off the array, k = 1..n+1, in two equivalent forms.
/// Upper-left form, with a(t, n+1) := 2n-t+1:
///   sum_{t=1}^{n-k+1} (a(t,t+k-1) - a(t,t+k)) + #{t in [n-k+2, n] : a(t,n) > 2n-t+1}
/// Lower-right form, with a(t, n) := 2n-t:
///   sum_{t=n+k}^{2n} (a(t,t-k) - a(t,t-k+1)) + #{t in [n+1, n+k-1] : a(t,n+1) < 2n-t}
/// Throws std::out_of_range unless 1 <= k <= n+1.
int mrr_statistic_upper(const Tsscpp& a, int k);
int mrr_statistic_lower(const Tsscpp& a, int k);

}  // namespace asmtss::nilp
