#pragma once

#include "asmtss/genpoly.hpp"
#include "asmtss/matrix.hpp"
#include "asmtss/multipoly.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace asmtss::nilp {

/// Coefficient of u^{2i-r} in prod_{k=0}^{i} (1 + t_k u): the weight of the
/// single path from the i-th start to the end point r.
template <Ring R>
R lgv_path_weight(int i, int r, const std::vector<R>& t) {
  const int e = 2 * i - r;
  if (e < 0 || e > i + 1) return R(0);
  // elementary symmetric polynomial e_e(t_0, ..., t_i)
  std::vector<R> el(e + 1, R(0));
  el[0] = R(1);
  for (int k = 0; k <= i; ++k)
    for (int d = e; d >= 1; --d) el[d] = el[d] + el[d - 1] * t[k];
  return el[e];
}

/// Visits every end-point sequence 0 = r_0 < r_1 < ... < r_{n-1} with odd
/// gaps and r_i <= 2i+1.
void for_each_lgv_endpoints(int n, const std::function<void(const std::vector<int>&)>& visit);

/// Sum over end-point sequences of det[P_{i, r_j}]_{i,j=1..n-1}, where t_k
/// weights vertical steps in slice k (t_0 for the extra steps). Equals the
/// weighted count of path bundles of size n.
template <Ring R>
R lgv_genfun(int n, const std::vector<R>& t) {
  if (n < 1) throw std::invalid_argument("lgv_genfun: n must be positive");
  if (static_cast<int>(t.size()) < n) throw std::invalid_argument("lgv_genfun: need n weights");
  R total(0);
  for_each_lgv_endpoints(n, [&](const std::vector<int>& r) {
    SquareMatrix<R> m(n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) m(i - 1, j - 1) = lgv_path_weight(i, r[j], t);
    total = total + determinant(m);
  });
  return total;
}

/// lgv_genfun with t_0 = x, t_1 = y and all other weights 1.
GenPoly lgv_genfun_xy(int n);

}  // namespace asmtss::nilp
