#pragma once

#include "asmtss/cyclo.hpp"
#include "asmtss/matrix.hpp"
#include "asmtss/report.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace asmtss::pfn {

/// (n-1, n-1, n-2, n-2, ..., 1, 1, 0, 0), length 2n.
std::vector<int> staircase_shape(int n);

/// h_0..h_K of the given values.
template <Ring R>
std::vector<R> complete_homogeneous(const std::vector<R>& z, int K) {
  std::vector<R> h(K + 1, R(0));
  h[0] = R(1);
  for (const auto& x : z)
    for (int k = 1; k <= K; ++k) h[k] = h[k] + x * h[k - 1];
  return h;
}

/// Schur function of the staircase shape in 2n values, by the Jacobi-Trudi
/// determinant det[h_{lambda_i - i + j}]. Valid at repeated values.
template <Ring R>
R schur_staircase(int n, const std::vector<R>& z) {
  if (n < 1 || static_cast<int>(z.size()) != 2 * n) throw std::invalid_argument("schur_staircase: need 2n values");
  const std::vector<int> lambda = staircase_shape(n);
  const int L = 2 * n - 2;
  if (L == 0) return R(1);
  const auto h = complete_homogeneous(z, lambda[0] + L);
  SquareMatrix<R> m(L);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) {
      const int k = lambda[i] - i + j;
      m(i, j) = k < 0 ? R(0) : h[k];
    }
  return determinant(m);
}

/// The same Schur function as det[z_i^{2n-j+lambda_j}] / det[z_i^{2n-j}].
/// Throws std::domain_error when two values coincide.
template <Field F>
F schur_staircase_bialternant(int n, const std::vector<F>& z) {
  const int m = 2 * n;
  if (n < 1 || static_cast<int>(z.size()) != m) throw std::invalid_argument("schur_staircase_bialternant: need 2n values");
  const std::vector<int> lambda = staircase_shape(n);
  SquareMatrix<F> num(m), den(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      num(i, j) = power(z[i], m - 1 - j + lambda[j]);
      den(i, j) = power(z[i], m - 1 - j);
    }
  const F d = determinant(den);
  if (d.is_zero()) throw std::domain_error("schur_staircase_bialternant: repeated values");
  return determinant(num) / d;
}

/// Sign vectors eps in {-1,+1}^{2n} with total 0 and every prefix sum <= 0,
/// in lexicographic order.
std::vector<std::vector<int>> dyck_specializations(int n);

/// Schur function at (q^{eps_1}, ..., q^{eps_2n}) against 3^{n(n-1)/2}, for
/// every Dyck specialization, q = exp(2 pi i/3).
Report verify_dyck_values(int n, unsigned workers = 1);

using CycloEvaluator = std::function<Cyclo(const std::vector<Cyclo>&)>;

/// For each sample, picks random values and indices i < j < k, sets
/// z_j = q^2 z_i and z_k = q^4 z_i, and expects p to vanish.
Report wheel_check(const CycloEvaluator& p, int n, int samples, std::uint64_t seed);

/// At random rational points with z_j = q^2 z_i, compares s_{Y_n} with
///   prod_{k != i,j} (q^{-2} z_i - z_k) s_{Y_{n-1}}(z without z_i, z_j)
/// and also with the same product written with q z_i. Records with check
/// "recursion" and "recursion-constant" (ratio of the two right-hand
/// sides, expected 1). Sample index 0 uses z_i = 0 when samples > 0.
Report recursion_check_q3(int n, int samples, std::uint64_t seed);

/// Finite residue sum for Z'_n over index sequences K = (k_1, ..., k_n),
/// k_l <= 2l-1 pairwise distinct. The values must be pairwise distinct
/// (std::domain_error otherwise); q is a parameter, the identity with the
/// Schur function holds at q = exp(2 pi i/3).
template <Field F>
F zprime_residue_sum(int n, const std::vector<F>& z, const F& q) {
  const int m = 2 * n;
  if (n < 1 || static_cast<int>(z.size()) != m) throw std::invalid_argument("zprime_residue_sum: need 2n values");
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (z[a] == z[b]) throw std::domain_error("zprime_residue_sum: coincident points");
  const F qi = F(1) / q;
  auto pair = [&](int i, int j) { return q * z[i - 1] - qi * z[j - 1]; };  // 1-based
  F total(0);
  std::vector<int> k(n + 1, 0), pos(m + 1, 0);  // pos[i] = l when k_l = i
  std::function<void(int)> rec = [&](int l) {
    if (l <= n) {
      for (int v = 1; v <= 2 * l - 1; ++v) {
        if (pos[v]) continue;
        k[l] = v;
        pos[v] = l;
        rec(l + 1);
        pos[v] = 0;
      }
      return;
    }
    int inversions = 0;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) inversions += k[a] > k[b];
    F term(inversions % 2 ? -1 : 1);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) term = term * pair(k[a], k[b]);
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        if (!pos[i] || j < 2 * pos[i] - 1) term = term * pair(i, j);
    for (int i = 1; i <= n; ++i)
      if (2 * i - 1 != k[i]) term = term * pair(2 * i - 1, k[i]);
    F den(1);
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= 2 * j - 1; ++i)
        if (!pos[i] || i > k[j]) den = den * (z[k[j] - 1] - z[i - 1]);
    total = total + term / den;
  };
  rec(1);
  if ((n * (n - 1) / 2) % 2) total = -total;
  return total;
}

Cyclo zprime_residue_sum(int n, const std::vector<Cyclo>& z);

/// zprime_residue_sum against schur_staircase at random distinct points.
Report zprime_check(int n, int samples, std::uint64_t seed, unsigned workers = 1);

/// Normalized brute-force partition sum at s_i (z_i = s_i^2), q = exp(2 pi i/3),
/// against schur_staircase, at random points.
Report six_vertex_schur_check(int n, int samples, std::uint64_t seed);

}  // namespace asmtss::pfn
