#pragma once

#include "asmtss/asm.hpp"
#include "asmtss/cyclo.hpp"
#include "asmtss/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmtss::asm6v {

/// Local arrow pattern at a vertex, named by its (left edge, top edge)
/// arrows: a1 = (right, up), a2 = (left, down), b1 = (right, down),
/// b2 = (left, up). c1 has both horizontal arrows pointing in, c2 both out.
enum class Vertex : std::uint8_t { a1, a2, b1, b2, c1, c2 };

char weight_class(Vertex v);  // 'a', 'b' or 'c'
const char* to_string(Vertex v);

/// Arrow configuration on the n x n grid.
///
/// right[r][c] (c = 0..n) is the horizontal edge to the left of vertex
/// (r, c), true when the arrow points right. up[r][c] (r = 0..n) is the
/// vertical edge above vertex (r, c), true when the arrow points up.
class VertexGrid {
 public:
  VertexGrid() = default;
  /// Throws std::invalid_argument if the ice rule or the domain wall
  /// boundary fails anywhere.
  VertexGrid(int n, std::vector<std::vector<bool>> right, std::vector<std::vector<bool>> up);

  int n() const { return n_; }
  Vertex vertex(int r, int c) const;
  bool arrow_right(int r, int c) const { return right_[r][c]; }
  bool arrow_up(int r, int c) const { return up_[r][c]; }

  friend bool operator==(const VertexGrid&, const VertexGrid&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<bool>> right_;
  std::vector<std::vector<bool>> up_;
};

/// Empty string when the configuration is valid, otherwise the first
/// violation found.
std::string vertex_grid_violation(int n, const std::vector<std::vector<bool>>& right,
                                  const std::vector<std::vector<bool>>& up);

VertexGrid asm_to_six_vertex(const Asm& a);
Asm six_vertex_to_asm(const VertexGrid& g);

/// Ice-rule configurations with domain wall boundary, found by a search
/// over vertex types that never looks at ASMs.
std::vector<VertexGrid> enumerate_six_vertex(int n);

/// Vertex types of every ASM of size n, in enumeration order.
std::vector<std::vector<Vertex>> vertex_types_all(int n);

/// Sum over configurations of the product of vertex weights
///   a = w/r - r*z,  b = z/r - r*w,  c = (1/q - q) * s_row * s_col
/// with q = r^2, row parameter z = s_i^2 (i = 1..n) and column parameter
/// w = s_{n+j}^2.
template <Field F>
F weighted_partition_sum(int n, const std::vector<F>& s, const F& r) {
  if (static_cast<int>(s.size()) != 2 * n) throw std::invalid_argument("weighted_partition_sum: need 2n parameters");
  const F q = r * r;
  const F cw = F(1) / q - q;
  F total(0);
  for (const auto& types : vertex_types_all(n)) {
    F w(1);
    for (int i = 0; i < n; ++i) {
      const F z = s[i] * s[i];
      for (int j = 0; j < n; ++j) {
        const F col = s[n + j] * s[n + j];
        switch (weight_class(types[i * n + j])) {
          case 'a':
            w = w * (col / r - r * z);
            break;
          case 'b':
            w = w * (z / r - r * col);
            break;
          default:
            w = w * cw * s[i] * s[n + j];
        }
      }
    }
    total = total + w;
  }
  return total;
}

/// Z_n = Ztilde / ((-1)^{n(n-1)/2} (1/q - q)^n prod_{i=1}^{2n} s_i).
template <Field F>
F normalize_Z(const F& ztilde, int n, const std::vector<F>& s, const F& r) {
  const F q = r * r;
  F norm = power(F(1) / q - q, n);
  if ((n * (n - 1) / 2) % 2) norm = -norm;
  for (const auto& v : s) norm = norm * v;
  if (norm.is_zero()) throw std::domain_error("normalize_Z: zero normalization (some s_i = 0)");
  return ztilde / norm;
}

/// The normalized partition function written in z_i directly. A line with
/// m c-vertices carries z^{(m-1)/2}, and m is always odd, so no square roots
/// of the spectral parameters are needed. Agrees with normalize_Z of
/// weighted_partition_sum at z = s^2.
template <Field F>
F partition_function(int n, const std::vector<F>& z, const F& r) {
  if (static_cast<int>(z.size()) != 2 * n) throw std::invalid_argument("partition_function: need 2n parameters");
  const F q = r * r;
  const F cw = F(1) / q - q;
  F total(0);
  std::vector<int> m(2 * n);
  for (const auto& types : vertex_types_all(n)) {
    F w(1);
    std::fill(m.begin(), m.end(), 0);
    int nc = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        switch (weight_class(types[i * n + j])) {
          case 'a':
            w = w * (z[n + j] / r - r * z[i]);
            break;
          case 'b':
            w = w * (z[i] / r - r * z[n + j]);
            break;
          default:
            ++nc;
            ++m[i];
            ++m[n + j];
        }
      }
    }
    w = w * power(cw, nc - n);
    for (int k = 0; k < 2 * n; ++k) w = w * power(z[k], (m[k] - 1) / 2);
    total = total + w;
  }
  if ((n * (n - 1) / 2) % 2) total = -total;
  return total;
}

/// Korepin's specialization z_{n+1} = z_1 / q: returns (left, right) of
///   Z_n = q^{1-n} prod_{j=2}^{n} (z_1 - q^2 z_j) prod_{j=n+2}^{2n} (z_1 - z_j/q) Z_{n-1}(rest).
template <Field F>
std::pair<F, F> korepin_sides(int n, std::vector<F> z, const F& r) {
  if (n < 1 || static_cast<int>(z.size()) != 2 * n) throw std::invalid_argument("korepin_sides: need 2n parameters");
  const F q = r * r;
  z[n] = z[0] / q;
  const F lhs = partition_function(n, z, r);
  F pref = power(q, 1 - n);
  for (int j = 2; j <= n; ++j) pref = pref * (z[0] - q * q * z[j - 1]);
  for (int j = n + 2; j <= 2 * n; ++j) pref = pref * (z[0] - z[j - 1] / q);
  std::vector<F> rest;
  for (int k = 1; k < n; ++k) rest.push_back(z[k]);
  for (int k = n + 1; k < 2 * n; ++k) rest.push_back(z[k]);
  return {lhs, pref * partition_function(n - 1, rest, r)};
}

/// Value of A_n(t,u) (kReversed) or Atilde_n(t,u) (kTilde) obtained from the
/// partition function at q = exp(2 pi i/3), all parameters 1 except
///   z_1 = (1+qt)/(q+t),  z_{2n} = (1+qu)/(q+u)   (kReversed),
///   z_1 = (1+qt)/(q+t),  z_{2n} = (q+u)/(1+qu)   (kTilde),
/// times (q^2 (q+t)(q+u))^{n-1} (resp. (1+qu)) over 3^{n(n-1)/2}.
/// Throws std::domain_error if a denominator vanishes.
Cyclo refined_from_Z(int n, const Cyclo& t, const Cyclo& u, Convention convention);

}  // namespace asmtss::asm6v
