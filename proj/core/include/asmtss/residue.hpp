#pragma once

#include "asmtss/cyclo.hpp"
#include "asmtss/genpoly.hpp"
#include "asmtss/multipoly.hpp"
#include "asmtss/rational.hpp"
#include "asmtss/report.hpp"
#include "asmtss/series.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmtss::residue {

/// Top of every integration window unless overridden. All numerator and
/// geometric factors have nonnegative exponents in the integration variables,
/// so nothing above u^{-1} can ever fall back to u^{-1}; keeping only
/// negative exponents is exact.
inline constexpr int kTightWindow = -1;

/// The looser window top 2n. Results must not depend on which one is used.
inline int wide_window(int n) { return 2 * n; }

/// One factor of an integrand: either a polynomial, or 1/(1 - poly) expanded
/// as a geometric series. Which factors are geometric is declared by the
/// caller and never inferred.
template <Ring R>
struct Factor {
  MultiPoly<R> poly;
  bool geometric = false;
};

/// prod_l u_l^{-d_l} times an ordered list of factors, integrated over small
/// circles around u_l = 0. Variables that are not integrated over (x, y, ...)
/// are coefficients.
template <Ring R>
struct IntegrandSpec {
  std::vector<std::string> vars;
  std::vector<int> pole_orders;
  std::vector<Factor<R>> factors;

  void add_var(std::string name, int pole_order) {
    vars.push_back(std::move(name));
    pole_orders.push_back(pole_order);
  }
  void multiply(MultiPoly<R> p) { factors.push_back({std::move(p), false}); }
  /// Multiplies by 1/(1 - g).
  void divide_geometric(MultiPoly<R> g) { factors.push_back({std::move(g), true}); }
};

/// u1, ..., un (or u{first}, ...).
std::vector<std::string> integration_vars(int n, int first = 1);

namespace detail {

template <Ring R>
bool involves(const MultiPoly<R>& p, const std::string& v) {
  return p.degree_in(v) > 0;
}

template <Ring R>
void validate(const IntegrandSpec<R>& spec, const std::vector<std::string>& order, int hi) {
  if (spec.vars.size() != spec.pole_orders.size())
    throw std::invalid_argument("iterated_residue: one pole order per variable");
  if (hi < -1) throw std::invalid_argument("iterated_residue: window top must be at least -1");
  for (int d : spec.pole_orders)
    if (d < 0) throw std::invalid_argument("iterated_residue: negative pole order");
  std::vector<std::string> a = spec.vars, b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b || std::adjacent_find(a.begin(), a.end()) != a.end())
    throw std::invalid_argument("iterated_residue: order must list each integration variable once");
  for (const auto& f : spec.factors) {
    for (const auto& [e, c] : f.poly.terms()) {
      int valuation = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        const std::string& name = f.poly.vars()[i];
        if (std::find(spec.vars.begin(), spec.vars.end(), name) == spec.vars.end()) continue;
        if (e[i] < 0) throw ContourError("iterated_residue: negative exponent of '" + name + "' in a factor");
        valuation += e[i];
      }
      if (f.geometric && valuation == 0)
        throw ContourError("iterated_residue: geometric factor 1/(1-g) with g not vanishing at the origin");
    }
  }
}

}  // namespace detail

/// Formal residue at the origin in each variable of `order`, innermost
/// first. Each factor is multiplied in just before the first variable it
/// involves is integrated out, which keeps intermediate series small.
/// Returns a polynomial in the coefficient variables.
template <Ring R>
MultiPoly<R> iterated_residue(const IntegrandSpec<R>& spec, const std::vector<std::string>& order,
                              int hi = kTightWindow) {
  detail::validate(spec, order, hi);

  std::vector<std::string> coefficient_vars;
  for (const auto& f : spec.factors)
    for (const auto& v : f.poly.vars())
      if (std::find(spec.vars.begin(), spec.vars.end(), v) == spec.vars.end() &&
          std::find(coefficient_vars.begin(), coefficient_vars.end(), v) == coefficient_vars.end())
        coefficient_vars.push_back(v);

  SeriesLayout layout;
  std::vector<int> exps;
  for (std::size_t i = 0; i < spec.vars.size(); ++i) {
    layout.vars.push_back(spec.vars[i]);
    layout.windows.push_back(Window::range(std::min(-spec.pole_orders[i], -1), hi));
    exps.push_back(-spec.pole_orders[i]);
  }
  for (const auto& v : coefficient_vars) {
    layout.vars.push_back(v);
    layout.windows.push_back(Window::unbounded());
    exps.push_back(0);
  }
  auto state = TruncatedSeries<R>::monomial(layout, exps, R(1));

  std::vector<bool> applied(spec.factors.size(), false);
  auto apply = [&](std::size_t k) {
    const auto& f = spec.factors[k];
    state = f.geometric ? geometric_expand(state, f.poly) : state.times(f.poly);
    applied[k] = true;
  };

  for (const auto& v : order) {
    for (std::size_t k = 0; k < spec.factors.size(); ++k)
      if (!applied[k] && detail::involves(spec.factors[k].poly, v)) apply(k);
    state = state.residue_at_zero(v);
    if (state.is_zero()) return MultiPoly<R>();
  }
  for (std::size_t k = 0; k < spec.factors.size(); ++k)
    if (!applied[k]) apply(k);
  return state.to_poly();
}

/// Integrates the last-indexed variable first.
template <Ring R>
MultiPoly<R> iterated_residue(const IntegrandSpec<R>& spec) {
  std::vector<std::string> order(spec.vars.rbegin(), spec.vars.rend());
  return iterated_residue(spec, order);
}

enum class UForm { kRaw, kAfterU1 };

std::string to_string(UForm form);

using AVector = std::vector<MultiPoly<Rational>>;

/// prod_{l=2}^n (1+u_l)(1+x u_l) / (u_l^{2l-2} (1+u_l(1-y)))
///   * prod_{l<m} (u_m-u_l)(1+u_m+u_m u_l)
IntegrandSpec<Rational> spec_A(int n);

/// kRaw: prod_{i=1}^n u_i^{-(2i-1)} / (1-u_i^2) * prod_{k<i} (1+t_k u_i)
///         * prod_{j>i} (u_j-u_i)/(1-u_j u_i),  t_0 = x, t_1 = y, t_k = 1.
/// kAfterU1: prod_{i=2}^n u_i^{-(2i-2)} (1+x u_i)(1+y u_i)(1+u_i)^{i-2}
///         * prod_{i<j} (u_j-u_i) / prod_{i<=j} (1-u_j u_i).
IntegrandSpec<Rational> spec_U(int n, UForm form);

/// prod_{l=1}^{n-1} (1+u_l+a_l u_l^2)(1+x u_l) / (u_l^{2l} (1+u_l(1-y)))
///   * prod_{l<m} (u_m-u_l)(1+u_m+u_m u_l).  Needs n-1 entries in a.
IntegrandSpec<Rational> spec_I(int n, const AVector& a);

GenPoly integral_A(int n, int hi = kTightWindow);
GenPoly integral_U(int n, UForm form, int hi = kTightWindow);
GenPoly integral_I(int n, const AVector& a, int hi = kTightWindow);

/// a_l = y(1-y) for every l.
AVector a_vector_u(int n);
/// Random rational linear forms c0 + c1 x + c2 y.
AVector a_vector_random(int n, std::uint64_t seed);

/// Both sides of
///   oint phi prod u_i^{-2i} prod_{i<j} (u_j-u_i)(1+tau u_j+u_i u_j)
///   = oint phi prod (1+tau u_i)^{i-1} u_i^{-2i} prod_{i<j} (u_j-u_i) / prod_{i<=j} (1-u_i u_j)
/// in variables u1..un. Throws std::invalid_argument when phi is not
/// symmetric in u1..un.
Report zeilid_check(int n, const Rational& tau, const MultiPoly<Rational>& phi);

/// prod_{i=1}^n (1+x u_i)(1+y u_i).
MultiPoly<Rational> phi_xy(int n);
/// Random integer combination of monomial symmetric functions in u1..un.
MultiPoly<Rational> random_symmetric_phi(int n, std::uint64_t seed);

/// True when p is invariant under every permutation of the given variables.
template <Ring R>
bool is_symmetric(const MultiPoly<R>& p, const std::vector<std::string>& vars);

/// Sum over even r_0 and odd gaps with r_{n-1} <= D of det[u_i^{r_{j-1}}],
/// against prod_{j>i} (u_j-u_i) / prod_{j>=i} (1-u_j u_i), both truncated to
/// total degree D. Needs D >= 2n.
Report even_partition_sum_check(int n, int degree_bound);

/// integral_A = brute-force doubly refined ASM polynomial and both forms of
/// integral_U = brute-force NILP polynomial.
Report integral_route_check(int n, unsigned workers = 1);

/// integral_I for a = 0, a = y(1-y) and `random_vectors` random a.
Report a_independence_check(int n, int random_vectors, std::uint64_t seed);

/// Every integral recomputed with window tops 2n and 2n+2 must match the
/// tight window.
Report window_regression_check(int n);

// Antisymmetrization identity with spectral parameters.

/// Thrown when a sample point hits a pole.
class SingularSample : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (x-y)(xy-1)
Rational h1(const Rational& x, const Rational& y);
/// (qx - y/q)(qxy - 1/q)
Rational hq(const Rational& x, const Rational& y, const Rational& q);

/// sum over permutations s of sign(s) phi(w_s) with
///   phi(w) = prod_{i<j} (q w_i - w_j/q) / (prod_{i<=j} h1(w_j,z_i) prod_{i>=j} hq(w_j,z_i)),
/// q = r^2.
Rational bn_brute(int n, const std::vector<Rational>& w, const std::vector<Rational>& z, const Rational& r,
                  unsigned workers = 1);
/// q^{n(n-1)/2} det[1/(h1 hq)(w_i,z_j)] / prod_{i<j} h1(z_i,z_j)(1-q^2 w_i w_j).
Rational bn_closed(int n, const std::vector<Rational>& w, const std::vector<Rational>& z, const Rational& r);

/// det[1/h1(w_i,z_j)] / ((q^{-2}-1)^n prod_i z_i (1-q^2 w_i^2)).
Rational fbar_determinant(int n, const std::vector<Rational>& w, const std::vector<Rational>& z, const Rational& r);
/// The same quantity through the Cauchy product formula.
Rational fbar_cauchy(int n, const std::vector<Rational>& w, const std::vector<Rational>& z, const Rational& r);

struct BnSample {
  std::vector<Rational> w, z;
  Rational r;
};

/// Seeded sample with q = r^2 not in {0, 1, -1}; nothing is checked for
/// singularity here.
BnSample random_bn_sample(int n, std::uint64_t seed);

/// bn_brute = bn_closed at `samples` points (check "bn"), singular samples
/// resampled.
Report bn_check(int n, int samples, std::uint64_t seed, unsigned workers = 1);
/// fbar_determinant = fbar_cauchy (check "cauchy").
Report cauchy_check(int n, int samples, std::uint64_t seed);
/// 1/(h1 hq) = (1/h1 - 1/hq) / (z (1-q^2 w^2)(q^{-2}-1)) (check "f-split").
Report f_split_check(int samples, std::uint64_t seed);

/// At q = exp(2 pi i/3), tau = -(q+1/q): the antisymmetrized product
/// identity as polynomials (check "homogeneous-as"), and
///   n! oint phi prod u_i^{-2i} prod_{i<j} (u_j-u_i)(1+tau u_j+u_i u_j)
///   = oint phi prod u_i^{-2n} prod_{i<j} (u_j-u_i)(u_i-u_j)(u_i+u_j+tau u_i u_j) / prod_{i<=j} (1-u_i u_j)
/// with the common factor (q-1/q)^{-n(n+2)}, for phi = 1 and
/// phi = prod (1+x u_i)(1+y u_i) (check "homogeneous-limit").
Report homogeneous_limit_check(int n);

template <Ring R>
bool is_symmetric(const MultiPoly<R>& p, const std::vector<std::string>& vars) {
  auto swapped = [&](const std::string& a, const std::string& b) {
    MultiPoly<R> out;
    const int ia = p.var_index(a), ib = p.var_index(b);
    for (const auto& [e, c] : p.terms()) {
      std::vector<std::string> names = p.vars();
      if (ia >= 0) names[ia] = b;
      if (ib >= 0) names[ib] = a;
      out += MultiPoly<R>::monomial(names, e, c);
    }
    return out;
  };
  for (std::size_t i = 0; i + 1 < vars.size(); ++i)
    if (!(swapped(vars[i], vars[i + 1]) == p)) return false;
  return true;
}

}  // namespace asmtss::residue
