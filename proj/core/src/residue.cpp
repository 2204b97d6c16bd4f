#include "asmtss/residue.hpp"

#include "asmtss/asm.hpp"
#include "asmtss/matrix.hpp"
#include "asmtss/nilp.hpp"
#include "asmtss/parallel.hpp"
#include "asmtss/sampling.hpp"

#include <numeric>
#include <random>

namespace asmtss::residue {

namespace {

using Poly = MultiPoly<Rational>;

Poly var(const std::string& name) { return Poly::variable(name); }

template <Ring R>
MultiPoly<R> pvar(const std::string& name) {
  return MultiPoly<R>::variable(name);
}

void require_n(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
}

int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Rational factorial(int n) {
  Rational f(1);
  for (int k = 2; k <= n; ++k) f = f * Rational(k);
  return f;
}

GenPoly to_genpoly(const Poly& p, Convention c) { return GenPoly::from_poly(p, "x", "y", c); }

template <Ring R>
MultiPoly<R> keep_total_degree(const MultiPoly<R>& p, int bound) {
  MultiPoly<R> out;
  for (const auto& [e, c] : p.terms())
    if (std::accumulate(e.begin(), e.end(), 0) <= bound) out += MultiPoly<R>::monomial(p.vars(), e, c);
  return out;
}

Rational nonzero_or_singular(const Rational& v, const char* what) {
  if (v.is_zero()) throw SingularSample(std::string(what) + ": singular sample");
  return v;
}

void check_sizes(int n, const std::vector<Rational>& w, const std::vector<Rational>& z, const char* what) {
  require_n(n, what);
  if (static_cast<int>(w.size()) != n || static_cast<int>(z.size()) != n)
    throw std::invalid_argument(std::string(what) + ": need n values of w and of z");
}

std::vector<std::string> sample_strings(const BnSample& s) {
  std::vector<std::string> out{"r=" + s.r.to_string()};
  for (std::size_t i = 0; i < s.w.size(); ++i) out.push_back("w" + std::to_string(i + 1) + "=" + s.w[i].to_string());
  for (std::size_t i = 0; i < s.z.size(); ++i) out.push_back("z" + std::to_string(i + 1) + "=" + s.z[i].to_string());
  return out;
}

}  // namespace

std::vector<std::string> integration_vars(int n, int first) {
  std::vector<std::string> v;
  for (int i = first; i < first + n; ++i) v.push_back("u" + std::to_string(i));
  return v;
}

std::string to_string(UForm form) { return form == UForm::kRaw ? "raw" : "after-u1"; }

IntegrandSpec<Rational> spec_A(int n) {
  require_n(n, "spec_A");
  IntegrandSpec<Rational> s;
  const Poly x = var("x"), y = var("y");
  for (int l = 2; l <= n; ++l) {
    const Poly u = var("u" + std::to_string(l));
    s.add_var("u" + std::to_string(l), 2 * l - 2);
    s.multiply(1 + u);
    s.multiply(1 + x * u);
    s.divide_geometric(u * (y - 1));
  }
  for (int l = 2; l <= n; ++l)
    for (int m = l + 1; m <= n; ++m) {
      const Poly ul = var("u" + std::to_string(l)), um = var("u" + std::to_string(m));
      s.multiply(um - ul);
      s.multiply(1 + um + um * ul);
    }
  return s;
}

IntegrandSpec<Rational> spec_U(int n, UForm form) {
  require_n(n, "spec_U");
  IntegrandSpec<Rational> s;
  const Poly x = var("x"), y = var("y");
  auto u = [](int i) { return var("u" + std::to_string(i)); };
  if (form == UForm::kRaw) {
    for (int i = 1; i <= n; ++i) {
      s.add_var("u" + std::to_string(i), 2 * i - 1);
      s.divide_geometric(u(i) * u(i));
      for (int k = 0; k < i; ++k) {
        const Poly t = k == 0 ? x : k == 1 ? y : Poly(1);
        s.multiply(1 + t * u(i));
      }
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        s.multiply(u(j) - u(i));
        s.divide_geometric(u(j) * u(i));
      }
    return s;
  }
  for (int i = 2; i <= n; ++i) {
    s.add_var("u" + std::to_string(i), 2 * i - 2);
    s.multiply(1 + x * u(i));
    s.multiply(1 + y * u(i));
    for (int k = 0; k < i - 2; ++k) s.multiply(1 + u(i));
  }
  for (int i = 2; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (j > i) s.multiply(u(j) - u(i));
      s.divide_geometric(u(j) * u(i));
    }
  return s;
}

IntegrandSpec<Rational> spec_I(int n, const AVector& a) {
  require_n(n, "spec_I");
  if (static_cast<int>(a.size()) != n - 1) throw std::invalid_argument("spec_I: need n-1 entries in a");
  IntegrandSpec<Rational> s;
  const Poly x = var("x"), y = var("y");
  for (int l = 1; l <= n - 1; ++l) {
    const Poly u = var("u" + std::to_string(l));
    s.add_var("u" + std::to_string(l), 2 * l);
    s.multiply(1 + u + a[l - 1] * u * u);
    s.multiply(1 + x * u);
    s.divide_geometric(u * (y - 1));
  }
  for (int l = 1; l <= n - 1; ++l)
    for (int m = l + 1; m <= n - 1; ++m) {
      const Poly ul = var("u" + std::to_string(l)), um = var("u" + std::to_string(m));
      s.multiply(um - ul);
      s.multiply(1 + um + um * ul);
    }
  return s;
}

namespace {

Poly integrate(const IntegrandSpec<Rational>& s, int hi) {
  std::vector<std::string> order(s.vars.rbegin(), s.vars.rend());
  return iterated_residue(s, order, hi);
}

}  // namespace

GenPoly integral_A(int n, int hi) { return to_genpoly(integrate(spec_A(n), hi), Convention::kTilde); }

GenPoly integral_U(int n, UForm form, int hi) { return to_genpoly(integrate(spec_U(n, form), hi), Convention::kPlain); }

GenPoly integral_I(int n, const AVector& a, int hi) {
  return to_genpoly(integrate(spec_I(n, a), hi), Convention::kTilde);
}

AVector a_vector_u(int n) {
  require_n(n, "a_vector_u");
  const Poly y = var("y");
  return AVector(n - 1, y * (1 - y));
}

AVector a_vector_random(int n, std::uint64_t seed) {
  require_n(n, "a_vector_random");
  SamplePoints rng(seed);
  AVector a;
  for (int l = 1; l < n; ++l) a.push_back(Poly(rng.rational()) + rng.rational() * var("x") + rng.rational() * var("y"));
  return a;
}

MultiPoly<Rational> phi_xy(int n) {
  Poly phi(1);
  for (int i = 1; i <= n; ++i) {
    const Poly u = var("u" + std::to_string(i));
    phi *= (1 + var("x") * u) * (1 + var("y") * u);
  }
  return phi;
}

MultiPoly<Rational> random_symmetric_phi(int n, std::uint64_t seed) {
  require_n(n, "random_symmetric_phi");
  SamplePoints rng(seed);
  const auto vars = integration_vars(n);
  Poly phi;
  const int terms = rng.integer(1, 3);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> lambda(n);
    for (auto& part : lambda) part = rng.integer(0, 3);
    std::sort(lambda.begin(), lambda.end());
    const Rational c = rng.nonzero_rational();
    do phi += Poly::monomial(vars, lambda, c);
    while (std::next_permutation(lambda.begin(), lambda.end()));
  }
  return phi;
}

Report zeilid_check(int n, const Rational& tau, const MultiPoly<Rational>& phi) {
  require_n(n, "zeilid_check");
  const auto vars = integration_vars(n);
  if (!is_symmetric(phi, vars)) throw std::invalid_argument("zeilid_check: phi is not symmetric in u1..u" + std::to_string(n));
  auto u = [](int i) { return var("u" + std::to_string(i)); };

  IntegrandSpec<Rational> lhs, rhs;
  for (int i = 1; i <= n; ++i) {
    lhs.add_var(vars[i - 1], 2 * i);
    rhs.add_var(vars[i - 1], 2 * i);
  }
  lhs.multiply(phi);
  rhs.multiply(phi);
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k < i - 1; ++k) rhs.multiply(1 + tau * u(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (j > i) {
        lhs.multiply(u(j) - u(i));
        lhs.multiply(1 + tau * u(j) + u(i) * u(j));
        rhs.multiply(u(j) - u(i));
      }
      rhs.divide_geometric(u(i) * u(j));
    }
  const Poly left = iterated_residue(lhs), right = iterated_residue(rhs);
  return {{"zeilid", n, {"tau=" + tau.to_string(), "phi=" + phi.to_string()}, left.to_string(), right.to_string(),
           left == right}};
}

Report even_partition_sum_check(int n, int degree_bound) {
  require_n(n, "even_partition_sum_check");
  if (degree_bound < 2 * n) throw std::invalid_argument("even_partition_sum_check: need D >= 2n");
  const int D = degree_bound;
  const auto vars = integration_vars(n);
  const auto perms = all_permutations(n);

  Poly sum;
  std::vector<int> r(n);
  auto visit = [&](auto&& self, int j) -> void {
    if (j == n) {
      for (const auto& p : perms) {
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[i] = r[p[i]];
        sum += Poly::monomial(vars, e, Rational(permutation_sign(p)));
      }
      return;
    }
    if (j == 0) {
      for (int v = 0; v <= D; v += 2) {
        r[0] = v;
        self(self, 1);
      }
      return;
    }
    for (int v = r[j - 1] + 1; v <= D; v += 2) {
      r[j] = v;
      self(self, j + 1);
    }
  };
  visit(visit, 0);

  SeriesLayout layout;
  for (const auto& v : vars) {
    layout.vars.push_back(v);
    layout.windows.push_back(Window::range(0, D));
  }
  auto series = TruncatedSeries<Rational>::constant(layout, Rational(1));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const Poly ui = var(vars[i - 1]), uj = var(vars[j - 1]);
      if (j > i) series = series.times(uj - ui);
      series = geometric_expand(series, uj * ui);
    }
  const Poly expected = keep_total_degree(series.to_poly(), D);
  const Poly got = keep_total_degree(sum, D);
  return {{"even-partitions", n, {"D=" + std::to_string(D)}, expected.to_string(), got.to_string(), expected == got}};
}

Report integral_route_check(int n, unsigned workers) {
  Report out;
  const GenPoly a_brute = asm6v::genfun_doubly_refined(n, Convention::kTilde, workers);
  const GenPoly u_brute = nilp::genfun_U(n, 0, 1, workers);
  const GenPoly a = integral_A(n);
  out.push_back({"integral-A", n, {}, a_brute.to_string(), a.to_string(), a == a_brute});
  for (UForm form : {UForm::kRaw, UForm::kAfterU1}) {
    const GenPoly u = integral_U(n, form);
    out.push_back({"integral-U", n, {"form=" + to_string(form)}, u_brute.to_string(), u.to_string(), u == u_brute});
  }
  return out;
}

Report a_independence_check(int n, int random_vectors, std::uint64_t seed) {
  Report out;
  const GenPoly base = integral_I(n, AVector(n - 1, Poly()));
  auto record = [&](const std::string& label, const AVector& a) {
    std::vector<std::string> point{label};
    for (std::size_t l = 0; l < a.size(); ++l) point.push_back("a" + std::to_string(l + 1) + "=" + a[l].to_string());
    const GenPoly got = integral_I(n, a);
    out.push_back({"a-independence", n, point, base.to_string(), got.to_string(), got == base});
  };
  record("a=y(1-y)", a_vector_u(n));
  for (int k = 0; k < random_vectors; ++k) record("random", a_vector_random(n, seed + static_cast<std::uint64_t>(k)));
  return out;
}

Report window_regression_check(int n) {
  Report out;
  const AVector au = a_vector_u(n);
  const GenPoly a0 = integral_A(n), u0 = integral_U(n, UForm::kRaw), v0 = integral_U(n, UForm::kAfterU1),
                i0 = integral_I(n, au);
  for (int hi : {wide_window(n), wide_window(n) + 2}) {
    const std::vector<std::string> point{"hi=" + std::to_string(hi)};
    const GenPoly a = integral_A(n, hi), u = integral_U(n, UForm::kRaw, hi), v = integral_U(n, UForm::kAfterU1, hi),
                  i = integral_I(n, au, hi);
    out.push_back({"window-A", n, point, a0.to_string(), a.to_string(), a == a0});
    out.push_back({"window-U-raw", n, point, u0.to_string(), u.to_string(), u == u0});
    out.push_back({"window-U-after-u1", n, point, v0.to_string(), v.to_string(), v == v0});
    out.push_back({"window-I", n, point, i0.to_string(), i.to_string(), i == i0});
  }
  return out;
}

Rational h1(const Rational& x, const Rational& y) { return (x - y) * (x * y - 1); }

Rational hq(const Rational& x, const Rational& y, const Rational& q) {
  const Rational qi = q.inverse();
  return (q * x - qi * y) * (q * x * y - qi);
}

Rational bn_brute(int n, const std::vector<Rational>& w, const std::vector<Rational>& z, const Rational& r,
                  unsigned workers) {
  check_sizes(n, w, z, "bn_brute");
  const Rational q = r * r;
  const Rational qi = nonzero_or_singular(q, "bn_brute").inverse();
  const auto perms = all_permutations(n);
  const auto terms = parallel_map<Rational>(perms.size(), workers, [&](std::size_t k) {
    const auto& p = perms[k];
    std::vector<Rational> ws(n);
    for (int i = 0; i < n; ++i) ws[i] = w[p[i]];
    Rational num(1), den(1);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) num = num * (q * ws[i] - qi * ws[j]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i <= j) den = den * h1(ws[j], z[i]);
        if (i >= j) den = den * hq(ws[j], z[i], q);
      }
    return Rational(permutation_sign(p)) * num / nonzero_or_singular(den, "bn_brute");
  });
  Rational sum(0);
  for (const auto& t : terms) sum = sum + t;
  return sum;
}

Rational bn_closed(int n, const std::vector<Rational>& w, const std::vector<Rational>& z, const Rational& r) {
  check_sizes(n, w, z, "bn_closed");
  const Rational q = nonzero_or_singular(r * r, "bn_closed");
  SquareMatrix<Rational> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = nonzero_or_singular(h1(w[i], z[j]) * hq(w[i], z[j], q), "bn_closed").inverse();
  Rational den(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) den = den * h1(z[i], z[j]) * (1 - q * q * w[i] * w[j]);
  return power(q, n * (n - 1) / 2) * determinant(m) / nonzero_or_singular(den, "bn_closed");
}

namespace {

Rational fbar_prefactor(int n, const std::vector<Rational>& w, const std::vector<Rational>& z, const Rational& q) {
  Rational den = power(q.inverse() * q.inverse() - 1, n);
  for (int i = 0; i < n; ++i) den = den * z[i] * (1 - q * q * w[i] * w[i]);
  return nonzero_or_singular(den, "fbar").inverse();
}

}  // namespace

Rational fbar_determinant(int n, const std::vector<Rational>& w, const std::vector<Rational>& z, const Rational& r) {
  check_sizes(n, w, z, "fbar_determinant");
  const Rational q = nonzero_or_singular(r * r, "fbar_determinant");
  SquareMatrix<Rational> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = nonzero_or_singular(h1(w[i], z[j]), "fbar_determinant").inverse();
  return fbar_prefactor(n, w, z, q) * determinant(m);
}

Rational fbar_cauchy(int n, const std::vector<Rational>& w, const std::vector<Rational>& z, const Rational& r) {
  check_sizes(n, w, z, "fbar_cauchy");
  const Rational q = nonzero_or_singular(r * r, "fbar_cauchy");
  Rational num(1), den(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) num = num * h1(w[i], w[j]) * h1(z[j], z[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) den = den * h1(w[i], z[j]);
  return fbar_prefactor(n, w, z, q) * num / nonzero_or_singular(den, "fbar_cauchy");
}

BnSample random_bn_sample(int n, std::uint64_t seed) {
  SamplePoints rng(seed);
  BnSample s;
  do s.r = rng.nonzero_rational();
  while (s.r * s.r == Rational(1));
  for (int i = 0; i < n; ++i) s.w.push_back(rng.rational());
  for (int i = 0; i < n; ++i) s.z.push_back(rng.rational());
  return s;
}

namespace {

// Draws samples from consecutive seeds until `samples` of them are regular.
template <class Fn>
Report regular_samples(int n, int samples, std::uint64_t seed, Fn&& fn) {
  Report out;
  std::uint64_t s = seed;
  for (int k = 0; k < samples; ++s) {
    if (s - seed > static_cast<std::uint64_t>(samples) * 1000)
      throw std::runtime_error("no regular sample found");
    const BnSample sample = random_bn_sample(n, s);
    try {
      out.push_back(fn(sample));
      ++k;
    } catch (const SingularSample&) {
    }
  }
  return out;
}

}  // namespace

Report bn_check(int n, int samples, std::uint64_t seed, unsigned workers) {
  require_n(n, "bn_check");
  return regular_samples(n, samples, seed, [&](const BnSample& s) {
    const Rational closed = bn_closed(n, s.w, s.z, s.r);
    const Rational brute = bn_brute(n, s.w, s.z, s.r, workers);
    return CheckRecord{"bn", n, sample_strings(s), closed.to_string(), brute.to_string(), closed == brute};
  });
}

Report cauchy_check(int n, int samples, std::uint64_t seed) {
  require_n(n, "cauchy_check");
  return regular_samples(n, samples, seed, [&](const BnSample& s) {
    const Rational c = fbar_cauchy(n, s.w, s.z, s.r);
    const Rational d = fbar_determinant(n, s.w, s.z, s.r);
    return CheckRecord{"cauchy", n, sample_strings(s), c.to_string(), d.to_string(), c == d};
  });
}

Report f_split_check(int samples, std::uint64_t seed) {
  return regular_samples(1, samples, seed, [&](const BnSample& s) {
    const Rational q = s.r * s.r;
    const Rational& w = s.w[0];
    const Rational& z = s.z[0];
    const Rational a = nonzero_or_singular(h1(w, z), "f_split"), b = nonzero_or_singular(hq(w, z, q), "f_split");
    const Rational lhs = (a * b).inverse();
    const Rational scale = nonzero_or_singular(z * (1 - q * q * w * w) * (q.inverse() * q.inverse() - 1), "f_split");
    const Rational rhs = (a.inverse() - b.inverse()) / scale;
    return CheckRecord{"f-split", 1, sample_strings(s), lhs.to_string(), rhs.to_string(), lhs == rhs};
  });
}

Report homogeneous_limit_check(int n) {
  require_n(n, "homogeneous_limit_check");
  using CPoly = MultiPoly<Cyclo>;
  const Cyclo q = Cyclo::q();
  const Cyclo tau = -(q + q.inverse());
  const Cyclo scale = power(q - q.inverse(), n * (n + 2)).inverse();
  const auto vars = integration_vars(n);
  auto u = [&](int i) { return pvar<Cyclo>(vars[i - 1]); };
  Report out;

  // AS{prod (1+tau u_i)^{i-1} u_i^{-2i}} times prod u_i^{2n}.
  CPoly as_lhs;
  for (const auto& p : all_permutations(n)) {
    CPoly term(Cyclo(permutation_sign(p)));
    for (int i = 1; i <= n; ++i) {
      const CPoly v = u(p[i - 1] + 1);
      term *= power(1 + tau * v, i - 1) * power(v, 2 * n - 2 * i);
    }
    as_lhs += term;
  }
  CPoly as_rhs(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) as_rhs *= (u(i) - u(j)) * (u(i) + u(j) + tau * u(i) * u(j));
  out.push_back({"homogeneous-as", n, {"tau=" + tau.to_string()}, as_rhs.to_string(), as_lhs.to_string(),
                 as_lhs == as_rhs});

  CPoly xy(1);
  for (int i = 1; i <= n; ++i) xy *= (1 + pvar<Cyclo>("x") * u(i)) * (1 + pvar<Cyclo>("y") * u(i));
  for (const auto& [label, phi] : {std::pair<std::string, CPoly>{"phi=1", CPoly(1)}, {"phi=prod(1+x u)(1+y u)", xy}}) {
    IntegrandSpec<Cyclo> pre, post;
    for (int i = 1; i <= n; ++i) {
      pre.add_var(vars[i - 1], 2 * i);
      post.add_var(vars[i - 1], 2 * n);
    }
    pre.multiply(phi * CPoly(scale * Cyclo(factorial(n))));
    post.multiply(phi * CPoly(scale));
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        if (j > i) {
          pre.multiply(u(j) - u(i));
          pre.multiply(1 + tau * u(j) + u(i) * u(j));
          post.multiply(u(j) - u(i));
          post.multiply(u(i) - u(j));
          post.multiply(u(i) + u(j) + tau * u(i) * u(j));
        }
        post.divide_geometric(u(i) * u(j));
      }
    const CPoly a = iterated_residue(pre), b = iterated_residue(post);
    out.push_back({"homogeneous-limit", n, {label}, a.to_string(), b.to_string(), a == b});
  }
  return out;
}

}  // namespace asmtss::residue
