#include "asmtss/asm.hpp"
#include "asmtss/nilp.hpp"
#include "asmtss/residue.hpp"
#include "asmtss/sampling.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace asmtss::residue {
namespace {

using Poly = MultiPoly<Rational>;

Poly v(const std::string& name) { return Poly::variable(name); }

GenPoly known_a3() {
  GenPoly g;
  for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 2}, {0, 1}, {1, 2}, {1, 0}, {1, 1}, {2, 1}, {2, 0}}) g.add(i, j);
  return g;
}

// Independent oracle: expands everything as ordinary polynomials, cutting
// the total degree in the integration variables, then reads off the
// coefficient of prod u_l^{d_l - 1}.
Poly oracle_residue(const IntegrandSpec<Rational>& spec) {
  const int need = std::accumulate(spec.pole_orders.begin(), spec.pole_orders.end(), 0) -
                   static_cast<int>(spec.vars.size());
  auto u_degree = [&](const Poly& p, const Poly::Exponents& e) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (std::find(spec.vars.begin(), spec.vars.end(), p.vars()[i]) != spec.vars.end()) d += e[i];
    return d;
  };
  auto cut = [&](const Poly& p) {
    Poly out;
    for (const auto& [e, c] : p.terms())
      if (u_degree(p, e) <= need) out += Poly::monomial(p.vars(), e, c);
    return out;
  };
  Poly prod(1);
  for (const auto& f : spec.factors) {
    if (!f.geometric) {
      prod = cut(prod * f.poly);
      continue;
    }
    Poly series(1), g_power(1);
    for (int k = 1; k <= need; ++k) {
      g_power = cut(g_power * f.poly);
      series += g_power;
    }
    prod = cut(prod * series);
  }
  for (std::size_t i = 0; i < spec.vars.size(); ++i) prod = prod.coefficient_of(spec.vars[i], spec.pole_orders[i] - 1);
  return prod;
}

std::vector<std::vector<std::string>> orders(const std::vector<std::string>& vars) {
  std::vector<std::string> p = vars;
  std::sort(p.begin(), p.end());
  std::vector<std::vector<std::string>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

TEST(IteratedResidue, SingleSimplePole) {
  IntegrandSpec<Rational> s;
  s.add_var("u", 1);
  EXPECT_EQ(iterated_residue(s), Poly(1));
}

TEST(IteratedResidue, AntisymmetricNumeratorGivesZero) {
  IntegrandSpec<Rational> s;
  s.add_var("u1", 2);
  s.add_var("u2", 2);
  s.multiply(v("u2") - v("u1"));
  EXPECT_TRUE(iterated_residue(s).is_zero());
}

TEST(IteratedResidue, NoPoleGivesZero) {
  IntegrandSpec<Rational> s;
  s.add_var("u", 0);
  s.multiply(1 + v("x") * v("u"));
  EXPECT_TRUE(iterated_residue(s).is_zero());
}

TEST(IteratedResidue, GeometricFactor) {
  // coefficient of u^3 in 1/(1 - x u) is x^3
  IntegrandSpec<Rational> s;
  s.add_var("u", 4);
  s.divide_geometric(v("x") * v("u"));
  EXPECT_EQ(iterated_residue(s), v("x") * v("x") * v("x"));
}

TEST(IteratedResidue, RejectsBadContours) {
  IntegrandSpec<Rational> s;
  s.add_var("u", 2);
  s.divide_geometric(v("x") + v("u"));
  EXPECT_THROW(iterated_residue(s), ContourError);

  IntegrandSpec<Rational> t;
  t.add_var("u", 2);
  t.multiply(v("u") * v("u"));
  EXPECT_NO_THROW(iterated_residue(t));
  EXPECT_THROW(iterated_residue(t, {"w"}), std::invalid_argument);
  EXPECT_THROW(iterated_residue(t, {"u", "u"}), std::invalid_argument);
  EXPECT_THROW(iterated_residue(t, {"u"}, -2), std::invalid_argument);

  IntegrandSpec<Rational> bad;
  bad.add_var("u", -1);
  EXPECT_THROW(iterated_residue(bad), std::invalid_argument);
}

TEST(IteratedResidue, EquationAAtTwo) { EXPECT_EQ(iterated_residue(spec_A(2)), v("x") + v("y")); }

TEST(IteratedResidue, OrderIndependence) {
  std::vector<IntegrandSpec<Rational>> specs{spec_A(3), spec_A(4), spec_U(3, UForm::kRaw), spec_U(3, UForm::kAfterU1),
                                             spec_I(4, a_vector_u(4))};
  for (const auto& s : specs) {
    const Poly first = iterated_residue(s);
    for (const auto& order : orders(s.vars)) EXPECT_EQ(iterated_residue(s, order), first);
  }
}

TEST(IteratedResidue, MatchesOracleOnIntegralIntegrands) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(iterated_residue(spec_A(n)), oracle_residue(spec_A(n))) << n;
    EXPECT_EQ(iterated_residue(spec_U(n, UForm::kRaw)), oracle_residue(spec_U(n, UForm::kRaw))) << n;
    EXPECT_EQ(iterated_residue(spec_U(n, UForm::kAfterU1)), oracle_residue(spec_U(n, UForm::kAfterU1))) << n;
  }
}

// Random integrands: small polynomial and geometric factors in up to three
// variables, checked against the oracle in every order and window.
TEST(IteratedResidue, RandomIntegrandsProperty) {
  SamplePoints rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int nv = rng.integer(1, 3);
    IntegrandSpec<Rational> s;
    for (int i = 0; i < nv; ++i) s.add_var("u" + std::to_string(i + 1), rng.integer(0, 4));
    auto random_monomial = [&](bool positive) {
      Poly m(rng.nonzero_rational());
      if (rng.integer(0, 1) == 1) m *= v("x");
      int total = 0;
      for (int i = 0; i < nv; ++i) {
        const int e = rng.integer(0, 2);
        total += e;
        m *= power(v("u" + std::to_string(i + 1)), e);
      }
      if (positive && total == 0) m *= v("u" + std::to_string(rng.integer(1, nv)));
      return m;
    };
    const int nf = rng.integer(1, 4);
    for (int f = 0; f < nf; ++f) {
      if (rng.integer(0, 2) == 0) {
        s.divide_geometric(random_monomial(true) + random_monomial(true));
      } else {
        s.multiply(random_monomial(false) + random_monomial(false) + Poly(1));
      }
    }
    const Poly expected = oracle_residue(s);
    for (const auto& order : orders(s.vars)) {
      EXPECT_EQ(iterated_residue(s, order), expected) << "trial " << trial;
      EXPECT_EQ(iterated_residue(s, order, 3), expected) << "trial " << trial;
    }
  }
}

TEST(Integrals, SmallCases) {
  EXPECT_EQ(integral_A(1), GenPoly::from_poly(Poly(1)));
  EXPECT_EQ(integral_A(3), known_a3());
  EXPECT_EQ(integral_A(4).total(), 42);
  EXPECT_EQ(integral_A(4), asm6v::genfun_doubly_refined(4, Convention::kTilde));
  for (UForm form : {UForm::kRaw, UForm::kAfterU1}) {
    EXPECT_EQ(integral_U(1, form), GenPoly::from_poly(Poly(1))) << to_string(form);
    EXPECT_EQ(integral_U(3, form), known_a3()) << to_string(form);
  }
  EXPECT_EQ(integral_I(3, {Poly(), Poly()}), known_a3());
  EXPECT_EQ(integral_I(3, a_vector_u(3)), known_a3());
  EXPECT_EQ(integral_I(3, {Poly(Rational(3, 7)), Poly(Rational(-5))}), known_a3());
  EXPECT_THROW(integral_I(3, {Poly()}), std::invalid_argument);
  EXPECT_THROW(integral_A(0), std::invalid_argument);
}

TEST(Integrals, MatchBruteForce) {
  for (int n = 1; n <= 4; ++n) {
    const Report r = integral_route_check(n);
    EXPECT_EQ(r.size(), 3u);
    for (const auto& c : r) EXPECT_TRUE(c.pass) << c.check << " n=" << n << " expected " << c.expected << " got " << c.got;
  }
}

TEST(Integrals, AIndependence) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : a_independence_check(n, 3, 11)) EXPECT_TRUE(c.pass) << n << " " << c.got;
}

TEST(Integrals, WindowRegression) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : window_regression_check(n)) EXPECT_TRUE(c.pass) << c.check << " n=" << n;
}

TEST(Zeilid, OneVariableReadsCoefficientOfU) {
  const Poly phi = 4 + Rational(2, 3) * v("u1") + v("x") * v("u1") + 7 * v("u1") * v("u1");
  const auto r = zeilid_check(1, Rational(1), phi);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].pass);
  EXPECT_EQ(r[0].got, (Rational(2, 3) + v("x")).to_string());
}

TEST(Zeilid, XyInstanceAndConstant) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(all_pass(zeilid_check(n, Rational(1), Poly(1)))) << n;
    EXPECT_TRUE(all_pass(zeilid_check(n, Rational(1), phi_xy(n)))) << n;
  }
}

TEST(Zeilid, RandomSymmetricPhiAndTau) {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Poly phi = random_symmetric_phi(n, seed);
      EXPECT_TRUE(is_symmetric(phi, integration_vars(n)));
      EXPECT_TRUE(all_pass(zeilid_check(n, Rational(1), phi))) << n << " " << phi;
      EXPECT_TRUE(all_pass(zeilid_check(n, Rational(-2, 5), phi))) << n << " " << phi;
    }
}

TEST(Zeilid, RejectsNonSymmetricPhi) {
  EXPECT_THROW(zeilid_check(2, Rational(1), 1 + v("u1")), std::invalid_argument);
  EXPECT_FALSE(is_symmetric(v("u1") * v("u2") * v("u2"), integration_vars(2)));
  EXPECT_TRUE(is_symmetric(v("u1") * v("u2") * v("x"), integration_vars(2)));
}

TEST(EvenPartitions, Examples) {
  const auto r1 = even_partition_sum_check(1, 6);
  ASSERT_EQ(r1.size(), 1u);
  EXPECT_TRUE(r1[0].pass);
  const Poly u = v("u1");
  EXPECT_EQ(r1[0].got, (1 + u * u + power(u, 4) + power(u, 6)).to_string());
  EXPECT_TRUE(all_pass(even_partition_sum_check(2, 6)));
  EXPECT_TRUE(all_pass(even_partition_sum_check(3, 8)));
  EXPECT_TRUE(all_pass(even_partition_sum_check(4, 10)));
  EXPECT_THROW(even_partition_sum_check(3, 5), std::invalid_argument);
}

TEST(AppendixD, BaseCase) {
  const Rational r(3, 2), w(5, 7), z(-2, 3);
  const Rational expected = (h1(w, z) * hq(w, z, r * r)).inverse();
  EXPECT_EQ(bn_brute(1, {w}, {z}, r), expected);
  EXPECT_EQ(bn_closed(1, {w}, {z}, r), expected);
}

TEST(AppendixD, ClosedFormMatchesBruteForce) {
  for (int n = 1; n <= 3; ++n) {
    const Report r = bn_check(n, 10, 100 * n);
    EXPECT_EQ(r.size(), 10u);
    for (const auto& c : r) EXPECT_TRUE(c.pass) << n << " " << c.expected << " vs " << c.got;
  }
  EXPECT_TRUE(all_pass(bn_check(3, 3, 5, 3)));
}

TEST(AppendixD, SingularSamplesAreReported) {
  // w = (p, p'), z = (p', p) puts w_2 = z_1 into h1.
  const Rational p(2, 5), pp(-3, 4), r(3);
  EXPECT_THROW(bn_brute(2, {p, pp}, {pp, p}, r), SingularSample);
  EXPECT_THROW(bn_closed(2, {p, pp}, {pp, p}, r), SingularSample);
  EXPECT_THROW(fbar_cauchy(1, {Rational(1)}, {Rational(1)}, r), SingularSample);
  EXPECT_THROW(bn_brute(2, {p}, {pp, p}, r), std::invalid_argument);
}

TEST(AppendixD, CauchyDeterminant) {
  for (int n = 1; n <= 4; ++n) {
    const Report r = cauchy_check(n, 10, 7 * n);
    EXPECT_EQ(r.size(), 10u);
    EXPECT_TRUE(all_pass(r)) << n;
  }
}

TEST(AppendixD, PartialFractions) { EXPECT_TRUE(all_pass(f_split_check(20, 3))); }

TEST(AppendixD, HomogeneousLimit) {
  for (int n = 1; n <= 3; ++n) {
    const Report r = homogeneous_limit_check(n);
    EXPECT_EQ(r.size(), 3u);
    for (const auto& c : r) EXPECT_TRUE(c.pass) << c.check << " n=" << n << " " << c.expected << " vs " << c.got;
  }
}

}  // namespace
}  // namespace asmtss::residue
