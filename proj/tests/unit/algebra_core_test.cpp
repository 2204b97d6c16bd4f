#include "asmtss/cyclo.hpp"
#include "asmtss/genpoly.hpp"
#include "asmtss/matrix.hpp"
#include "asmtss/multipoly.hpp"
#include "asmtss/rational.hpp"
#include "asmtss/series.hpp"

#include <gtest/gtest.h>

#include <random>

namespace asmtss {
namespace {

using Poly = MultiPoly<Rational>;

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-13, 13);
  std::uniform_int_distribution<int> den(1, 13);
  return Rational(num(rng), den(rng));
}

Cyclo random_cyclo(std::mt19937_64& rng) { return {random_rational(rng), random_rational(rng)}; }

TEST(Rational, Canonical) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(6, -4).denominator(), 2);
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(Cyclo, ZetaRelations) {
  const Cyclo z = Cyclo::zeta();
  const Cyclo q = Cyclo::q();
  EXPECT_EQ(z * z, z - Cyclo(1));
  EXPECT_EQ(q * q * q, Cyclo(1));
  EXPECT_EQ(q * q + q + Cyclo(1), Cyclo(0));
  EXPECT_EQ(power(z, 6), Cyclo(1));
  EXPECT_EQ(Cyclo::q_half() * Cyclo::q_half(), q);
  EXPECT_EQ(Cyclo::q_half() * Cyclo::q_minus_half(), Cyclo(1));
  EXPECT_EQ(q.inverse() - q, -(q - q.inverse()));
  // (q^{-1} - q)^2 = -3
  EXPECT_EQ(power(q.inverse() - q, 2), Cyclo(-3));
  EXPECT_THROW(Cyclo(0).inverse(), std::domain_error);
}

TEST(Cyclo, FieldAxiomsProperty) {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Cyclo a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a.norm() * b.norm(), (a * b).norm());
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inverse(), Cyclo(1));
      ASSERT_EQ((b / a) * a, b);
    }
  }
}

TEST(MultiPoly, ArithmeticAndEvaluate) {
  const Poly x = Poly::variable("x"), y = Poly::variable("y");
  const Poly p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_EQ(p.degree_in("x"), 2);
  EXPECT_EQ(p.coefficient_of("y", 2), Poly(-1));
  EXPECT_EQ(p.evaluate({{"x", Rational(3)}, {"y", Rational(1, 2)}}), Rational(35, 4));
  EXPECT_THROW(p.evaluate({{"x", Rational(1)}}), std::invalid_argument);
  EXPECT_EQ(p.exact_divide(x + y), x - y);
  EXPECT_THROW(p.exact_divide(x + Poly(2)), std::domain_error);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(MultiPoly, EvaluateIsHomomorphismProperty) {
  std::mt19937_64 rng(1);
  const Poly x = Poly::variable("x"), y = Poly::variable("y"), z = Poly::variable("z");
  std::vector<Poly> pool = {x, y, z, Poly(2), x * y - z, x + Poly(Rational(1, 3))};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = pool[pick(rng)] * pool[pick(rng)] + pool[pick(rng)];
    const Poly b = pool[pick(rng)] - pool[pick(rng)] * pool[pick(rng)];
    const Poly::Point pt = {{"x", random_rational(rng)}, {"y", random_rational(rng)}, {"z", random_rational(rng)}};
    const Poly ab = a * b, sum = a + b;
    ASSERT_EQ(ab.over({"x", "y", "z"}).evaluate(pt), a.over({"x", "y", "z"}).evaluate(pt) * b.over({"x", "y", "z"}).evaluate(pt));
    ASSERT_EQ(sum.over({"x", "y", "z"}).evaluate(pt),
              a.over({"x", "y", "z"}).evaluate(pt) + b.over({"x", "y", "z"}).evaluate(pt));
  }
}

template <class R>
R cofactor_det(const std::vector<std::vector<R>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  R sum(0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<R>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<R> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const R t = m[0][j] * cofactor_det(minor);
    sum = (j % 2 == 0) ? sum + t : sum - t;
  }
  return sum;
}

TEST(Matrix, DeterminantMatchesCofactorProperty) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = trial < 100 ? 4 : 1 + trial % 5;
    std::vector<std::vector<Cyclo>> rows(n, std::vector<Cyclo>(n));
    for (auto& r : rows)
      for (auto& e : r) e = (rng() % 3 == 0) ? Cyclo(0) : random_cyclo(rng);
    ASSERT_EQ(determinant(SquareMatrix<Cyclo>::from_rows(rows)), cofactor_det(rows));
  }
}

TEST(Matrix, PolynomialBareiss) {
  const Poly x = Poly::variable("x"), y = Poly::variable("y"), z = Poly::variable("z");
  // Vandermonde
  std::vector<std::vector<Poly>> rows = {{Poly(1), x, x * x}, {Poly(1), y, y * y}, {Poly(1), z, z * z}};
  EXPECT_EQ(determinant(SquareMatrix<Poly>::from_rows(rows)), (y - x) * (z - x) * (z - y));
  std::vector<std::vector<Poly>> zero_pivot = {{Poly(0), x}, {y, Poly(1)}};
  EXPECT_EQ(determinant(SquareMatrix<Poly>::from_rows(zero_pivot)), -(x * y));
  EXPECT_EQ(determinant(SquareMatrix<Poly>(0)), Poly(1));
}

SeriesLayout one_var(int lo, int hi) { return {{"u"}, {Window::range(lo, hi)}}; }

TEST(Series, GeometricInverseProperty) {
  std::mt19937_64 rng(3);
  const SeriesLayout layout{{"u", "x"}, {Window::range(0, 12), Window::unbounded()}};
  const Poly u = Poly::variable("u"), x = Poly::variable("x");
  for (int trial = 0; trial < 50; ++trial) {
    const Poly g = u * Poly(random_rational(rng)) + u * u * x * Poly(random_rational(rng));
    const auto inv = geometric_expand(Poly(1), g, layout);
    const auto one_minus_g = TruncatedSeries<Rational>::from_poly(layout, Poly(1) - g);
    ASSERT_EQ(inv * one_minus_g, TruncatedSeries<Rational>::constant(layout, Rational(1)));
  }
}

TEST(Series, ContourAndWindowErrors) {
  const SeriesLayout layout = one_var(-5, 5);
  const Poly u = Poly::variable("u");
  EXPECT_THROW(geometric_expand(Poly(1), Poly(Rational(1, 2)), layout), ContourError);
  EXPECT_THROW(geometric_expand(Poly(1), Poly(1) + u, layout), ContourError);
  const auto a = TruncatedSeries<Rational>::from_poly(layout, u);
  const auto b = TruncatedSeries<Rational>::from_poly(one_var(-5, 6), u);
  EXPECT_THROW(a * b, WindowMismatch);
  EXPECT_THROW(a.slice("u", 9), WindowMismatch);
  EXPECT_THROW(TruncatedSeries<Rational>::from_poly(layout, Poly::variable("v")), WindowMismatch);
}

TEST(Series, ResidueOfSimpleTerms) {
  const SeriesLayout layout = one_var(-4, 4);
  const auto s = TruncatedSeries<Rational>::monomial(layout, {-1}, Rational(7)) +
                 TruncatedSeries<Rational>::monomial(layout, {-2}, Rational(3));
  EXPECT_EQ(s.residue_at_zero("u").terms().begin()->second, Rational(7));
  // residue of u^{-3} / (1 - u) is 1
  const auto inv = geometric_expand(Poly(1), Poly::variable("u"), layout);
  const auto r = (inv * TruncatedSeries<Rational>::monomial(layout, {-3}, Rational(1))).residue_at_zero("u");
  EXPECT_EQ(r.terms().begin()->second, Rational(1));
}

TEST(Cyclo, ProductExamples) {
  const Cyclo z = Cyclo::zeta();
  EXPECT_EQ((Cyclo(1) + z) * (Cyclo(1) - z), Cyclo(2) - z);
  const MultiPoly<Cyclo> q = MultiPoly<Cyclo>::variable("q");
  EXPECT_TRUE((q * q + q + MultiPoly<Cyclo>(1)).evaluate({{"q", Cyclo::q()}}).is_zero());
}

TEST(MultiPoly, EvaluateExamples) {
  const Poly x = Poly::variable("x"), y = Poly::variable("y");
  EXPECT_EQ((x + y).evaluate({{"x", Rational(1)}, {"y", Rational(1)}}), Rational(2));
  EXPECT_EQ((x * x * y).evaluate({{"x", Rational(2)}, {"y", Rational(3)}}), Rational(12));
}

TEST(Series, ProductExamples) {
  using S = TruncatedSeries<Rational>;
  const SeriesLayout l1 = one_var(0, 4);
  const Poly u = Poly::variable("u");
  EXPECT_EQ(S::from_poly(l1, Poly(1) + u) * S::from_poly(l1, Poly(1) - u), S::from_poly(l1, Poly(1) - u * u));
  const SeriesLayout l2 = one_var(-3, 3);
  EXPECT_EQ(S::monomial(l2, {-1}, Rational(1)) * S::monomial(l2, {2}, Rational(1)), S::monomial(l2, {1}, Rational(1)));
  const SeriesLayout l3{{"u1", "u2"}, {Window::range(0, 2), Window::range(0, 2)}};
  const Poly w = Poly(1) + Poly::variable("u1") * Poly::variable("u2");
  EXPECT_EQ(S::from_poly(l3, w) * S::from_poly(l3, w), S::from_poly(l3, w * w));
}

TEST(Series, GeometricExamples) {
  using S = TruncatedSeries<Rational>;
  const Poly u = Poly::variable("u"), y = Poly::variable("y");
  EXPECT_EQ(geometric_expand(Poly(1), u, one_var(0, 3)), S::from_poly(one_var(0, 3), Poly(1) + u + u * u + u * u * u));
  const SeriesLayout ly{{"u", "y"}, {Window::range(0, 2), Window::unbounded()}};
  const Poly a = Poly(1) - y;
  EXPECT_EQ(geometric_expand(Poly(1), -(u * a), ly), S::from_poly(ly, Poly(1) - a * u + a * a * u * u));
  const SeriesLayout l2{{"u1", "u2"}, {Window::range(0, 2), Window::range(0, 2)}};
  const Poly uu = Poly::variable("u1") * Poly::variable("u2");
  EXPECT_EQ(geometric_expand(Poly(1), uu, l2), S::from_poly(l2, Poly(1) + uu + uu * uu));
}

TEST(Series, ResidueExamplesAndLinearity) {
  using S = TruncatedSeries<Rational>;
  const SeriesLayout l = one_var(-3, 3);
  const SeriesLayout none{{}, {}};
  EXPECT_EQ(S::monomial(l, {-1}, Rational(1)).residue_at_zero("u"), S::constant(none, Rational(1)));
  EXPECT_EQ((S::monomial(l, {-2}, Rational(1)) + S::monomial(l, {-1}, Rational(1))).residue_at_zero("u"),
            S::constant(none, Rational(1)));
  EXPECT_TRUE((S::constant(l, Rational(1)) + S::monomial(l, {1}, Rational(1))).residue_at_zero("u").is_zero());

  std::mt19937_64 rng(4);
  const SeriesLayout l2{{"u", "x"}, {Window::range(-3, 3), Window::range(-2, 2)}};
  std::uniform_int_distribution<int> e(-3, 2);
  for (int trial = 0; trial < 100; ++trial) {
    S f(l2), g(l2);
    for (int k = 0; k < 6; ++k) {
      f += S::monomial(l2, {e(rng), e(rng) % 3}, random_rational(rng));
      g += S::monomial(l2, {e(rng), e(rng) % 3}, random_rational(rng));
    }
    const Rational alpha = random_rational(rng), beta = random_rational(rng);
    ASSERT_EQ((f.scaled(alpha) + g.scaled(beta)).residue_at_zero("u"),
              f.residue_at_zero("u").scaled(alpha) + g.residue_at_zero("u").scaled(beta));
  }
}

TEST(Matrix, DeterminantExamples) {
  using M = SquareMatrix<Rational>;
  EXPECT_EQ(determinant(M::from_rows({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}})), Rational(-2));
  EXPECT_EQ(determinant(M::identity(5)), Rational(1));
  std::vector<std::vector<Rational>> v(3, std::vector<Rational>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v[i][j] = power(Rational(i + 1), j);
  EXPECT_EQ(determinant(M::from_rows(v)), Rational(2));
}

TEST(GenPoly, RoundTripAndFormatting) {
  GenPoly g(Convention::kTilde);
  g.add(0, 0);
  g.add(1, 0, 2);
  g.add(1, 1);
  EXPECT_EQ(g.total(), 4);
  EXPECT_EQ(g.to_string(), "x*y + 2*x + 1");
  EXPECT_EQ(GenPoly::from_poly(g.to_poly()), g);
  EXPECT_EQ(g.evaluate(Rational(2), Rational(3)), Rational(11));
  EXPECT_THROW(GenPoly::from_poly(Poly(Rational(1, 2))), std::domain_error);
  EXPECT_THROW(GenPoly::from_poly(Poly::variable("z")), std::invalid_argument);
}

}  // namespace
}  // namespace asmtss
