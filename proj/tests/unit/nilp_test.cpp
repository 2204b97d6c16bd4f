#include "asmtss/asm.hpp"
#include "asmtss/lgv.hpp"
#include "asmtss/nilp.hpp"
#include "asmtss/tsscpp.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

namespace asmtss::nilp {
namespace {

using asm6v::genfun_doubly_refined;

GenPoly known_u3() {
  GenPoly g;
  for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {2, 0}, {1, 2}, {2, 1}, {0, 1}, {1, 0}}) g.add(i, j);
  return g;
}

// the arrays listed for n = 3, in the order given there
const std::vector<std::vector<std::string>> kArraysThree = {
    {"666333", "666333", "666333", "333000", "333000", "333000"},
    {"666433", "666333", "665332", "433100", "333000", "332000"},
    {"666433", "666433", "664322", "443200", "332000", "332000"},
    {"666543", "665332", "655331", "533110", "433100", "321000"},
    {"666543", "665432", "654321", "543210", "432100", "321000"},
    {"666553", "655331", "655331", "533110", "533110", "311000"},
    {"666553", "655431", "654321", "543210", "532110", "311000"},
};

Heights parse(const std::vector<std::string>& rows) {
  Heights h;
  for (const auto& r : rows) {
    std::vector<int> row;
    for (char c : r) row.push_back(c - '0');
    h.push_back(row);
  }
  return h;
}

TEST(Nilp, SmallEnumerations) {
  const auto one = enumerate_nilps(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].extra(), Path{Step::D});
  const auto two = enumerate_nilps(2);
  ASSERT_EQ(two.size(), 2u);
  std::multiset<std::pair<int, int>> stats;
  for (const auto& p : two) stats.insert({u_statistic(p, 0), u_statistic(p, 1)});
  EXPECT_EQ(stats, (std::multiset<std::pair<int, int>>{{0, 1}, {1, 0}}));
  EXPECT_EQ(enumerate_nilps(3).size(), 7u);
}

TEST(Nilp, CountsEqualAsmCounts) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(count_nilps(n), asm6v::asm_count_formula(n).get_ui()) << n;
  }
  EXPECT_EQ(count_nilps(7, 3), 218348u);
}

TEST(Nilp, ExtraStepRule) {
  const Nilp vertical = Nilp::from_strings({"", "V"});
  EXPECT_EQ(vertical.extra(), (Path{Step::D, Step::D}));
  EXPECT_EQ(vertical.final_x(1), 2);
  const Nilp diagonal = Nilp::from_strings({"", "D"});
  EXPECT_EQ(diagonal.extra(), (Path{Step::D, Step::V}));
  EXPECT_EQ(diagonal.final_x(1), 2);
  EXPECT_EQ(u_statistic(vertical, 0), 0);
  EXPECT_EQ(u_statistic(vertical, 1), 1);
  EXPECT_EQ(u_statistic(Nilp::from_strings({""}), 0), 0);
  for (int n = 1; n <= 6; ++n)
    for_each_nilp(n, [&](const Nilp& p) {
      ASSERT_EQ(p.extra()[0], Step::D);
      for (int t = 1; t < n; ++t) ASSERT_EQ((p.final_x(t) - p.final_x(t - 1)) % 2, 1);
    });
}

TEST(Nilp, AllVerticalAndAllDiagonalBundles) {
  // all-vertical regular steps give no vertical extra step
  const Nilp v = Nilp::from_strings({"", "V", "VV", "VVV"});
  EXPECT_EQ(u_statistic(v, 0), 0);
  // with all-diagonal regular steps the parity rule forces vertical extras
  const Nilp d = Nilp::from_strings({"", "D", "DD"});
  EXPECT_EQ(u_statistic(d, 0), 1);
}

TEST(Nilp, RejectsTouchingPaths) {
  EXPECT_THROW(Nilp::from_strings({"", "D", "VV"}), std::invalid_argument);
  EXPECT_NO_THROW(Nilp::from_strings({"", "V", "VD"}));
  EXPECT_NE(nilp_violation({{}, {Step::D}, {Step::V, Step::V}}).find("touch"), std::string::npos);
  EXPECT_THROW(Nilp::from_strings({"", "VV"}), std::invalid_argument);
  EXPECT_THROW(Nilp::from_strings({"", "X"}), std::invalid_argument);
  EXPECT_THROW(u_statistic(Nilp::from_strings({"", "V"}), 3), std::out_of_range);
}

TEST(Nilp, EnumerationMatchesFilteredBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::vector<Path>> all = {{}};
    for (int t = 0; t < n; ++t) {
      std::vector<std::vector<Path>> next;
      for (const auto& ps : all)
        for (int mask = 0; mask < (1 << t); ++mask) {
          Path p;
          for (int s = 0; s < t; ++s) p.push_back((mask >> (t - 1 - s)) & 1 ? Step::D : Step::V);
          auto q = ps;
          q.push_back(p);
          next.push_back(q);
        }
      all = next;
    }
    std::vector<Nilp> filtered;
    for (const auto& ps : all)
      if (nilp_violation(ps).empty()) filtered.emplace_back(ps);
    EXPECT_EQ(filtered, enumerate_nilps(n));
  }
}

TEST(Nilp, ParallelEnumerationKeepsOrder) {
  std::vector<Nilp> seq, par;
  for_each_nilp(6, [&](const Nilp& p) { seq.push_back(p); });
  for_each_nilp(6, [&](const Nilp& p) { par.push_back(p); }, 4);
  EXPECT_EQ(seq, par);
}

TEST(Nilp, GenfunU) {
  EXPECT_EQ(genfun_U(3, 0, 1), known_u3());
  EXPECT_EQ(genfun_U(2, 0, 1).to_string(), "x + y");
  EXPECT_EQ(genfun_U(3, 0, 2), genfun_U(3, 0, 1));
  EXPECT_EQ(genfun_U(6, 0, 1, 4), genfun_U(6, 0, 1));
  EXPECT_THROW(genfun_U(3, 0, 4), std::out_of_range);
}

TEST(Nilp, DoublyRefinedEquality) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(genfun_U(n, 0, 1), genfun_doubly_refined(n, Convention::kTilde)) << n;
}

TEST(Nilp, UIndependentOfSecondIndex) {
  for (int n = 1; n <= 5; ++n)
    for (int i = 2; i <= n; ++i) EXPECT_EQ(genfun_U(n, 0, i), genfun_U(n, 0, 1)) << n << " " << i;
}

TEST(Lgv, PathWeights) {
  using Poly = MultiPoly<Rational>;
  const Poly t0 = Poly::variable("t0"), t1 = Poly::variable("t1");
  EXPECT_EQ(lgv_path_weight<Poly>(1, 1, {t0, t1}), t0 + t1);
  EXPECT_EQ(lgv_path_weight<Poly>(1, 2, {t0, t1}), Poly(1));
  EXPECT_EQ(lgv_path_weight<Poly>(1, 0, {t0, t1}), t0 * t1);
  EXPECT_EQ(lgv_path_weight<Poly>(1, 3, {t0, t1}), Poly(0));
}

TEST(Lgv, MatchesPathEnumeration) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(lgv_genfun(n, std::vector<Rational>(n, Rational(1))), Rational(static_cast<long long>(count_nilps(n))));
    EXPECT_EQ(lgv_genfun_xy(n), genfun_U(n, 0, 1)) << n;
  }
}

TEST(Lgv, FullyWeightedMatchesSliceCounts) {
  using Poly = MultiPoly<Rational>;
  for (int n = 1; n <= 5; ++n) {
    std::vector<Poly> t;
    for (int k = 0; k < n; ++k) t.push_back(Poly::variable("t" + std::to_string(k)));
    Poly direct;
    for_each_nilp(n, [&](const Nilp& p) {
      std::vector<std::string> vars;
      std::vector<int> exps;
      for (int k = 0; k < n; ++k) {
        int v = 0;
        for (int s = std::max(k, 1); s < n; ++s)
          if (k == 0 || s >= k) v += p.step_in_slice(s, k) == Step::V;
        if (k == 0) v = u_statistic(p, 0);
        vars.push_back("t" + std::to_string(k));
        exps.push_back(v);
      }
      direct += Poly::monomial(vars, exps, Rational(1));
    });
    EXPECT_EQ(lgv_genfun(n, t), direct) << n;
  }
}

TEST(Involutions, GIsValidInvolutionSwappingSlices) {
  for (int n = 1; n <= 5; ++n) {
    for (int row = 1; row <= std::max(1, n - 1); ++row) {
      std::multiset<std::pair<int, int>> before, after;
      for_each_nilp(n, [&](const Nilp& p) {
        const Nilp g = involution_g(p, row);
        ASSERT_EQ(involution_g(g, row), p);
        ASSERT_EQ(g.extra(), p.extra());
        if (row + 1 <= n) {
          before.insert({u_statistic(p, 0), u_statistic(p, row)});
          after.insert({u_statistic(p, 0), u_statistic(p, row + 1)});
        }
      });
      if (row + 1 <= n) EXPECT_EQ(before, after) << n << " " << row;
    }
  }
}

TEST(Involutions, GSwapsSliceCountsOnLongPaths) {
  for (int n = 3; n <= 5; ++n)
    for (int row = 1; row < n - 1; ++row)
      for_each_nilp(n, [&](const Nilp& p) {
        const Nilp g = involution_g(p, row);
        int pv_lo = 0, pv_hi = 0, gv_lo = 0, gv_hi = 0;
        for (int t = row + 1; t < n; ++t) {
          pv_lo += p.step_in_slice(t, row) == Step::V;
          pv_hi += p.step_in_slice(t, row + 1) == Step::V;
          gv_lo += g.step_in_slice(t, row) == Step::V;
          gv_hi += g.step_in_slice(t, row + 1) == Step::V;
        }
        ASSERT_EQ(gv_lo, pv_hi);
        ASSERT_EQ(gv_hi, pv_lo);
      });
}

TEST(Involutions, HIsValidInvolution) {
  for (int n = 1; n <= 5; ++n)
    for_each_nilp(n, [&](const Nilp& p) {
      const Nilp h = involution_h(p);
      ASSERT_EQ(involution_h(h), p);
      if (n > 1) ASSERT_EQ(h.path(1), p.path(1));
      if (n > 1) ASSERT_EQ(h.extra()[1], p.extra()[1]);
      for (int k = 2; k <= n; ++k) ASSERT_EQ(u_statistic(h, k), u_statistic(p, k));
      ASSERT_EQ(u_statistic(h, 0), n - 1 - u_statistic(p, 1));
    });
}

TEST(Involutions, RefinedCountIdentity) {
  for (int n = 2; n <= 5; ++n)
    for (int i = 2; i <= n; ++i) {
      std::map<std::pair<int, int>, int> u0, u1;
      for_each_nilp(n, [&](const Nilp& p) {
        ++u0[{u_statistic(p, 0), u_statistic(p, i)}];
        ++u1[{u_statistic(p, 1), u_statistic(p, i)}];
      });
      for (const auto& [kj, c] : u0) ASSERT_EQ(c, (u1[{n - kj.first - 1, kj.second}])) << n << " " << i;
    }
}

TEST(Tsscpp, ArraysOfSizeThree) {
  std::vector<Tsscpp> listed;
  for (const auto& rows : kArraysThree) listed.emplace_back(3, parse(rows));
  auto rows_of = [](const std::vector<Tsscpp>& v) {
    std::vector<std::vector<std::string>> out;
    for (const auto& a : v) out.push_back(a.row_strings());
    std::sort(out.begin(), out.end());
    return out;
  };
  EXPECT_EQ(rows_of(enumerate_tsscpps(3)), rows_of(listed));
  EXPECT_EQ(listed[0].triangle(), (Triangle{{0}, {0, 0}, {0, 0, 0}}));
  EXPECT_EQ(listed[6].triangle(), (Triangle{{2}, {1, 1}, {0, 0, 0}}));
  // triangle 0/00/000 carries the all-vertical bundle
  EXPECT_EQ(tsscpp_to_nilp(listed[0]), Nilp::from_strings({"", "V", "VV"}));
}

TEST(Tsscpp, ValidationMessages) {
  auto h = parse(kArraysThree[4]);
  EXPECT_EQ(tsscpp_violation(3, h), "");
  auto bad = h;
  std::swap(bad[0][3], bad[0][4]);
  EXPECT_NE(tsscpp_violation(3, bad).find("row not weakly decreasing"), std::string::npos);
  bad = h;
  bad[2][5] = 2;
  bad[5][2] = 2;
  EXPECT_NE(tsscpp_violation(3, bad), "");
  bad = h;
  bad[1][4] = 2;
  EXPECT_NE(tsscpp_violation(3, bad).find("symmetric"), std::string::npos);
  EXPECT_THROW(Tsscpp(3, bad), std::invalid_argument);
  EXPECT_THROW(Tsscpp::from_triangle(3, {{3}, {0, 0}, {0, 0, 0}}), std::invalid_argument);
  EXPECT_THROW(Tsscpp::from_triangle(3, {{1}, {0, 1}, {0, 0, 0}}), std::invalid_argument);
}

TEST(Tsscpp, CountsAndBijection) {
  for (int n = 1; n <= 5; ++n) {
    const auto arrays = enumerate_tsscpps(n);
    EXPECT_EQ(arrays.size(), asm6v::asm_count_formula(n).get_ui());
    std::set<std::vector<Path>> images;
    for (const auto& a : arrays) {
      const Nilp p = tsscpp_to_nilp(a);
      ASSERT_EQ(nilp_to_tsscpp(p), a);
      images.insert(p.paths());
    }
    EXPECT_EQ(images.size(), arrays.size());
    for (const auto& p : enumerate_nilps(n)) ASSERT_EQ(tsscpp_to_nilp(nilp_to_tsscpp(p)), p);
  }
}

TEST(Tsscpp, MrrFormulasAgreeAndMatchPathStatistics) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::multiset<int>> mrr(n + 2), u(n + 1);
    for (const auto& a : enumerate_tsscpps(n)) {
      const Nilp p = tsscpp_to_nilp(a);
      for (int k = 1; k <= n + 1; ++k) {
        const int m = mrr_statistic_upper(a, k);
        ASSERT_EQ(m, mrr_statistic_lower(a, k));
        mrr[k].insert(m);
        // pointwise through the bijection: MRR k is u^k, and MRR n+1 is u^n
        ASSERT_EQ(m, u_statistic(p, std::min(k, n)));
      }
      for (int k = 0; k <= n; ++k) u[k].insert(u_statistic(p, k));
    }
    EXPECT_EQ(mrr[1], u[0]);
    EXPECT_EQ(mrr[1], u[1]);
    EXPECT_EQ(mrr[n + 1], u[n]);
  }
  EXPECT_THROW(mrr_statistic_upper(enumerate_tsscpps(2)[0], 0), std::out_of_range);
  EXPECT_THROW(mrr_statistic_lower(enumerate_tsscpps(2)[0], 4), std::out_of_range);
}

}  // namespace
}  // namespace asmtss::nilp
