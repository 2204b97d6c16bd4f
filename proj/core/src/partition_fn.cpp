#include "asmtss/partition_fn.hpp"

#include "asmtss/parallel.hpp"
#include "asmtss/sampling.hpp"
#include "asmtss/six_vertex.hpp"

#include <algorithm>
#include <numeric>

namespace asmtss::pfn {

std::vector<int> staircase_shape(int n) {
  std::vector<int> lambda;
  for (int v = n - 1; v >= 0; --v) {
    lambda.push_back(v);
    lambda.push_back(v);
  }
  return lambda;
}

std::vector<std::vector<int>> dyck_specializations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> eps;
  std::function<void(int, int)> rec = [&](int left, int sum) {
    if (left == 0) {
      if (sum == 0) out.push_back(eps);
      return;
    }
    // remaining steps must be able to bring the sum back to 0
    for (int e : {-1, 1}) {
      const int s = sum + e;
      if (s > 0 || -s > left - 1) continue;
      eps.push_back(e);
      rec(left - 1, s);
      eps.pop_back();
    }
  };
  if (n >= 0) rec(2 * n, 0);
  return out;
}

Report verify_dyck_values(int n, unsigned workers) {
  const auto specs = dyck_specializations(n);
  const Cyclo q = Cyclo::q(), qi = q.inverse();
  const Cyclo expected = power(Cyclo(3), n * (n - 1) / 2);
  return parallel_map<CheckRecord>(specs.size(), workers, [&](std::size_t idx) {
    std::vector<Cyclo> z;
    CheckRecord rec;
    rec.check = "dyck";
    rec.n = n;
    for (int e : specs[idx]) {
      z.push_back(e > 0 ? q : qi);
      rec.point.push_back(e > 0 ? "+1" : "-1");
    }
    const Cyclo got = schur_staircase(n, z);
    rec.expected = expected.to_string();
    rec.got = got.to_string();
    rec.pass = got == expected;
    return rec;
  });
}

namespace {

std::vector<int> distinct_indices(SamplePoints& pts, int m, int count) {
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), pts.engine());
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

Report wheel_check(const CycloEvaluator& p, int n, int samples, std::uint64_t seed) {
  Report report;
  if (2 * n < 3) throw std::invalid_argument("wheel_check: need at least three variables");
  SamplePoints pts(seed);
  const Cyclo q = Cyclo::q();
  for (int s = 0; s < samples; ++s) {
    std::vector<Cyclo> z;
    for (int k = 0; k < 2 * n; ++k) z.push_back(pts.cyclo());
    const auto ijk = distinct_indices(pts, 2 * n, 3);
    z[ijk[1]] = q * q * z[ijk[0]];
    z[ijk[2]] = power(q, 4) * z[ijk[0]];
    const Cyclo got = p(z);
    CheckRecord rec;
    rec.check = "wheel";
    rec.n = n;
    rec.point = to_strings(z);
    rec.expected = "0";
    rec.got = got.to_string();
    rec.pass = got.is_zero();
    report.push_back(std::move(rec));
  }
  return report;
}

Report recursion_check_q3(int n, int samples, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("recursion_check_q3: n must be at least 2");
  Report report;
  SamplePoints pts(seed);
  const Cyclo q = Cyclo::q();
  const Cyclo qm2 = power(q, -2);
  for (int s = 0; s < samples; ++s) {
    std::vector<Cyclo> z;
    for (int k = 0; k < 2 * n; ++k) z.push_back(Cyclo(pts.rational()));
    const auto ij = distinct_indices(pts, 2 * n, 2);
    int i = ij[0], j = ij[1];
    if (pts.integer(0, 1)) std::swap(i, j);
    if (s == 0) z[i] = Cyclo(0);
    z[j] = q * q * z[i];
    std::vector<Cyclo> rest;
    Cyclo pref_b(1), pref_q(1);
    for (int k = 0; k < 2 * n; ++k) {
      if (k == i || k == j) continue;
      rest.push_back(z[k]);
      pref_b = pref_b * (qm2 * z[i] - z[k]);
      pref_q = pref_q * (q * z[i] - z[k]);
    }
    const Cyclo lower = schur_staircase(n - 1, rest);
    const Cyclo lhs = schur_staircase(n, z);
    const Cyclo rhs = pref_b * lower;
    std::vector<std::string> point = to_strings(z);
    point.push_back("i=" + std::to_string(i + 1));
    point.push_back("j=" + std::to_string(j + 1));
    report.push_back({"recursion", n, point, rhs.to_string(), lhs.to_string(), lhs == rhs});
    const Cyclo other = pref_q * lower;
    if (!other.is_zero()) {
      const Cyclo ratio = rhs / other;
      report.push_back({"recursion-constant", n, point, "1", ratio.to_string(), ratio == Cyclo(1)});
    } else {
      report.push_back({"recursion-constant", n, point, "0", rhs.to_string(), rhs.is_zero()});
    }
  }
  return report;
}

Cyclo zprime_residue_sum(int n, const std::vector<Cyclo>& z) { return zprime_residue_sum<Cyclo>(n, z, Cyclo::q()); }

Report zprime_check(int n, int samples, std::uint64_t seed, unsigned workers) {
  SamplePoints pts(seed);
  std::vector<std::vector<Cyclo>> points;
  for (int s = 0; s < samples; ++s) {
    std::vector<Cyclo> z;
    while (static_cast<int>(z.size()) < 2 * n) {
      const Cyclo c = pts.cyclo();
      if (std::find(z.begin(), z.end(), c) == z.end()) z.push_back(c);
    }
    points.push_back(std::move(z));
  }
  return parallel_map<CheckRecord>(points.size(), workers, [&](std::size_t idx) {
    const auto& z = points[idx];
    const Cyclo want = schur_staircase(n, z);
    const Cyclo got = zprime_residue_sum(n, z);
    return CheckRecord{"zprime", n, to_strings(z), want.to_string(), got.to_string(), want == got};
  });
}

Report six_vertex_schur_check(int n, int samples, std::uint64_t seed) {
  Report report;
  SamplePoints pts(seed);
  const Cyclo r = Cyclo::q_half();
  for (int k = 0; k < samples; ++k) {
    std::vector<Cyclo> s, z;
    while (static_cast<int>(s.size()) < 2 * n) {
      const Cyclo c = pts.cyclo();
      if (c.is_zero()) continue;
      s.push_back(c);
      z.push_back(c * c);
    }
    const Cyclo zt = asm6v::weighted_partition_sum(n, s, r);
    const Cyclo got = asm6v::normalize_Z(zt, n, s, r);
    const Cyclo want = schur_staircase(n, z);
    report.push_back({"six-vertex-schur", n, to_strings(s), want.to_string(), got.to_string(), want == got});
  }
  return report;
}

}  // namespace asmtss::pfn
