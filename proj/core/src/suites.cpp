#include "asmtss/suites.hpp"

#include "asmtss/asm.hpp"
#include "asmtss/lgv.hpp"
#include "asmtss/nilp.hpp"
#include "asmtss/partition_fn.hpp"
#include "asmtss/residue.hpp"
#include "asmtss/six_vertex.hpp"
#include "asmtss/tsscpp.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace asmtss::suites {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string rows_string(const std::vector<std::vector<int>>& rows) {
  std::vector<std::string> parts;
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    for (int v : r) cells.push_back(std::to_string(v));
    parts.push_back("[" + join(cells, ",") + "]");
  }
  return "[" + join(parts, ",") + "]";
}

std::string nilp_string(const nilp::Nilp& p) { return "[" + join(p.path_strings(), ",") + "]"; }

std::string ints_string(const std::vector<int>& v) {
  std::vector<std::string> cells;
  for (int x : v) cells.push_back(std::to_string(x));
  return "[" + join(cells, ",") + "]";
}

std::vector<std::string> nilp_point(const nilp::Nilp& p) {
  std::vector<std::string> point;
  for (const auto& s : p.path_strings()) point.push_back("path=" + s);
  return point;
}

}  // namespace

std::uint64_t seed_for(std::uint64_t seed, int n) { return seed * 1000003ULL + static_cast<std::uint64_t>(n); }

CheckRecord compare_genpoly(const std::string& check, int n, const GenPoly& expected, const GenPoly& got,
                            std::vector<std::string> point) {
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, c] : expected.coefficients()) keys.insert(k);
  for (const auto& [k, c] : got.coefficients()) keys.insert(k);
  for (const auto& [i, j] : keys) {
    const auto a = expected.coefficient(i, j), b = got.coefficient(i, j);
    if (a != b)
      point.push_back("x^" + std::to_string(i) + "*y^" + std::to_string(j) + ": " + std::to_string(a) + " vs " +
                      std::to_string(b));
  }
  return {check, n, std::move(point), expected.to_string(), got.to_string(), expected == got};
}

Report doubly_refined_suite(int n, unsigned workers) {
  Report out;
  const GenPoly a = asm6v::genfun_doubly_refined(n, Convention::kTilde, workers);
  const GenPoly u = nilp::genfun_U(n, 0, 1, workers);
  out.push_back(compare_genpoly("theorem", n, a, u));
  out.push_back(compare_genpoly("lgv", n, u, nilp::lgv_genfun_xy(n)));
  if (n <= 5) append(out, residue::integral_route_check(n, workers));
  return out;
}

Report zeilid_suite(int n, int random_phis, std::uint64_t seed) {
  Report out;
  append(out, residue::zeilid_check(n, Rational(1), MultiPoly<Rational>(1)));
  append(out, residue::zeilid_check(n, Rational(1), residue::phi_xy(n)));
  for (int k = 0; k < random_phis; ++k)
    append(out, residue::zeilid_check(n, Rational(1), residue::random_symmetric_phi(n, seed + k)));
  return out;
}

Report appendix_d_suite(int n, int samples, std::uint64_t seed, unsigned workers) {
  Report out;
  append(out, residue::bn_check(n, samples, seed, workers));
  append(out, residue::cauchy_check(n, samples, seed + 1));
  append(out, residue::f_split_check(samples, seed + 2));
  if (n <= 3) append(out, residue::homogeneous_limit_check(n));
  return out;
}

Report bijections_suite(int n) {
  Report out;
  const auto asms = asm6v::enumerate_asms(n);
  for (const auto& a : asms) {
    const auto grid = asm6v::asm_to_six_vertex(a);
    const auto back = asm6v::six_vertex_to_asm(grid);
    out.push_back({"asm-six-vertex", n, {"asm=" + rows_string(a.rows())}, rows_string(a.rows()),
                   rows_string(back.rows()), back == a});
  }
  const auto tsscpps = nilp::enumerate_tsscpps(n);
  for (const auto& t : tsscpps) {
    const auto p = nilp::tsscpp_to_nilp(t);
    const auto back = nilp::nilp_to_tsscpp(p);
    out.push_back({"tsscpp-nilp", n, {"tsscpp=[" + join(t.row_strings(), ",") + "]"}, join(t.row_strings(), ","),
                   join(back.row_strings(), ","), back == t});
  }
  const auto nilps = nilp::enumerate_nilps(n);
  std::set<std::vector<nilp::Path>> images;
  for (const auto& p : nilps) {
    const auto tri = nilp::nilp_to_triangle(p);
    const auto back = nilp::triangle_to_nilp(n, tri);
    images.insert(nilp::tsscpp_to_nilp(nilp::nilp_to_tsscpp(p)).paths());
    out.push_back({"nilp-triangle", n, nilp_point(p), nilp_string(p), nilp_string(back), back == p});
  }
  const std::string formula = asm6v::asm_count_formula(n).get_str();
  const std::string counts = std::to_string(asms.size()) + "," + std::to_string(tsscpps.size()) + "," +
                             std::to_string(nilps.size()) + "," + std::to_string(images.size());
  out.push_back({"counts", n, {"asm,tsscpp,nilp,distinct-images"}, join({formula, formula, formula, formula}, ","),
                 counts, counts == join({formula, formula, formula, formula}, ",")});
  if (n <= 5) {
    const std::string six = std::to_string(asm6v::enumerate_six_vertex(n).size());
    out.push_back({"six-vertex-count", n, {}, formula, six, six == formula});
  }
  return out;
}

Report involutions_suite(int n, unsigned workers) {
  Report out;
  nilp::for_each_nilp(n, [&](const nilp::Nilp& p) {
    for (int row = 1; row <= std::max(1, n - 1); ++row) {
      const auto gg = nilp::involution_g(nilp::involution_g(p, row), row);
      auto point = nilp_point(p);
      point.push_back("row=" + std::to_string(row));
      out.push_back({"g-involution", n, point, nilp_string(p), nilp_string(gg), gg == p});
    }
    const auto h = nilp::involution_h(p);
    const auto hh = nilp::involution_h(h);
    out.push_back({"h-involution", n, nilp_point(p), nilp_string(p), nilp_string(hh), hh == p});
    const int expected = n - 1 - nilp::u_statistic(p, 1), got = nilp::u_statistic(h, 0);
    out.push_back({"h-slice-swap", n, nilp_point(p), std::to_string(expected), std::to_string(got), expected == got});
  });
  const GenPoly u01 = nilp::genfun_U(n, 0, 1, workers);
  for (int i = 1; i <= n; ++i)
    out.push_back(compare_genpoly("u0i-independence", n, u01, nilp::genfun_U(n, 0, i, workers),
                                  {"i=" + std::to_string(i)}));
  for (int i = 2; i <= n; ++i) {
    const GenPoly u0i = nilp::genfun_U(n, 0, i, workers);
    GenPoly mirrored;
    for (const auto& [kj, c] : u0i.coefficients())
      mirrored.add(n - kj.first - 1, kj.second, c);
    out.push_back(compare_genpoly("u0-u1-mirror", n, mirrored, nilp::genfun_U(n, 1, i, workers),
                                  {"i=" + std::to_string(i)}));
  }
  return out;
}

Report mrr_suite(int n) {
  Report out;
  for (const auto& t : nilp::enumerate_tsscpps(n)) {
    const auto p = nilp::tsscpp_to_nilp(t);
    std::vector<int> expected, upper, lower;
    for (int k = 1; k <= n + 1; ++k) {
      expected.push_back(nilp::u_statistic(p, std::min(k, n)));
      upper.push_back(nilp::mrr_statistic_upper(t, k));
      lower.push_back(nilp::mrr_statistic_lower(t, k));
    }
    const std::vector<std::string> point{"tsscpp=[" + join(t.row_strings(), ",") + "]", "nilp=" + nilp_string(p)};
    out.push_back({"mrr-upper", n, point, ints_string(expected), ints_string(upper), upper == expected});
    out.push_back({"mrr-lower", n, point, ints_string(expected), ints_string(lower), lower == expected});
  }
  return out;
}

Report wheel_suite(int n, int samples, std::uint64_t seed) {
  return pfn::wheel_check([n](const std::vector<Cyclo>& z) { return pfn::schur_staircase(n, z); }, n, samples, seed);
}

const std::vector<SuiteInfo>& suite_table() {
  static const std::vector<SuiteInfo> table = {
      {"doubly-refined", 1, 7, -1, "ASM, NILP, LGV and (n <= 5) integral routes to the doubly refined polynomial"},
      {"dyck", 1, 6, -1, "Schur function at every Dyck specialization equals 3^{n(n-1)/2}"},
      {"wheel", 2, 5, 20, "Schur function vanishes on wheels z, q^2 z, q^4 z"},
      {"recursion", 2, 5, 10, "Schur function recursion at z_j = q^2 z_i"},
      {"zeilid", 1, 4, 3, "antisymmetrization identity for the constant-term integrals"},
      {"a-independence", 1, 5, 3, "interpolating integral independent of the a-vector"},
      {"appendix-d", 1, 4, 10, "B_n closed form, Cauchy determinant, partial fractions, homogeneous limit"},
      {"even-partitions", 1, 5, -1, "sum over even partitions of Schur functions as a product"},
      {"bijections", 1, 6, -1, "ASM <-> six-vertex, TSSCPP <-> NILP <-> triangle round trips and counts"},
      {"involutions", 1, 6, -1, "involutions g and h, refined count identities"},
      {"mrr", 1, 6, -1, "array formulas against the path statistics"},
  };
  return table;
}

const SuiteInfo& suite_info(const std::string& name) {
  for (const auto& s : suite_table())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

Report run_suite(const std::string& name, int n, const SuiteOptions& options) {
  const SuiteInfo& info = suite_info(name);
  if (n < info.min_n || n > info.max_n) {
    std::ostringstream os;
    os << "suite '" << name << "' supports n in " << info.min_n << ".." << info.max_n << ", got " << n;
    throw std::invalid_argument(os.str());
  }
  const int samples = options.samples < 0 ? info.default_samples : options.samples;
  const std::uint64_t seed = seed_for(options.seed, n);
  const unsigned workers = options.workers;
  if (name == "doubly-refined") return doubly_refined_suite(n, workers);
  if (name == "dyck") return pfn::verify_dyck_values(n, workers);
  if (name == "wheel") return wheel_suite(n, samples, seed);
  if (name == "recursion") return pfn::recursion_check_q3(n, samples, seed);
  if (name == "zeilid") return zeilid_suite(n, samples, seed);
  if (name == "a-independence") return residue::a_independence_check(n, samples, seed);
  if (name == "appendix-d") return appendix_d_suite(n, samples, seed, workers);
  if (name == "even-partitions") return residue::even_partition_sum_check(n, 2 * n + 2);
  if (name == "bijections") return bijections_suite(n);
  if (name == "involutions") return involutions_suite(n, workers);
  return mrr_suite(n);
}

}  // namespace asmtss::suites
