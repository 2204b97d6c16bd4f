#pragma once

#include "asmtss/genpoly.hpp"
#include "asmtss/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace asmtss::suites {

/// Knobs shared by all verification suites. samples < 0 selects the
/// suite's own default. The seed for size n is derived from `seed` and n,
/// so a range run and the individual runs agree.
struct SuiteOptions {
  int samples = -1;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct SuiteInfo {
  std::string name;
  int min_n;
  int max_n;
  int default_samples;  // -1 when the suite takes no samples
  std::string summary;
};

const std::vector<SuiteInfo>& suite_table();
/// Throws std::invalid_argument for an unknown name.
const SuiteInfo& suite_info(const std::string& name);

/// Runs one suite at one size. Throws std::invalid_argument for an unknown
/// suite or an n outside [min_n, max_n].
Report run_suite(const std::string& name, int n, const SuiteOptions& options = {});

std::uint64_t seed_for(std::uint64_t seed, int n);

/// A single record comparing two generating polynomials; on mismatch the
/// point lists every differing coefficient.
CheckRecord compare_genpoly(const std::string& check, int n, const GenPoly& expected, const GenPoly& got,
                            std::vector<std::string> point = {});

// Individual suites.
Report doubly_refined_suite(int n, unsigned workers);
Report zeilid_suite(int n, int random_phis, std::uint64_t seed);
Report appendix_d_suite(int n, int samples, std::uint64_t seed, unsigned workers);
Report bijections_suite(int n);
Report involutions_suite(int n, unsigned workers);
Report mrr_suite(int n);
Report wheel_suite(int n, int samples, std::uint64_t seed);

}  // namespace asmtss::suites
