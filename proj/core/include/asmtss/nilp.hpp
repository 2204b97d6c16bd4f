#pragma once

#include "asmtss/genpoly.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace asmtss::nilp {

enum class Step : std::uint8_t { V, D };  // vertical (0,1), diagonal (1,1)

using Path = std::vector<Step>;

/// Non-intersecting lattice paths of size n with their extra steps.
///
/// Path t (t = 0..n-1) starts at (t, -t) and has t steps, ending on y = 0.
/// Step s (1-based) of path t crosses slice t-s+1; slice i lies between
/// y = -i and y = 1-i, and slice 0 holds the extra steps.
class Nilp {
 public:
  Nilp() = default;
  /// Throws std::invalid_argument naming the first problem.
  explicit Nilp(std::vector<Path> paths);
  /// Paths as "V"/"D" strings, path 0 being "".
  static Nilp from_strings(const std::vector<std::string>& paths);
  /// No validation; for enumerators that only build valid bundles.
  static Nilp from_valid_paths(std::vector<Path> paths);

  int n() const { return static_cast<int>(paths_.size()); }
  const std::vector<Path>& paths() const { return paths_; }
  const Path& path(int t) const { return paths_[t]; }
  const Path& extra() const { return extra_; }
  Step step_in_slice(int t, int slice) const;

  /// x-coordinate of path t at height y (-t <= y <= 0).
  int x_at(int t, int y) const;
  /// x-coordinate after the extra step.
  int final_x(int t) const;

  std::string path_string(int t) const;
  std::vector<std::string> path_strings() const;

  friend bool operator==(const Nilp& a, const Nilp& b) { return a.paths_ == b.paths_; }
  friend bool operator<(const Nilp& a, const Nilp& b) { return a.paths_ < b.paths_; }

 private:
  std::vector<Path> paths_;
  Path extra_;
};

/// Empty string when the paths form a valid bundle.
std::string nilp_violation(const std::vector<Path>& paths);

/// The extra steps: path 0 takes D, and each following extra step makes the
/// final x-coordinate differ from the previous one by an odd number.
Path extra_steps(const std::vector<Path>& paths);

/// u^0 counts vertical extra steps. For k >= 1, u^k counts paths t >= 1
/// whose step max(1, t-k+1) is vertical. Throws std::out_of_range unless
/// 0 <= k <= n.
int u_statistic(const Nilp& p, int k);
std::vector<int> u_vector(const Nilp& p);

/// Visits every bundle of size n once, in lexicographic order of paths
/// (V < D). With workers > 1 subtrees are explored concurrently, but the
/// visitor still sees the same sequence (buffered per subtree).
void for_each_nilp(int n, const std::function<void(const Nilp&)>& visit, unsigned workers = 1);
std::vector<Nilp> enumerate_nilps(int n);
std::uint64_t count_nilps(int n, unsigned workers = 1);

/// Sum over bundles of x^{u^i} y^{u^j}.
GenPoly genfun_U(int n, int i, int j, unsigned workers = 1);

/// Involution on slices row+1 and row (1 <= row <= n-1). For paths t > row
/// the steps in those slices form a double step; within each island of
/// paths with adjacent positions at y = -(row+1), read left to right as
/// VV^r VD^s DV^t DD^u, the counts s and t are exchanged.
Nilp involution_g(const Nilp& p, int row);

/// Involution on slice 1 and the extra steps. Islands are runs of paths
/// t >= 1 at adjacent positions on y = -1. On an island whose double steps
/// are all VV or DD (position of path t at y = -1 congruent to t+1 mod 2),
/// the slice-1 pattern V^r D^s becomes V^s D^r; extra steps are recomputed.
Nilp involution_h(const Nilp& p);

const char* to_string(Step s);

}  // namespace asmtss::nilp
