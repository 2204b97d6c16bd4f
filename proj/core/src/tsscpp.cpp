#include "asmtss/tsscpp.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace asmtss::nilp {

namespace {

// Whether the unit cube (i, j, k), 1-based in [1, 2n]^3, belongs to the
// partition described by the triangle.
bool has_cube(int n, const Triangle& tri, int i, int j, int k) {
  std::array<int, 3> c = {i, j, k};
  const int high = int(i > n) + int(j > n) + int(k > n);
  if (high < 2) return !has_cube(n, tri, 2 * n + 1 - i, 2 * n + 1 - j, 2 * n + 1 - k);
  std::sort(c.begin(), c.end(), std::greater<>());
  // c[0] >= c[1] > n; c[2] is the height coordinate
  return c[2] <= tri[c[0] - n - 1][c[1] - n - 1];
}

}  // namespace

std::string triangle_violation(int n, const Triangle& tri) {
  if (static_cast<int>(tri.size()) != n) return "triangle must have n rows";
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(tri[r].size()) != r + 1) return "triangle row " + std::to_string(r + 1) + " has wrong length";
    for (int c = 0; c <= r; ++c) {
      const int v = tri[r][c];
      if (v < 0 || v > n - 1 - r) return "triangle entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") out of range";
      if (c > 0 && v > tri[r][c - 1]) return "triangle row " + std::to_string(r + 1) + " increases";
      if (c < r && v > tri[r - 1][c]) return "triangle column " + std::to_string(c + 1) + " increases";
    }
  }
  return "";
}

std::string tsscpp_violation(int n, const Heights& a) {
  const int m = 2 * n;
  if (static_cast<int>(a.size()) != m) return "array must have 2n rows";
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != m) return "array must have 2n columns";
  auto cell = [](int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (a[i][j] < 0 || a[i][j] > m) return "height out of range at " + cell(i, j);
      if (j + 1 < m && a[i][j] < a[i][j + 1]) return "row not weakly decreasing at " + cell(i, j);
      if (i + 1 < m && a[i][j] < a[i + 1][j]) return "column not weakly decreasing at " + cell(i, j);
      if (a[i][j] != a[j][i]) return "not symmetric at " + cell(i, j);
      if (a[i][j] + a[m - 1 - i][m - 1 - j] != m) return "not self-complementary at " + cell(i, j);
    }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k)
        if ((k <= a[i - 1][j - 1]) != (i <= a[j - 1][k - 1]))
          return "not cyclically symmetric at cube (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + ")";
  return "";
}

Tsscpp::Tsscpp(int n, Heights heights) {
  const std::string why = tsscpp_violation(n, heights);
  if (!why.empty()) throw std::invalid_argument("Tsscpp: " + why);
  n_ = n;
  heights_ = std::move(heights);
}

Tsscpp Tsscpp::from_triangle(int n, const Triangle& tri) {
  const std::string why = triangle_violation(n, tri);
  if (!why.empty()) throw std::invalid_argument("Tsscpp::from_triangle: " + why);
  const int m = 2 * n;
  Heights h(m, std::vector<int>(m, 0));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k) h[i - 1][j - 1] += has_cube(n, tri, i, j, k);
  return Tsscpp(n, std::move(h));
}

Triangle Tsscpp::triangle() const {
  Triangle t(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c <= r; ++c) t[r].push_back(heights_[n_ + r][n_ + c]);
  return t;
}

std::vector<std::string> Tsscpp::row_strings() const {
  std::vector<std::string> out;
  for (const auto& row : heights_) {
    std::string s;
    for (int v : row) s += std::to_string(v) + (2 * n_ > 9 ? " " : "");
    if (2 * n_ > 9) s.pop_back();
    out.push_back(s);
  }
  return out;
}

std::vector<Triangle> enumerate_triangles(int n) {
  std::vector<Triangle> out;
  Triangle t(n);
  for (int r = 0; r < n; ++r) t[r].assign(r + 1, 0);
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == n) {
      out.push_back(t);
      return;
    }
    if (c > r) {
      rec(r + 1, 0);
      return;
    }
    int hi = n - 1 - r;
    if (c > 0) hi = std::min(hi, t[r][c - 1]);
    if (c < r) hi = std::min(hi, t[r - 1][c]);
    for (int v = 0; v <= hi; ++v) {
      t[r][c] = v;
      rec(r, c + 1);
    }
    t[r][c] = 0;
  };
  rec(0, 0);
  return out;
}

std::vector<Tsscpp> enumerate_tsscpps(int n) {
  std::vector<Tsscpp> out;
  for (const auto& t : enumerate_triangles(n)) out.push_back(Tsscpp::from_triangle(n, t));
  return out;
}

Nilp triangle_to_nilp(int n, const Triangle& tri) {
  const std::string why = triangle_violation(n, tri);
  if (!why.empty()) throw std::invalid_argument("triangle_to_nilp: " + why);
  std::vector<Path> paths(std::max(n, 0));
  for (int i = 1; i < n; ++i) {
    // path i separates the entries >= n-i; lambda[r] counts them in row r
    const int v = n - i;
    std::vector<int> lambda(i + 1, 0);
    int full = 0;
    for (int r = 1; r <= i; ++r) {
      for (int c = 1; c <= r; ++c) lambda[r] += tri[r - 1][c - 1] >= v;
      if (lambda[r] == r) full = r;
    }
    Path p;
    int x = 0;
    for (int r = i; r > full; --r) {
      p.insert(p.end(), lambda[r] - x, Step::D);
      x = lambda[r];
      p.push_back(Step::V);
    }
    p.insert(p.end(), full - x, Step::D);
    paths[i] = std::move(p);
  }
  return Nilp(std::move(paths));
}

Triangle nilp_to_triangle(const Nilp& p) {
  const int n = p.n();
  Triangle tri(n);
  for (int r = 0; r < n; ++r) tri[r].assign(r + 1, 0);
  for (int i = 1; i < n; ++i) {
    const Path& path = p.path(i);
    const int verticals = static_cast<int>(std::count(path.begin(), path.end(), Step::V));
    const int full = i - verticals;
    std::vector<int> lambda(i + 1, 0);
    for (int r = 1; r <= full; ++r) lambda[r] = r;
    int x = 0, r = i;
    for (Step s : path) {
      if (s == Step::D) ++x;
      else lambda[r--] = x;
    }
    const int v = n - i;
    for (int row = 1; row <= i; ++row)
      for (int c = 1; c <= lambda[row]; ++c) tri[row - 1][c - 1] = std::max(tri[row - 1][c - 1], v);
  }
  const std::string why = triangle_violation(n, tri);
  if (!why.empty()) throw std::logic_error("nilp_to_triangle: produced invalid triangle: " + why);
  return tri;
}

Nilp tsscpp_to_nilp(const Tsscpp& a) { return triangle_to_nilp(a.n(), a.triangle()); }

Tsscpp nilp_to_tsscpp(const Nilp& p) { return Tsscpp::from_triangle(p.n(), nilp_to_triangle(p)); }

int mrr_statistic_upper(const Tsscpp& a, int k) {
  const int n = a.n();
  if (k < 1 || k > n + 1) throw std::out_of_range("mrr_statistic: k must lie in [1, n+1]");
  auto at = [&](int t, int c) { return c == n + 1 ? 2 * n - t + 1 : a.a(t, c); };
  int s = 0;
  for (int t = 1; t <= n - k + 1; ++t) s += at(t, t + k - 1) - at(t, t + k);
  for (int t = n - k + 2; t <= n; ++t) s += a.a(t, n) > 2 * n - t + 1;
  return s;
}

int mrr_statistic_lower(const Tsscpp& a, int k) {
  const int n = a.n();
  if (k < 1 || k > n + 1) throw std::out_of_range("mrr_statistic: k must lie in [1, n+1]");
  auto at = [&](int t, int c) { return c == n ? 2 * n - t : a.a(t, c); };
  int s = 0;
  for (int t = n + k; t <= 2 * n; ++t) s += at(t, t - k) - at(t, t - k + 1);
  for (int t = n + 1; t <= n + k - 1; ++t) s += a.a(t, n + 1) < 2 * n - t;
  return s;
}

}  // namespace asmtss::nilp
