#include "asmtss/six_vertex.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace asmtss::asm6v {

namespace {

Vertex classify(bool left_right, bool right_right, bool top_up, bool bottom_up) {
  const bool in_left = left_right, in_right = !right_right;
  const bool in_top = !top_up, in_bottom = bottom_up;
  if (in_left && in_right && !in_top && !in_bottom) return Vertex::c1;
  if (!in_left && !in_right && in_top && in_bottom) return Vertex::c2;
  if (left_right && top_up) return Vertex::a1;
  if (!left_right && !top_up) return Vertex::a2;
  if (left_right) return Vertex::b1;
  return Vertex::b2;
}

}  // namespace

char weight_class(Vertex v) {
  switch (v) {
    case Vertex::a1:
    case Vertex::a2:
      return 'a';
    case Vertex::b1:
    case Vertex::b2:
      return 'b';
    default:
      return 'c';
  }
}

const char* to_string(Vertex v) {
  static const char* names[] = {"a1", "a2", "b1", "b2", "c1", "c2"};
  return names[static_cast<int>(v)];
}

std::string vertex_grid_violation(int n, const std::vector<std::vector<bool>>& right,
                                  const std::vector<std::vector<bool>>& up) {
  if (static_cast<int>(right.size()) != n || static_cast<int>(up.size()) != n + 1) return "edge arrays have wrong shape";
  for (const auto& row : right)
    if (static_cast<int>(row.size()) != n + 1) return "edge arrays have wrong shape";
  for (const auto& row : up)
    if (static_cast<int>(row.size()) != n) return "edge arrays have wrong shape";
  for (int r = 0; r < n; ++r) {
    if (!right[r][0]) return "left boundary arrow in row " + std::to_string(r + 1) + " points out";
    if (right[r][n]) return "right boundary arrow in row " + std::to_string(r + 1) + " points out";
  }
  for (int c = 0; c < n; ++c) {
    if (!up[0][c]) return "top boundary arrow in column " + std::to_string(c + 1) + " points in";
    if (up[n][c]) return "bottom boundary arrow in column " + std::to_string(c + 1) + " points in";
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int in = int(right[r][c]) + int(!right[r][c + 1]) + int(!up[r][c]) + int(up[r + 1][c]);
      if (in != 2) return "ice rule fails at vertex (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
    }
  return "";
}

VertexGrid::VertexGrid(int n, std::vector<std::vector<bool>> right, std::vector<std::vector<bool>> up) {
  const std::string why = vertex_grid_violation(n, right, up);
  if (!why.empty()) throw std::invalid_argument("VertexGrid: " + why);
  n_ = n;
  right_ = std::move(right);
  up_ = std::move(up);
}

Vertex VertexGrid::vertex(int r, int c) const {
  return classify(right_[r][c], right_[r][c + 1], up_[r][c], up_[r + 1][c]);
}

VertexGrid asm_to_six_vertex(const Asm& a) {
  const int n = a.n();
  std::vector<std::vector<bool>> right(n, std::vector<bool>(n + 1));
  std::vector<std::vector<bool>> up(n + 1, std::vector<bool>(n));
  std::vector<int> col(n, 0);
  for (int c = 0; c < n; ++c) up[0][c] = true;
  for (int r = 0; r < n; ++r) {
    int row = 0;
    right[r][0] = true;
    for (int c = 0; c < n; ++c) {
      row += a(r, c);
      col[c] += a(r, c);
      right[r][c + 1] = row == 0;
      up[r + 1][c] = col[c] == 0;
    }
  }
  return VertexGrid(n, std::move(right), std::move(up));
}

Asm six_vertex_to_asm(const VertexGrid& g) {
  const int n = g.n();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Vertex v = g.vertex(r, c);
      rows[r][c] = v == Vertex::c1 ? 1 : (v == Vertex::c2 ? -1 : 0);
    }
  return Asm(rows);
}

std::vector<VertexGrid> enumerate_six_vertex(int n) {
  std::vector<VertexGrid> out;
  if (n < 0) throw std::invalid_argument("enumerate_six_vertex: negative size");
  std::vector<std::vector<bool>> right(n, std::vector<bool>(n + 1));
  std::vector<std::vector<bool>> up(n + 1, std::vector<bool>(n));
  for (int r = 0; r < n; ++r) right[r][0] = true;
  for (int c = 0; c < n; ++c) up[0][c] = true;
  // choose the right and bottom edge of each vertex in row-major order; the
  // left and top edges are already fixed
  std::function<void(int)> rec = [&](int k) {
    if (k == n * n) {
      out.emplace_back(n, right, up);
      return;
    }
    const int r = k / n, c = k % n;
    const int fixed_in = int(right[r][c]) + int(!up[r][c]);
    for (int rr = 0; rr < 2; ++rr)
      for (int bu = 0; bu < 2; ++bu) {
        if (fixed_in + int(!rr) + int(bu) != 2) continue;
        if (c == n - 1 && rr) continue;
        if (r == n - 1 && bu) continue;
        right[r][c + 1] = rr;
        up[r + 1][c] = bu;
        rec(k + 1);
      }
  };
  rec(0);
  return out;
}

std::vector<std::vector<Vertex>> vertex_types_all(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::vector<Vertex>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<Vertex>> all;
  for_each_asm(n, [&](const Asm& a) {
    const VertexGrid g = asm_to_six_vertex(a);
    std::vector<Vertex> t(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) t[r * n + c] = g.vertex(r, c);
    all.push_back(std::move(t));
  });
  return cache.emplace(n, std::move(all)).first->second;
}

Cyclo refined_from_Z(int n, const Cyclo& t, const Cyclo& u, Convention convention) {
  if (n < 1) throw std::invalid_argument("refined_from_Z: n must be positive");
  if (convention == Convention::kPlain) throw std::invalid_argument("refined_from_Z: ASM convention required");
  const Cyclo q = Cyclo::q();
  const Cyclo qt = q + t;
  const Cyclo uden = convention == Convention::kTilde ? Cyclo(1) + q * u : q + u;
  if (qt.is_zero() || uden.is_zero()) throw std::domain_error("refined_from_Z: sample point hits a pole");
  std::vector<Cyclo> z(2 * n, Cyclo(1));
  z[0] = (Cyclo(1) + q * t) / qt;
  z[2 * n - 1] = convention == Convention::kTilde ? (q + u) / uden : (Cyclo(1) + q * u) / uden;
  const Cyclo zn = partition_function(n, z, Cyclo::q_half());
  const Cyclo pref = power(q * q * qt * uden, n - 1);
  return pref * zn / power(Cyclo(3), n * (n - 1) / 2);
}

}  // namespace asmtss::asm6v
