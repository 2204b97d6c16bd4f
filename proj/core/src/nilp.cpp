#include "asmtss/nilp.hpp"

#include "asmtss/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace asmtss::nilp {

namespace {

int d_count(const Path& p, int upto) {
  int d = 0;
  for (int s = 0; s < upto; ++s) d += p[s] == Step::D;
  return d;
}

}  // namespace

const char* to_string(Step s) { return s == Step::V ? "V" : "D"; }

std::string nilp_violation(const std::vector<Path>& paths) {
  const int n = static_cast<int>(paths.size());
  for (int t = 0; t < n; ++t)
    if (static_cast<int>(paths[t].size()) != t)
      return "path " + std::to_string(t) + " has " + std::to_string(paths[t].size()) + " steps, expected " +
             std::to_string(t);
  for (int t = 1; t < n; ++t) {
    // heights -(t-1)..0 are shared with path t-1
    int x = t + (paths[t][0] == Step::D);
    int px = t - 1;
    for (int k = 1; k <= t; ++k) {
      if (x <= px)
        return "paths " + std::to_string(t - 1) + " and " + std::to_string(t) + " touch at height " +
               std::to_string(-t + k);
      if (k < t) {
        x += paths[t][k] == Step::D;
        px += paths[t - 1][k - 1] == Step::D;
      }
    }
  }
  return "";
}

Path extra_steps(const std::vector<Path>& paths) {
  Path extra;
  int prev_final = 0;
  for (int t = 0; t < static_cast<int>(paths.size()); ++t) {
    const int end = t + d_count(paths[t], t);
    Step s = Step::D;
    if (t > 0) s = ((prev_final + 1 - end) % 2 + 2) % 2 ? Step::D : Step::V;
    extra.push_back(s);
    prev_final = end + (s == Step::D);
  }
  return extra;
}

Nilp::Nilp(std::vector<Path> paths) {
  const std::string why = nilp_violation(paths);
  if (!why.empty()) throw std::invalid_argument("Nilp: " + why);
  paths_ = std::move(paths);
  extra_ = extra_steps(paths_);
}

Nilp Nilp::from_valid_paths(std::vector<Path> paths) {
  Nilp p;
  p.paths_ = std::move(paths);
  p.extra_ = extra_steps(p.paths_);
  return p;
}

Nilp Nilp::from_strings(const std::vector<std::string>& paths) {
  std::vector<Path> ps;
  for (const auto& s : paths) {
    Path p;
    for (char c : s) {
      if (c == 'V') p.push_back(Step::V);
      else if (c == 'D') p.push_back(Step::D);
      else throw std::invalid_argument(std::string("Nilp: bad step character '") + c + "'");
    }
    ps.push_back(std::move(p));
  }
  return Nilp(std::move(ps));
}

Step Nilp::step_in_slice(int t, int slice) const {
  if (slice == 0) return extra_[t];
  if (slice < 1 || slice > t) throw std::out_of_range("Nilp::step_in_slice: path does not cross slice");
  return paths_[t][t - slice];
}

int Nilp::x_at(int t, int y) const {
  if (y < -t || y > 0) throw std::out_of_range("Nilp::x_at: height outside path");
  return t + d_count(paths_[t], y + t);
}

int Nilp::final_x(int t) const { return x_at(t, 0) + (extra_[t] == Step::D); }

std::string Nilp::path_string(int t) const {
  std::string s;
  for (Step st : paths_[t]) s += to_string(st);
  return s;
}

std::vector<std::string> Nilp::path_strings() const {
  std::vector<std::string> out;
  for (int t = 0; t < n(); ++t) out.push_back(path_string(t));
  return out;
}

int u_statistic(const Nilp& p, int k) {
  const int n = p.n();
  if (k < 0 || k > n) throw std::out_of_range("u_statistic: k must lie in [0, n]");
  int u = 0;
  if (k == 0) {
    for (Step s : p.extra()) u += s == Step::V;
    return u;
  }
  for (int t = 1; t < n; ++t) u += p.path(t)[std::max(1, t - k + 1) - 1] == Step::V;
  return u;
}

std::vector<int> u_vector(const Nilp& p) {
  std::vector<int> u;
  for (int k = 0; k <= p.n(); ++k) u.push_back(u_statistic(p, k));
  return u;
}

namespace {

// Depth-first extension path by path. xs[t][k] is the x-coordinate of path t
// after k steps.
class Builder {
 public:
  explicit Builder(int n) : n_(n), paths_(n), xs_(n) {
    for (int t = 0; t < n; ++t) {
      paths_[t].resize(t);
      xs_[t].assign(t + 1, t);
    }
  }

  // Calls emit(paths) for every completion starting at path `from`.
  template <class Emit>
  void run(int from, int until, Emit&& emit) {
    if (from == until) {
      emit(paths_);
      return;
    }
    extend(from, 0, until, emit);
  }

  std::vector<Path>& paths() { return paths_; }
  std::vector<std::vector<int>>& xs() { return xs_; }

 private:
  template <class Emit>
  void extend(int t, int k, int until, Emit& emit) {
    if (k == t) {
      run(t + 1, until, emit);
      return;
    }
    for (Step s : {Step::V, Step::D}) {
      const int x = xs_[t][k] + (s == Step::D);
      // after k+1 steps path t is at height -t+k+1, where path t-1 has made k steps
      if (t > 0 && x <= xs_[t - 1][k]) continue;
      paths_[t][k] = s;
      xs_[t][k + 1] = x;
      extend(t, k + 1, until, emit);
    }
  }

  int n_;
  std::vector<Path> paths_;
  std::vector<std::vector<int>> xs_;
};

std::vector<std::vector<Path>> prefixes(int n, int depth) {
  std::vector<std::vector<Path>> out;
  Builder b(n);
  b.run(0, depth, [&](const std::vector<Path>& ps) { out.push_back(ps); });
  return out;
}

void restore(Builder& b, const std::vector<Path>& ps, int depth) {
  for (int t = 0; t < depth; ++t) {
    b.paths()[t] = ps[t];
    for (int k = 0; k < t; ++k) b.xs()[t][k + 1] = b.xs()[t][k] + (ps[t][k] == Step::D);
  }
}

}  // namespace

void for_each_nilp(int n, const std::function<void(const Nilp&)>& visit, unsigned workers) {
  if (n < 0) throw std::invalid_argument("for_each_nilp: negative size");
  if (n == 0) {
    visit(Nilp());
    return;
  }
  if (workers <= 1 || n < 5) {
    Builder b(n);
    b.run(0, n, [&](const std::vector<Path>& ps) { visit(Nilp::from_valid_paths(ps)); });
    return;
  }
  const int depth = 4;
  const auto pre = prefixes(n, depth);
  const auto chunks = parallel_map<std::vector<Nilp>>(pre.size(), workers, [&](std::size_t i) {
    std::vector<Nilp> out;
    Builder b(n);
    restore(b, pre[i], depth);
    b.run(depth, n, [&](const std::vector<Path>& ps) { out.push_back(Nilp::from_valid_paths(ps)); });
    return out;
  });
  for (const auto& c : chunks)
    for (const auto& p : c) visit(p);
}

std::vector<Nilp> enumerate_nilps(int n) {
  std::vector<Nilp> out;
  for_each_nilp(n, [&](const Nilp& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_nilps(int n, unsigned workers) {
  if (n <= 1) return 1;
  const int depth = std::min(n, 4);
  const auto pre = prefixes(n, depth);
  const auto parts = parallel_map<std::uint64_t>(pre.size(), workers, [&](std::size_t i) {
    Builder b(n);
    restore(b, pre[i], depth);
    std::uint64_t k = 0;
    b.run(depth, n, [&](const std::vector<Path>&) { ++k; });
    return k;
  });
  std::uint64_t total = 0;
  for (auto k : parts) total += k;
  return total;
}

GenPoly genfun_U(int n, int i, int j, unsigned workers) {
  if (i < 0 || i > n || j < 0 || j > n) throw std::out_of_range("genfun_U: indices must lie in [0, n]");
  GenPoly g(Convention::kPlain);
  if (n == 0) {
    g.add(0, 0);
    return g;
  }
  const int depth = std::min(n, 4);
  const auto pre = prefixes(n, depth);
  const auto parts = parallel_map<GenPoly>(pre.size(), workers, [&](std::size_t idx) {
    GenPoly part;
    Builder b(n);
    restore(b, pre[idx], depth);
    b.run(depth, n, [&](const std::vector<Path>& ps) {
      const Nilp p = Nilp::from_valid_paths(ps);
      part.add(u_statistic(p, i), u_statistic(p, j));
    });
    return part;
  });
  for (const auto& part : parts)
    for (const auto& [e, c] : part.coefficients()) g.add(e.first, e.second, c);
  return g;
}

Nilp involution_g(const Nilp& p, int row) {
  const int n = p.n();
  if (row < 1 || row > std::max(1, n - 1)) throw std::out_of_range("involution_g: row must lie in [1, n-1]");
  std::vector<Path> paths = p.paths();
  // paths t > row cross slices row+1 and row at steps t-row and t-row+1
  int t = row + 1;
  while (t < n) {
    int end = t;
    while (end + 1 < n && p.x_at(end + 1, -(row + 1)) == p.x_at(end, -(row + 1)) + 1) ++end;
    int s = 0, tt = 0, r = 0;
    for (int k = t; k <= end; ++k) {
      const Step a = paths[k][k - row - 1], b = paths[k][k - row];
      if (a == Step::V && b == Step::V) ++r;
      else if (a == Step::V) ++s;
      else if (b == Step::V) ++tt;
    }
    // VV^r VD^tt DV^s DD^rest
    for (int k = t; k <= end; ++k) {
      const int pos = k - t;
      Step a = Step::D, b = Step::D;
      if (pos < r) a = b = Step::V;
      else if (pos < r + tt) a = Step::V;
      else if (pos < r + tt + s) b = Step::V;
      paths[k][k - row - 1] = a;
      paths[k][k - row] = b;
    }
    t = end + 1;
  }
  return Nilp(std::move(paths));
}

Nilp involution_h(const Nilp& p) {
  const int n = p.n();
  std::vector<Path> paths = p.paths();
  int t = 1;
  while (t < n) {
    int end = t;
    while (end + 1 < n && p.x_at(end + 1, -1) == p.x_at(end, -1) + 1) ++end;
    if ((p.x_at(t, -1) - t - 1) % 2 == 0) {
      int r = 0;
      for (int k = t; k <= end; ++k) r += paths[k][k - 1] == Step::V;
      const int s = end - t + 1 - r;
      for (int k = t; k <= end; ++k) paths[k][k - 1] = (k - t) < s ? Step::V : Step::D;
    }
    t = end + 1;
  }
  return Nilp(std::move(paths));
}

}  // namespace asmtss::nilp
