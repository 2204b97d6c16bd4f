#include "asmtss/asm.hpp"

#include "asmtss/parallel.hpp"

#include <stdexcept>

namespace asmtss::asm6v {

namespace {

// Row-by-row search. col[c] is the partial column sum (0 or 1) over the rows
// placed so far; a row may put -1 only under a column holding 1 and +1 only
// under a column holding 0, alternating along the row.
class Search {
 public:
  Search(int n, std::function<void(const std::vector<std::int8_t>&)> visit)
      : n_(n), visit_(std::move(visit)), entries_(static_cast<std::size_t>(n) * n, 0), col_(n, 0) {}

  void run_from_row(int r) { place_row(r, 0, 0); }

  void fix_first_row(int c) {
    entries_[c] = 1;
    col_[c] = 1;
  }

 private:
  void place_row(int r, int c, int row_sum) {
    if (r == n_ - 1) {
      // the last row is forced: a single column still sums to 0
      const std::size_t base = static_cast<std::size_t>(r) * n_;
      int open = 0;
      while (col_[open] != 0) ++open;
      entries_[base + open] = 1;
      visit_(entries_);
      entries_[base + open] = 0;
      return;
    }
    if (c == n_) {
      if (row_sum == 1) place_row(r + 1, 0, 0);
      return;
    }
    std::int8_t& e = entries_[static_cast<std::size_t>(r) * n_ + c];
    if (col_[c] == 1 && row_sum == 1) {
      e = -1;
      col_[c] = 0;
      place_row(r, c + 1, 0);
      col_[c] = 1;
    }
    e = 0;
    place_row(r, c + 1, row_sum);
    if (col_[c] == 0 && row_sum == 0) {
      e = 1;
      col_[c] = 1;
      place_row(r, c + 1, 1);
      col_[c] = 0;
    }
    e = 0;
  }

  int n_;
  std::function<void(const std::vector<std::int8_t>&)> visit_;
  std::vector<std::int8_t> entries_;
  std::vector<int> col_;
};

void for_each_flat(int n, const std::function<void(const std::vector<std::int8_t>&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_asm: negative size");
  if (n == 0) {
    visit({});
    return;
  }
  Search(n, visit).run_from_row(0);
}

// Subtree with the first-row 1 in column c.
void for_each_flat_first(int n, int c, const std::function<void(const std::vector<std::int8_t>&)>& visit) {
  Search s(n, visit);
  s.fix_first_row(c);
  s.run_from_row(1);
}

}  // namespace

Asm::Asm(const std::vector<std::vector<int>>& rows) {
  const std::string why = asm_violation(rows);
  if (!why.empty()) throw std::invalid_argument("Asm: " + why);
  n_ = static_cast<int>(rows.size());
  for (const auto& r : rows)
    for (int v : r) entries_.push_back(static_cast<std::int8_t>(v));
}

Asm Asm::from_flat_unchecked(int n, std::vector<std::int8_t> entries) {
  Asm a;
  a.n_ = n;
  a.entries_ = std::move(entries);
  return a;
}

std::vector<std::vector<int>> Asm::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

std::string asm_violation(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t r = 0; r < n; ++r)
    if (rows[r].size() != n) return "row " + std::to_string(r + 1) + " has wrong length";
  auto line_ok = [&](auto at, const std::string& what) -> std::string {
    int partial = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const int v = at(k);
      if (v < -1 || v > 1) return what + " has entry outside {-1,0,1}";
      partial += v;
      if (partial < 0 || partial > 1) return what + " does not alternate starting with +1";
    }
    if (partial != 1) return what + " does not sum to 1";
    return "";
  };
  for (std::size_t r = 0; r < n; ++r) {
    auto why = line_ok([&](std::size_t k) { return rows[r][k]; }, "row " + std::to_string(r + 1));
    if (!why.empty()) return why;
  }
  for (std::size_t c = 0; c < n; ++c) {
    auto why = line_ok([&](std::size_t k) { return rows[k][c]; }, "column " + std::to_string(c + 1));
    if (!why.empty()) return why;
  }
  return "";
}

RefinedStat refined_stat(const Asm& a) {
  RefinedStat s;
  for (int c = 0; c < a.n(); ++c) {
    if (a(0, c) == 1) s.i = c + 1;
    if (a(a.n() - 1, c) == 1) s.j = c + 1;
  }
  return s;
}

void for_each_asm(int n, const std::function<void(const Asm&)>& visit) {
  for_each_flat(n, [&](const std::vector<std::int8_t>& e) { visit(Asm::from_flat_unchecked(n, e)); });
}

std::vector<Asm> enumerate_asms(int n) {
  std::vector<Asm> out;
  for_each_asm(n, [&](const Asm& a) { out.push_back(a); });
  return out;
}

std::uint64_t count_asms(int n, unsigned workers) {
  if (n <= 1) return 1;
  const auto parts = parallel_map<std::uint64_t>(n, workers, [n](std::size_t c) {
    std::uint64_t k = 0;
    for_each_flat_first(n, static_cast<int>(c), [&](const std::vector<std::int8_t>&) { ++k; });
    return k;
  });
  std::uint64_t total = 0;
  for (auto k : parts) total += k;
  return total;
}

mpz_class asm_count_formula(int n) {
  if (n < 0) throw std::invalid_argument("asm_count_formula: negative size");
  mpz_class num = 1, den = 1, f;
  for (int j = 0; j < n; ++j) {
    mpz_fac_ui(f.get_mpz_t(), 3 * j + 1);
    num *= f;
    mpz_fac_ui(f.get_mpz_t(), n + j);
    den *= f;
  }
  return num / den;
}

GenPoly genfun_doubly_refined(int n, Convention convention, unsigned workers) {
  if (convention == Convention::kPlain) throw std::invalid_argument("genfun_doubly_refined: ASM convention required");
  GenPoly g(convention);
  if (n <= 1) {
    g.add(0, 0);
    return g;
  }
  // first-row 1 in column c gives x^c; only the last-row column varies below
  const auto parts = parallel_map<std::vector<std::int64_t>>(n, workers, [n](std::size_t c) {
    std::vector<std::int64_t> last(n, 0);
    const std::size_t base = static_cast<std::size_t>(n - 1) * n;
    for_each_flat_first(n, static_cast<int>(c), [&](const std::vector<std::int8_t>& e) {
      for (int k = 0; k < n; ++k)
        if (e[base + k] == 1) {
          ++last[k];
          break;
        }
    });
    return last;
  });
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < n; ++k)
      g.add(c, convention == Convention::kTilde ? k : n - 1 - k, parts[c][k]);
  return g;
}

}  // namespace asmtss::asm6v
