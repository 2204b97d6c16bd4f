#pragma once

#include "asmtss/genpoly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace asmtss::asm6v {

/// Alternating sign matrix of size n.
class Asm {
 public:
  Asm() = default;
  /// Throws std::invalid_argument naming the violated condition.
  explicit Asm(const std::vector<std::vector<int>>& rows);

  /// No validation; for enumerators that construct valid matrices only.
  static Asm from_flat_unchecked(int n, std::vector<std::int8_t> entries);

  int n() const { return n_; }
  int operator()(int row, int col) const { return entries_[static_cast<std::size_t>(row) * n_ + col]; }
  std::vector<std::vector<int>> rows() const;
  const std::vector<std::int8_t>& flat() const { return entries_; }

  friend bool operator==(const Asm&, const Asm&) = default;

 private:
  int n_ = 0;
  std::vector<std::int8_t> entries_;
};

/// Empty string when `rows` is an ASM, otherwise a description of the
/// first violated condition.
std::string asm_violation(const std::vector<std::vector<int>>& rows);

/// 1-based columns of the 1 in the first row (i) and in the last row (j).
struct RefinedStat {
  int i = 0;
  int j = 0;
  friend bool operator==(const RefinedStat&, const RefinedStat&) = default;
};

RefinedStat refined_stat(const Asm& a);

/// Visits every ASM of size n once, in lexicographic order of rows
/// (reading -1 < 0 < 1). n = 0 visits one empty matrix.
void for_each_asm(int n, const std::function<void(const Asm&)>& visit);
std::vector<Asm> enumerate_asms(int n);

/// Number of ASMs, by enumeration.
std::uint64_t count_asms(int n, unsigned workers = 1);

/// prod_{j=0}^{n-1} (3j+1)! / (n+j)!
mpz_class asm_count_formula(int n);

/// Sum over ASMs of x^{i-1} y^{j-1} (kTilde) or x^{i-1} y^{n-j} (kReversed).
GenPoly genfun_doubly_refined(int n, Convention convention, unsigned workers = 1);

}  // namespace asmtss::asm6v
