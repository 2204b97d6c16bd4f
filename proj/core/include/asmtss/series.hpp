#pragma once

#include "asmtss/multipoly.hpp"
#include "asmtss/ring.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmtss {

inline constexpr std::size_t kMaxSeriesVars = 12;

/// Thrown when two series with different variables or windows are combined.
class WindowMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a geometric factor 1/(1-g) is declared with a g that does not
/// vanish at the origin of the integration variables.
class ContourError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent range kept for one variable. Unbounded windows are used for
/// coefficient variables (x, y, ...) that are never truncated.
struct Window {
  int lo = kUnboundedLo;
  int hi = kUnboundedHi;

  static constexpr int kUnboundedLo = -30000;
  static constexpr int kUnboundedHi = 30000;

  static Window unbounded() { return {}; }
  static Window range(int lo, int hi) { return {lo, hi}; }
  /// True when terms above some exponent are discarded.
  bool bounded() const { return hi != kUnboundedHi; }
  bool contains(int e) const { return lo <= e && e <= hi; }
  friend bool operator==(const Window&, const Window&) = default;
};

struct SeriesLayout {
  std::vector<std::string> vars;
  std::vector<Window> windows;

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }
  friend bool operator==(const SeriesLayout&, const SeriesLayout&) = default;
};

/// Sparse multivariate Laurent series truncated to a box of exponents.
///
/// Terms outside the layout's windows are discarded on every operation. The
/// truncation is exact for products as long as the factors being multiplied
/// in have no negative exponents in bounded variables, which is how the
/// residue engine uses it.
template <Ring R>
class TruncatedSeries {
 public:
  using Key = std::array<std::int16_t, kMaxSeriesVars>;
  using Terms = std::map<Key, R>;

  TruncatedSeries() = default;
  explicit TruncatedSeries(SeriesLayout layout) : layout_(std::move(layout)) {
    if (layout_.vars.size() != layout_.windows.size())
      throw std::invalid_argument("TruncatedSeries: vars/windows size mismatch");
    if (layout_.vars.size() > kMaxSeriesVars) throw std::invalid_argument("TruncatedSeries: too many variables");
  }

  static TruncatedSeries constant(const SeriesLayout& layout, R c) {
    TruncatedSeries s(layout);
    s.add(Key{}, std::move(c));
    return s;
  }

  static TruncatedSeries monomial(const SeriesLayout& layout, const std::vector<int>& exps, R c) {
    TruncatedSeries s(layout);
    if (exps.size() != layout.vars.size()) throw std::invalid_argument("TruncatedSeries::monomial: arity");
    Key k{};
    for (std::size_t i = 0; i < exps.size(); ++i) k[i] = static_cast<std::int16_t>(exps[i]);
    s.add(k, std::move(c));
    return s;
  }

  /// Embeds a polynomial whose variables are a subset of the layout's.
  static TruncatedSeries from_poly(const SeriesLayout& layout, const MultiPoly<R>& p) {
    TruncatedSeries s(layout);
    std::vector<int> where(p.vars().size());
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      where[i] = layout.index_of(p.vars()[i]);
      if (where[i] < 0) throw WindowMismatch("TruncatedSeries::from_poly: unknown variable '" + p.vars()[i] + "'");
    }
    for (const auto& [e, c] : p.terms()) {
      Key k{};
      for (std::size_t i = 0; i < e.size(); ++i) k[where[i]] = static_cast<std::int16_t>(e[i]);
      s.add(k, c);
    }
    return s;
  }

  const SeriesLayout& layout() const { return layout_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  R coefficient(const std::vector<int>& exps) const {
    Key k{};
    for (std::size_t i = 0; i < exps.size(); ++i) k[i] = static_cast<std::int16_t>(exps[i]);
    auto it = terms_.find(k);
    return it == terms_.end() ? R(0) : it->second;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_layout(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_layout(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_layout(b);
    TruncatedSeries out(a.layout_);
    const std::size_t nv = a.layout_.vars.size();
    Key k{};
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        bool inside = true;
        for (std::size_t i = 0; i < nv; ++i) {
          const int e = ka[i] + kb[i];
          if (!a.layout_.windows[i].contains(e)) {
            inside = false;
            break;
          }
          k[i] = static_cast<std::int16_t>(e);
        }
        if (inside) out.add(k, ca * cb);
      }
    }
    return out;
  }

  /// Product with a polynomial over a subset of the layout's variables. The
  /// polynomial itself is never truncated, only the product.
  TruncatedSeries times(const MultiPoly<R>& p) const {
    const std::size_t nv = layout_.vars.size();
    std::vector<int> where(p.vars().size());
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      where[i] = layout_.index_of(p.vars()[i]);
      if (where[i] < 0) throw WindowMismatch("TruncatedSeries::times: unknown variable '" + p.vars()[i] + "'");
    }
    std::vector<std::pair<std::array<int, kMaxSeriesVars>, R>> factor;
    for (const auto& [e, c] : p.terms()) {
      std::array<int, kMaxSeriesVars> k{};
      for (std::size_t i = 0; i < e.size(); ++i) k[where[i]] = e[i];
      factor.emplace_back(k, c);
    }
    TruncatedSeries out(layout_);
    Key k{};
    for (const auto& [ka, ca] : terms_) {
      for (const auto& [kb, cb] : factor) {
        bool inside = true;
        for (std::size_t i = 0; i < nv; ++i) {
          const int e = ka[i] + kb[i];
          if (!layout_.windows[i].contains(e)) {
            inside = false;
            break;
          }
          k[i] = static_cast<std::int16_t>(e);
        }
        if (inside) out.add(k, ca * cb);
      }
    }
    return out;
  }

  TruncatedSeries scaled(const R& c) const {
    TruncatedSeries out(layout_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.add(k, v * c);
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.layout_ == b.layout_ && a.terms_ == b.terms_;
  }

  /// Coefficient of v^{-1}: a series over the remaining variables.
  TruncatedSeries residue_at_zero(const std::string& v) const {
    return slice(v, -1);
  }

  /// Coefficient of v^k as a series over the remaining variables.
  TruncatedSeries slice(const std::string& v, int k) const {
    const int idx = layout_.index_of(v);
    if (idx < 0) throw WindowMismatch("TruncatedSeries: unknown variable '" + v + "'");
    if (!layout_.windows[idx].contains(k))
      throw WindowMismatch("TruncatedSeries: window of '" + v + "' excludes exponent " + std::to_string(k));
    SeriesLayout rest = layout_;
    rest.vars.erase(rest.vars.begin() + idx);
    rest.windows.erase(rest.windows.begin() + idx);
    TruncatedSeries out(rest);
    for (const auto& [key, c] : terms_) {
      if (key[idx] != k) continue;
      Key r{};
      for (std::size_t i = 0, j = 0; i < layout_.vars.size(); ++i)
        if (static_cast<int>(i) != idx) r[j++] = key[i];
      out.terms_.emplace(r, c);
    }
    return out;
  }

  /// Converts to a polynomial; every exponent must be nonnegative.
  MultiPoly<R> to_poly() const {
    MultiPoly<R> p;
    for (const auto& [k, c] : terms_) {
      std::vector<int> e(layout_.vars.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (k[i] < 0) throw std::domain_error("TruncatedSeries::to_poly: negative exponent");
        e[i] = k[i];
      }
      p += MultiPoly<R>::monomial(layout_.vars, e, c);
    }
    return p;
  }

  std::string to_string() const { return to_laurent_string(); }

 private:
  void check_layout(const TruncatedSeries& o) const {
    if (!(layout_ == o.layout_)) throw WindowMismatch("TruncatedSeries: variable/window mismatch");
  }

  void add(const Key& k, R c) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < layout_.vars.size(); ++i)
      if (!layout_.windows[i].contains(k[i])) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::string to_laurent_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::ostringstream os;
      os << "(" << c << ")";
      for (std::size_t i = 0; i < layout_.vars.size(); ++i)
        if (k[i] != 0) os << "*" << layout_.vars[i] << "^" << k[i];
      s += os.str();
    }
    return s;
  }

  SeriesLayout layout_;
  Terms terms_;
};

/// numerator * sum_{k>=0} g^k, truncated to the numerator's windows.
///
/// g must have strictly positive valuation in the bounded (integration)
/// variables and no negative exponents there; otherwise the pole of
/// 1/(1-g) would not sit outside the contour around the origin.
template <Ring R>
TruncatedSeries<R> geometric_expand(const TruncatedSeries<R>& numerator, const TruncatedSeries<R>& g) {
  const auto& layout = numerator.layout();
  if (!(layout == g.layout())) throw WindowMismatch("geometric_expand: variable/window mismatch");
  bool any_bounded = false;
  for (const auto& w : layout.windows) any_bounded = any_bounded || w.bounded();
  if (!any_bounded && !g.is_zero()) throw ContourError("geometric_expand: no bounded integration variable");
  for (const auto& [k, c] : g.terms()) {
    int valuation = 0;
    for (std::size_t i = 0; i < layout.vars.size(); ++i) {
      if (!layout.windows[i].bounded()) continue;
      if (k[i] < 0) throw ContourError("geometric_expand: negative exponent in g for '" + layout.vars[i] + "'");
      valuation += k[i];
    }
    if (valuation == 0) throw ContourError("geometric_expand: g has a term of zero valuation (pole inside contour)");
  }
  TruncatedSeries<R> result = numerator;
  TruncatedSeries<R> term = numerator;
  while (!term.is_zero()) {
    term = term * g;
    result += term;
  }
  return result;
}

/// numerator * sum_{k>=0} g^k with g given as a polynomial, so that g keeps
/// the exponents the numerator's windows would cut off.
template <Ring R>
TruncatedSeries<R> geometric_expand(const TruncatedSeries<R>& numerator, const MultiPoly<R>& g) {
  const auto& layout = numerator.layout();
  bool any_bounded = false;
  for (const auto& w : layout.windows) any_bounded = any_bounded || w.bounded();
  if (!any_bounded && !g.is_zero()) throw ContourError("geometric_expand: no bounded integration variable");
  for (const auto& [e, c] : g.terms()) {
    int valuation = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const int idx = layout.index_of(g.vars()[i]);
      if (idx < 0) throw WindowMismatch("geometric_expand: unknown variable '" + g.vars()[i] + "'");
      if (!layout.windows[idx].bounded()) continue;
      if (e[i] < 0) throw ContourError("geometric_expand: negative exponent in g for '" + g.vars()[i] + "'");
      valuation += e[i];
    }
    if (valuation == 0) throw ContourError("geometric_expand: g has a term of zero valuation (pole inside contour)");
  }
  TruncatedSeries<R> result = numerator;
  TruncatedSeries<R> term = numerator;
  while (!term.is_zero()) {
    term = term.times(g);
    result += term;
  }
  return result;
}

template <Ring R>
TruncatedSeries<R> geometric_expand(const MultiPoly<R>& numerator, const MultiPoly<R>& g, const SeriesLayout& layout) {
  return geometric_expand(TruncatedSeries<R>::from_poly(layout, numerator), g);
}

}  // namespace asmtss
