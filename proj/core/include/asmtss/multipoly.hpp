#pragma once

#include "asmtss/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace asmtss {

/// Sparse multivariate polynomial over R with named variables.
///
/// The variable list is kept sorted; binary operations on polynomials with
/// different variable lists work on the union. Zero coefficients are never
/// stored, so structural equality is mathematical equality.
template <Ring R>
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, R>;
  using Point = std::map<std::string, R>;

  MultiPoly() = default;
  MultiPoly(int c) : MultiPoly(R(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(R c) {                        // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
  }

  static MultiPoly variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, R(1));
    return p;
  }

  /// c * prod vars[i]^exps[i]; vars need not be sorted.
  static MultiPoly monomial(const std::vector<std::string>& vars, const std::vector<int>& exps, R c) {
    if (vars.size() != exps.size()) throw std::invalid_argument("MultiPoly::monomial: size mismatch");
    MultiPoly p(std::move(c));
    for (std::size_t i = 0; i < vars.size(); ++i) p = p * power(variable(vars[i]), exps[i]);
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                              [](int e) { return e == 0; }));
  }
  R constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? R(0) : it->second;
  }

  /// Index of a variable, or -1.
  int var_index(const std::string& name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    return (it != vars_.end() && *it == name) ? static_cast<int>(it - vars_.begin()) : -1;
  }

  int degree_in(const std::string& name) const {
    const int i = var_index(name);
    if (i < 0) return is_zero() ? -1 : 0;
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }

  /// Coefficient of name^k, as a polynomial in the other variables.
  MultiPoly coefficient_of(const std::string& name, int k) const {
    const int i = var_index(name);
    if (i < 0) return k == 0 ? *this : MultiPoly();
    MultiPoly out;
    out.vars_ = vars_;
    out.vars_.erase(out.vars_.begin() + i);
    for (const auto& [e, c] : terms_) {
      if (e[i] != k) continue;
      Exponents f = e;
      f.erase(f.begin() + i);
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  /// Exact value at a point; every variable must be assigned.
  template <class P = Point>
  R evaluate(const P& point) const {
    std::vector<R> values;
    values.reserve(vars_.size());
    for (const auto& v : vars_) {
      auto it = point.find(v);
      if (it == point.end()) throw std::invalid_argument("MultiPoly::evaluate: missing variable '" + v + "'");
      values.push_back(R(it->second));
    }
    std::vector<std::vector<R>> powers(vars_.size());
    R total(0);
    for (const auto& [e, c] : terms_) {
      R t = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(R(1));
        while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * values[i]);
        t = t * cache[e[i]];
      }
      total = total + t;
    }
    return total;
  }

  /// Re-expresses this polynomial over a superset of its variables.
  MultiPoly over(const std::vector<std::string>& superset) const {
    std::vector<std::string> target = superset;
    std::sort(target.begin(), target.end());
    target.erase(std::unique(target.begin(), target.end()), target.end());
    std::vector<int> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::lower_bound(target.begin(), target.end(), vars_[i]);
      if (it == target.end() || *it != vars_[i])
        throw std::invalid_argument("MultiPoly::over: variable '" + vars_[i] + "' not in target set");
      where[i] = static_cast<int>(it - target.begin());
    }
    MultiPoly out;
    out.vars_ = target;
    for (const auto& [e, c] : terms_) {
      Exponents f(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return accumulate(o, false); }
  MultiPoly& operator-=(const MultiPoly& o) { return accumulate(o, true); }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out = a;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    const auto vars = union_vars(a.vars_, b.vars_);
    const MultiPoly x = a.vars_ == vars ? a : a.over(vars);
    const MultiPoly y = b.vars_ == vars ? b : b.over(vars);
    MultiPoly out;
    out.vars_ = vars;
    Exponents e(vars.size());
    for (const auto& [ea, ca] : x.terms_) {
      for (const auto& [eb, cb] : y.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    return (a - b).is_zero();
  }

  /// Exact quotient a / d; throws std::domain_error when d does not divide a.
  /// Requires a field of coefficients. Uses lexicographic leading terms.
  MultiPoly exact_divide(const MultiPoly& d) const
    requires is_field_v<R>
  {
    if (d.is_zero()) throw std::domain_error("MultiPoly::exact_divide: division by zero");
    const auto vars = union_vars(vars_, d.vars_);
    MultiPoly rem = over(vars);
    const MultiPoly div = d.over(vars);
    const auto& [lead_e, lead_c] = *div.terms_.rbegin();
    MultiPoly quot;
    quot.vars_ = vars;
    while (!rem.is_zero()) {
      const auto& [re, rc] = *rem.terms_.rbegin();
      Exponents qe(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) {
        qe[i] = re[i] - lead_e[i];
        if (qe[i] < 0) throw std::domain_error("MultiPoly::exact_divide: not divisible");
      }
      MultiPoly t;
      t.vars_ = vars;
      t.terms_.emplace(qe, rc / lead_c);
      quot += t;
      rem -= t * div;
    }
    return quot.trimmed();
  }

  /// Drops variables that no longer occur.
  MultiPoly trimmed() const {
    std::vector<std::string> used;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[i] != 0; }))
        used.push_back(vars_[i]);
    }
    if (used.size() == vars_.size()) return *this;
    MultiPoly out;
    out.vars_ = used;
    for (const auto& [e, c] : terms_) {
      Exponents f;
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (std::binary_search(used.begin(), used.end(), vars_[i])) f.push_back(e[i]);
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::ostringstream cs;
      cs << c;
      std::string coeff = cs.str();
      bool negative = !coeff.empty() && coeff[0] == '-' && coeff.find_first_of("+ ", 1) == std::string::npos;
      if (negative) coeff = coeff.substr(1);
      const bool compound = coeff.find_first_of("+ ") != std::string::npos;
      if (compound) coeff = "(" + coeff + ")";
      if (!first) os << (negative ? " - " : " + ");
      else if (negative) os << "-";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) os << coeff;
      else if (coeff == "1") os << mono;
      else os << coeff << "*" << mono;
    }
    return os.str();
  }

 private:
  static std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a == b) return a;
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  void add_term(const Exponents& e, R c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MultiPoly& accumulate(const MultiPoly& o, bool negate) {
    const auto vars = union_vars(vars_, o.vars_);
    if (vars != vars_) *this = over(vars);
    const MultiPoly y = o.vars_ == vars ? o : o.over(vars);
    for (const auto& [e, c] : y.terms_) add_term(e, negate ? R(-c) : c);
    return *this;
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

template <Ring R>
std::ostream& operator<<(std::ostream& os, const MultiPoly<R>& p) {
  return os << p.to_string();
}

}  // namespace asmtss
