#include "asmtss/genpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace asmtss {

const char* to_string(Convention c) {
  switch (c) {
    case Convention::kTilde:
      return "tilde";
    case Convention::kReversed:
      return "reversed";
    case Convention::kPlain:
      return "plain";
  }
  return "?";
}

GenPoly GenPoly::from_poly(const MultiPoly<Rational>& p, const std::string& x, const std::string& y,
                           Convention convention) {
  GenPoly g(convention);
  const int xi = p.var_index(x);
  const int yi = p.var_index(y);
  for (const auto& v : p.vars())
    if (v != x && v != y) throw std::invalid_argument("GenPoly::from_poly: unexpected variable '" + v + "'");
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_integer() || c.sign() < 0)
      throw std::domain_error("GenPoly::from_poly: coefficient " + c.to_string() + " is not a nonnegative integer");
    const mpz_class num = c.numerator();
    if (!num.fits_slong_p()) throw std::overflow_error("GenPoly::from_poly: coefficient too large");
    g.add(xi < 0 ? 0 : e[xi], yi < 0 ? 0 : e[yi], num.get_si());
  }
  return g;
}

void GenPoly::add(int i, int j, std::int64_t count) {
  if (i < 0 || j < 0) throw std::invalid_argument("GenPoly::add: negative exponent");
  if (count == 0) return;
  auto& c = coeffs_[{i, j}];
  c += count;
  if (c == 0) coeffs_.erase({i, j});
}

std::int64_t GenPoly::coefficient(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t GenPoly::total() const {
  std::int64_t s = 0;
  for (const auto& [ij, c] : coeffs_) s += c;
  return s;
}

int GenPoly::degree_x() const {
  int d = -1;
  for (const auto& [ij, c] : coeffs_) d = std::max(d, ij.first);
  return d;
}

int GenPoly::degree_y() const {
  int d = -1;
  for (const auto& [ij, c] : coeffs_) d = std::max(d, ij.second);
  return d;
}

std::vector<std::vector<std::int64_t>> GenPoly::matrix() const {
  const int dx = std::max(degree_x(), 0);
  const int dy = std::max(degree_y(), 0);
  std::vector<std::vector<std::int64_t>> m(dx + 1, std::vector<std::int64_t>(dy + 1, 0));
  for (const auto& [ij, c] : coeffs_) m[ij.first][ij.second] = c;
  return m;
}

MultiPoly<Rational> GenPoly::to_poly(const std::string& x, const std::string& y) const {
  MultiPoly<Rational> p;
  for (const auto& [ij, c] : coeffs_)
    p += MultiPoly<Rational>::monomial({x, y}, {ij.first, ij.second}, Rational(static_cast<long long>(c)));
  return p;
}

std::string GenPoly::to_string(const std::string& x, const std::string& y) const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto [i, j] = it->first;
    const std::int64_t c = it->second;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const std::int64_t a = c < 0 ? -c : c;
    std::string mono;
    if (i > 0) mono += x + (i > 1 ? "^" + std::to_string(i) : "");
    if (j > 0) mono += (mono.empty() ? "" : "*") + y + (j > 1 ? "^" + std::to_string(j) : "");
    if (mono.empty()) s += std::to_string(a);
    else if (a == 1) s += mono;
    else s += std::to_string(a) + "*" + mono;
  }
  return s;
}

}  // namespace asmtss
