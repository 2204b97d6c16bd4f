#include "asmtss/cyclo.hpp"

#include <stdexcept>

namespace asmtss {

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2,  z^2 = z - 1.
  const Rational bd = c1_ * o.c1_;
  Rational n0 = c0_ * o.c0_ - bd;
  Rational n1 = c0_ * o.c1_ + c1_ * o.c0_ + bd;
  c0_ = std::move(n0);
  c1_ = std::move(n1);
  return *this;
}

Cyclo Cyclo::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw std::domain_error("Cyclo: division by zero");
  const Cyclo c = conjugate();
  return {c.c0_ / n, c.c1_ / n};
}

std::string Cyclo::to_string() const {
  if (c1_.is_zero()) return c0_.to_string();
  std::string s;
  if (!c0_.is_zero()) s = c0_.to_string() + (c1_.sign() < 0 ? " - " : " + ");
  else if (c1_.sign() < 0) s = "-";
  const Rational a = c1_.sign() < 0 ? -c1_ : c1_;
  if (a != Rational(1)) s += a.to_string() + "*";
  return s + "zeta";
}

std::ostream& operator<<(std::ostream& os, const Cyclo& c) { return os << c.to_string(); }

}  // namespace asmtss
