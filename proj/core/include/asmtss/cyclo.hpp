#pragma once

#include "asmtss/rational.hpp"
#include "asmtss/ring.hpp"

#include <ostream>
#include <string>

namespace asmtss {

/// Element c0 + c1*zeta of Q(zeta), zeta = exp(i*pi/3), reduced with
/// zeta^2 = zeta - 1. The cubic root of unity q = zeta^2 lives here
/// together with q^{1/2} = zeta and q^{-1/2} = 1 - zeta.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(int v) : c0_(v) {}                  // NOLINT(google-explicit-constructor)
  Cyclo(Rational v) : c0_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclo(Rational c0, Rational c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

  static Cyclo zeta() { return {Rational(0), Rational(1)}; }
  /// q = e^{2 pi i / 3} = zeta^2 = zeta - 1.
  static Cyclo q() { return {Rational(-1), Rational(1)}; }
  static Cyclo q_half() { return zeta(); }
  static Cyclo q_minus_half() { return {Rational(1), Rational(-1)}; }

  const Rational& c0() const { return c0_; }
  const Rational& c1() const { return c1_; }

  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
  bool is_rational() const { return c1_.is_zero(); }

  /// Field norm N(a + b zeta) = a^2 + ab + b^2.
  Rational norm() const { return c0_ * c0_ + c0_ * c1_ + c1_ * c1_; }
  /// Galois conjugate zeta -> zeta^5 = 1 - zeta.
  Cyclo conjugate() const { return {c0_ + c1_, -c1_}; }
  Cyclo inverse() const;

  Cyclo& operator+=(const Cyclo& o) {
    c0_ += o.c0_;
    c1_ += o.c1_;
    return *this;
  }
  Cyclo& operator-=(const Cyclo& o) {
    c0_ -= o.c0_;
    c1_ -= o.c1_;
    return *this;
  }
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend Cyclo operator-(const Cyclo& a) { return {-a.c0_, -a.c1_}; }
  friend bool operator==(const Cyclo& a, const Cyclo& b) = default;

  std::string to_string() const;

 private:
  Rational c0_;
  Rational c1_;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& c);

template <>
inline constexpr bool is_field_v<Cyclo> = true;

}  // namespace asmtss
