#pragma once

#include <concepts>
#include <stdexcept>
#include <type_traits>

namespace asmtss {

/// Commutative ring with unit, constructible from small integers.
template <class R>
concept Ring = std::copy_constructible<R> && std::constructible_from<R, int> &&
               requires(const R& a, const R& b) {
                 { a + b } -> std::convertible_to<R>;
                 { a - b } -> std::convertible_to<R>;
                 { a * b } -> std::convertible_to<R>;
                 { -a } -> std::convertible_to<R>;
                 { a == b } -> std::convertible_to<bool>;
                 { a.is_zero() } -> std::convertible_to<bool>;
               };

/// Specialize to true for rings with exact division by every nonzero element.
template <class R>
inline constexpr bool is_field_v = false;

template <class R>
concept Field = Ring<R> && is_field_v<R> && requires(const R& a, const R& b) {
  { a / b } -> std::convertible_to<R>;
};

template <Ring R>
R power(R base, long long exponent) {
  if (exponent < 0) {
    if constexpr (is_field_v<R>) {
      base = R(1) / base;
      exponent = -exponent;
    } else {
      throw std::domain_error("power: negative exponent outside a field");
    }
  }
  R result(1);
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace asmtss
