#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace jumpnum {

using Integer = std::int64_t;

// Checked int64 arithmetic; throws ArithmeticOverflow instead of wrapping.
Integer checked_add(Integer a, Integer b);
Integer checked_sub(Integer a, Integer b);
Integer checked_mul(Integer a, Integer b);

/// Floor and ceiling of a / b for b != 0.
Integer floor_div(Integer a, Integer b);
Integer ceil_div(Integer a, Integer b);

/// Nonnegative gcd; gcd(0, 0) == 0.
Integer gcd(Integer a, Integer b);

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Integer value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer num, Integer den);

  Integer num() const noexcept { return num_; }
  Integer den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Integer floor() const;
  Integer ceil() const;

  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  /// Accepts "p", "p/q", with optional leading sign. Throws DomainError.
  static Rational parse(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  friend struct RationalAccess;
  struct Raw {};
  constexpr Rational(Integer num, Integer den, Raw) : num_(num), den_(den) {}

  Integer num_ = 0;
  Integer den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace jumpnum
