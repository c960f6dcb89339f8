#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "maghom/integer.hpp"

namespace maghom {

/// A nonnegative exact rational or the symbol INF.
///
/// INF absorbs addition and compares above every finite value. Negative
/// values are rejected at construction; distances and grades never need them.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(long value);  // NOLINT(google-explicit-constructor)
  ExtendedRational(const Rational& value);  // NOLINT(google-explicit-constructor)
  ExtendedRational(const Integer& num, const Integer& den);

  static ExtendedRational infinity();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && sgn(value_) == 0; }

  /// The finite value. Must not be called on INF.
  const Rational& value() const;

  ExtendedRational operator+(const ExtendedRational& other) const;
  ExtendedRational& operator+=(const ExtendedRational& other);

  bool operator==(const ExtendedRational& other) const;
  std::strong_ordering operator<=>(const ExtendedRational& other) const;

  /// `inf`, an integer, or `p/q` in lowest terms.
  std::string to_string() const;
  /// Accepts `inf`, integers, `p/q`; surrounding whitespace is ignored.
  static ExtendedRational parse(std::string_view text);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

/// Canonical text of an exact rational (`3`, `3/2`).
std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace maghom
