#pragma once

#include <map>
#include <string>

#include "maghom/report.hpp"
#include "maghom/space.hpp"

namespace maghom {

/// Finitely many terms c * q^grade with grade <= lmax; zero terms are not stored.
class GradedSeries {
 public:
  GradedSeries() = default;
  explicit GradedSeries(Rational lmax) : lmax_(std::move(lmax)) {}

  const Rational& lmax() const { return lmax_; }
  const std::map<Rational, Rational>& terms() const { return terms_; }
  Rational coefficient(const Rational& grade) const;
  /// Adds c * q^grade; terms beyond lmax are dropped.
  void add(const Rational& grade, const Rational& c);

  GradedSeries operator+(const GradedSeries& other) const;
  /// Truncated product.
  GradedSeries operator*(const GradedSeries& other) const;
  GradedSeries operator-() const;

  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

  /// `2 - 2q + 2q^2`, `1 - 3q^(3/2)`, or `0`.
  std::string to_string() const;
  /// `[["0","2"],["1","-2"],...]`, sorted by grade.
  std::string to_json() const;

 private:
  Rational lmax_;
  std::map<Rational, Rational> terms_;
};

/// sum_k (-1)^k rank MH^k_l(X) at each grade l <= lmax. Throws ZeroDistance.
GradedSeries euler_series(const QuasiMetricSpace& X, const Rational& lmax);

/// Sum of the entries of Z^{-1}, Z_ab = q^{d(a,b)}, by Neumann expansion of
/// Z = I + N. Infinite distances contribute nothing. Throws ZeroDistance.
GradedSeries inversion_series(const QuasiMetricSpace& X, const Rational& lmax);

/// Both series agree coefficientwise up to lmax.
Report categorification_check(const QuasiMetricSpace& X, const Rational& lmax);

}  // namespace maghom
