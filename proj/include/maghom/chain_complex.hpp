#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "maghom/matrix.hpp"
#include "maghom/space.hpp"

namespace maghom {

using Tuple = std::vector<std::size_t>;

/// Tuple (x0,...,xk) with consecutive entries distinct, and its length.
struct Simplex {
  Tuple points;
  ExtendedRational length;

  std::size_t degree() const { return points.empty() ? 0 : points.size() - 1; }
  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// d(x0,x1) + ... + d(x_{k-1},x_k).
ExtendedRational tuple_length(const QuasiMetricSpace& X, const Tuple& t);
bool is_simplex(const Tuple& t);

/// Lexicographically ordered simplices of one bidegree (k, grade).
class SimplexBasis {
 public:
  SimplexBasis() = default;
  SimplexBasis(std::size_t k, Rational grade, std::vector<Tuple> simplices);

  std::size_t degree() const { return k_; }
  const Rational& grade() const { return grade_; }
  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  const Tuple& operator[](std::size_t i) const { return simplices_[i]; }
  const std::vector<Tuple>& simplices() const { return simplices_; }
  std::optional<std::size_t> index_of(const Tuple& t) const;

 private:
  std::size_t k_ = 0;
  Rational grade_;
  std::vector<Tuple> simplices_;
};

/// All simplices of degree k and length exactly `grade`, in lexicographic order.
std::vector<Simplex> enumerate_simplices(const QuasiMetricSpace& X, std::size_t k,
                                         const Rational& grade);
SimplexBasis simplex_basis(const QuasiMetricSpace& X, std::size_t k, const Rational& grade);

/// Matrix of the differential -d1 + d2 - ... from `source` (degree k) to
/// `target` (degree k-1, same grade). Outer faces never appear.
SparseMatrix boundary_matrix(const QuasiMetricSpace& X, const SimplexBasis& source,
                             const SimplexBasis& target);
SparseMatrix boundary_matrix(const QuasiMetricSpace& X, std::size_t k, const Rational& grade);
/// Transpose of boundary_matrix(X, k+1, grade): cochains of degree k to degree k+1.
SparseMatrix coboundary_matrix(const QuasiMetricSpace& X, std::size_t k, const Rational& grade);

/// f_# on MC_{k,grade}: each simplex goes to its image if the image has the
/// same length and is a simplex, otherwise to 0. Throws NotNonIncreasing.
SparseMatrix induced_chain_map(const QuasiMetricSpace& X, const QuasiMetricSpace& Y,
                               const std::vector<std::size_t>& f, std::size_t k,
                               const Rational& grade);

/// Every finite sum of positive pairwise distances up to `max_grade`, with 0.
/// Sorted, duplicate-free. Throws ZeroDistance on pseudo spaces.
std::vector<Rational> realizable_grades(const QuasiMetricSpace& X, const Rational& max_grade);

/// Chain complex MC_{*,grade} truncated at degree kmax+1, so that homology
/// and cohomology are available in every degree up to kmax.
struct GradedComplexBlock {
  Rational grade;
  std::size_t kmax = 0;
  /// bases[k] for k = 0..kmax+1.
  std::vector<SimplexBasis> bases;
  /// boundaries[k] : C_k -> C_{k-1} for k = 0..kmax+1 (boundaries[0] has no rows).
  std::vector<SparseMatrix> boundaries;
};

GradedComplexBlock build_block(const QuasiMetricSpace& X, const Rational& grade,
                               std::size_t kmax);

}  // namespace maghom
