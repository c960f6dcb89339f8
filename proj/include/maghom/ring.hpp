#pragma once

#include <compare>
#include <map>
#include <memory>

#include "maghom/homology.hpp"

namespace maghom {

/// (cohomological degree k, length grade).
struct Bidegree {
  std::size_t k = 0;
  Rational grade;

  friend bool operator==(const Bidegree& a, const Bidegree& b) {
    return a.k == b.k && a.grade == b.grade;
  }
  friend bool operator<(const Bidegree& a, const Bidegree& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.grade < b.grade;
  }
  std::string to_string() const;
};

Bidegree operator+(const Bidegree& a, const Bidegree& b);

/// Integer cochain on MC_{k,grade}, in the dual of the lexicographic basis.
struct Cochain {
  std::shared_ptr<const SimplexBasis> basis;
  IntVector coords;

  Cochain() = default;
  Cochain(std::shared_ptr<const SimplexBasis> b, IntVector c);
  explicit Cochain(std::shared_ptr<const SimplexBasis> b);

  Bidegree bidegree() const { return {basis->degree(), basis->grade()}; }
  /// Value on a tuple; zero for tuples outside the basis.
  Integer evaluate(const Tuple& t) const;
};

std::shared_ptr<const SimplexBasis> shared_basis(const QuasiMetricSpace& X, std::size_t k,
                                                 const Rational& grade);

/// u(x0) = 1 for every point.
Cochain unit_cochain(const QuasiMetricSpace& X);
/// The dual basis element (x0,...,xk)*.
Cochain dual_simplex(std::shared_ptr<const SimplexBasis> basis, const Tuple& t);

/// (phi . psi)(x0..x_{j+k}) = phi(x0..xj) psi(xj..x_{j+k}), on the given target basis.
Cochain cup_cochain(const Cochain& phi, const Cochain& psi,
                    std::shared_ptr<const SimplexBasis> target);
Cochain cup_cochain(const QuasiMetricSpace& X, const Cochain& phi, const Cochain& psi);

/// The coboundary of a cochain, in degree k+1 of the same grade.
Cochain coboundary(const QuasiMetricSpace& X, const Cochain& phi);

/// Element of MH^k_grade in the coordinates of that block's CohomologyBasis.
struct RingClass {
  Bidegree bidegree;
  IntVector coords;

  bool is_zero() const { return maghom::is_zero(coords); }
  friend bool operator==(const RingClass&, const RingClass&) = default;
};

/// A cycle of MC_{k,grade}, used as a homology class for pairings.
struct HomologyClass {
  Bidegree bidegree;
  IntVector chain;
};

/// One computed bidegree of the cohomology ring.
struct CohomologyBlock {
  Bidegree bidegree;
  std::shared_ptr<const SimplexBasis> simplices;
  std::shared_ptr<const SimplexBasis> faces;  // degree k-1, same grade
  SparseMatrix boundary;                      // C_k -> C_{k-1}
  CohomologyBasis basis;

  AbelianGroup group() const { return basis.group(); }
};

/// The magnitude cohomology ring of a finite space, filled in lazily one
/// bidegree at a time.
class MagnitudeCohomology {
 public:
  explicit MagnitudeCohomology(QuasiMetricSpace X);

  const QuasiMetricSpace& space() const { return X_; }

  /// Computes (or returns the cached) block at (k, grade).
  const CohomologyBlock& compute(std::size_t k, const Rational& grade);
  const CohomologyBlock& compute(const Bidegree& b) { return compute(b.k, b.grade); }
  bool has_block(const Bidegree& b) const { return blocks_.count(b) != 0; }
  /// Throws MissingBlock when (k, grade) has not been computed.
  const CohomologyBlock& block(const Bidegree& b) const;
  const std::map<Bidegree, CohomologyBlock>& blocks() const { return blocks_; }

  RingClass class_of(const Cochain& cocycle) const;
  Cochain representative(const RingClass& c) const;
  /// i-th basis class of a computed block.
  RingClass basis_class(const Bidegree& b, std::size_t i) const;
  RingClass zero_class(const Bidegree& b) const;
  /// [u]; requires the (0,0) block.
  RingClass unit() const;

  /// Cup product of classes; all three bidegrees must already be computed.
  RingClass product(const RingClass& a, const RingClass& b) const;
  RingClass add(const RingClass& a, const RingClass& b) const;

  /// <alpha, [z]>; throws BidegreeMismatch, or Error if z is not a cycle.
  Integer kronecker(const RingClass& alpha, const HomologyClass& z) const;
  /// The homology class of a single simplex, which must be a cycle.
  HomologyClass simplex_class(const Tuple& t) const;

 private:
  QuasiMetricSpace X_;
  std::map<Bidegree, CohomologyBlock> blocks_;
};

RingClass class_product(const MagnitudeCohomology& ring, const RingClass& a, const RingClass& b);
Integer kronecker(const MagnitudeCohomology& ring, const RingClass& alpha, const HomologyClass& z);

}  // namespace maghom
