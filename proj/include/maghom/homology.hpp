#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maghom/chain_complex.hpp"
#include "maghom/smith.hpp"

namespace maghom {

/// Z^rank plus torsion Z/t1 + ... with t1 | t2 | ..., every ti >= 2.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  bool torsion_free() const { return torsion.empty(); }
  /// `0`, `Z^3`, `Z + Z/2`, ...
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cohomology H^k = ker(delta_k) / im(delta_{k-1}) with explicit generators.
///
/// Class coordinates list the free part first and then the torsion part; a
/// torsion coordinate is reduced into [0, order).
class CohomologyBasis {
 public:
  CohomologyBasis() = default;
  CohomologyBasis(const SparseMatrix& coboundary_prev, const SparseMatrix& coboundary_next);

  std::size_t dimension() const { return dimension_; }
  AbelianGroup group() const;
  std::size_t free_rank() const { return free_generators_.size(); }
  std::size_t class_dimension() const {
    return free_generators_.size() + torsion_generators_.size();
  }
  const std::vector<IntVector>& free_generators() const { return free_generators_; }
  const std::vector<IntVector>& torsion_generators() const { return torsion_generators_; }
  const std::vector<Integer>& torsion_orders() const { return torsion_orders_; }

  bool is_cocycle(const IntVector& cochain) const;
  /// Class coordinates of a cocycle. Throws if the cochain is not closed.
  IntVector coordinates(const IntVector& cocycle) const;
  /// A cocycle with the given class coordinates.
  IntVector representative(const IntVector& coordinates) const;
  /// Reduces torsion coordinates into [0, order).
  IntVector normalize(IntVector coordinates) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<IntVector> free_generators_;
  std::vector<IntVector> torsion_generators_;
  std::vector<Integer> torsion_orders_;
  IntMatrix free_reduction_;
  IntMatrix torsion_reduction_;
  SparseMatrix coboundary_;
};

/// H_k of C_{k+1} -> C_k -> C_{k-1}, given the two boundary matrices.
AbelianGroup homology_group(const SparseMatrix& boundary_k, const SparseMatrix& boundary_next);
/// H^k of C^{k-1} -> C^k -> C^{k+1}, given the two coboundary matrices.
AbelianGroup cohomology_group(const SparseMatrix& coboundary_prev,
                              const SparseMatrix& coboundary_next);

/// MH_{k,grade}(X).
AbelianGroup homology(const GradedComplexBlock& block, std::size_t k);
AbelianGroup homology(const QuasiMetricSpace& X, std::size_t k, const Rational& grade);

/// MH^k_grade(X), computed from the coboundary matrices.
AbelianGroup cohomology_group(const GradedComplexBlock& block, std::size_t k);
std::pair<AbelianGroup, CohomologyBasis> cohomology(const GradedComplexBlock& block,
                                                    std::size_t k);
std::pair<AbelianGroup, CohomologyBasis> cohomology(const QuasiMetricSpace& X, std::size_t k,
                                                    const Rational& grade);

/// rank MH^k = rank MH_k and torsion(MH^k) = torsion(MH_{k-1}).
bool uct_check(const AbelianGroup& cohomology_k, const AbelianGroup& homology_k,
               const AbelianGroup& homology_k_minus_1);
bool uct_check(const GradedComplexBlock& block, std::size_t k);
bool uct_check(const QuasiMetricSpace& X, std::size_t k, const Rational& grade);

}  // namespace maghom
