#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "maghom/homology.hpp"
#include "maghom/report.hpp"

namespace maghom {

/// Finite partial order on 0..n-1, stored as its strict relation.
class FinitePoset {
 public:
  FinitePoset() = default;
  /// Generating relations a < b; the transitive closure is taken. Throws on
  /// a cycle, a reflexive pair, or an index out of range.
  FinitePoset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  std::size_t size() const { return less_.size(); }
  bool less(std::size_t a, std::size_t b) const { return less_[a][b]; }
  bool leq(std::size_t a, std::size_t b) const { return a == b || less_[a][b]; }

  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);
  /// Face poset of the boundary of a triangle: vertices 0,1,2 below edges
  /// 3 = {0,1}, 4 = {1,2}, 5 = {0,2}.
  static FinitePoset circle();

 private:
  std::vector<std::vector<bool>> less_;
};

/// `n` on the first line, then lines `a < b`; blank lines and `#` comments skipped.
FinitePoset read_poset(std::istream& in);
FinitePoset read_poset_file(const std::string& path);

/// Strict chains x0 < ... < xk, lexicographic.
std::vector<Tuple> strict_chains(const FinitePoset& P, std::size_t k);

/// Order complex truncated at degree kmax + 1. The boundary deletes every
/// element, the outer ones included, with alternating signs.
struct OrderComplex {
  std::size_t kmax = 0;
  std::vector<SimplexBasis> bases;
  /// boundaries[k] : C_k -> C_{k-1}; boundaries[0] has no rows.
  std::vector<SparseMatrix> boundaries;

  AbelianGroup homology(std::size_t k) const;
  AbelianGroup cohomology(std::size_t k) const;
  CohomologyBasis cohomology_basis(std::size_t k) const;
};

OrderComplex order_complex_blocks(const FinitePoset& P, std::size_t kmax);

/// Integer cochain of degree k on the order complex.
struct PosetCochain {
  std::size_t degree = 0;
  IntVector coords;
};

/// (xi . eta)(x0 < ... < xk) = xi(x0 < ... < xi) eta(xi < ... < xk).
PosetCochain poset_cup(const OrderComplex& C, const PosetCochain& xi, const PosetCochain& eta);
PosetCochain poset_unit(const OrderComplex& C);
PosetCochain poset_coboundary(const OrderComplex& C, const PosetCochain& xi);

/// class(alpha . beta) = (-1)^{jk} class(beta . alpha) for all basis classes
/// with j + k <= kmax.
Report check_graded_commutativity(const FinitePoset& P, std::size_t kmax);

}  // namespace maghom
