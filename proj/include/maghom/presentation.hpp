#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "maghom/ring.hpp"

namespace maghom {

/// One nonzero bidegree of a presented ring. Its classes occupy global
/// indices [offset, offset + size()): free classes first, then torsion.
struct PresentationBlock {
  Bidegree bidegree;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  std::size_t offset = 0;

  std::size_t size() const { return free_rank + torsion.size(); }
};

/// b_left * b_right = ... + value * b_target + ...
struct StructureConstant {
  std::size_t left;
  std::size_t right;
  std::size_t target;
  Integer value;

  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// A bigraded ring given by bases and integer structure constants.
///
/// Only the bidegrees with k <= kmax and grade <= lmax were computed; products
/// landing outside that range are not recorded, and products landing inside it
/// on a bidegree without a block are zero.
class RingPresentation {
 public:
  std::size_t kmax = 0;
  Rational lmax;
  std::vector<PresentationBlock> blocks;
  /// Coordinates of the unit in the (0,0) block.
  IntVector unit;
  std::vector<StructureConstant> products;

  std::size_t class_count() const;
  const PresentationBlock* find(const Bidegree& b) const;
  /// Index into `blocks` of the block holding a global class index.
  std::size_t block_index_of(std::size_t cls) const;
  bool in_range(const Bidegree& b) const { return b.k <= kmax && b.grade <= lmax; }

  /// Product of x in block a and y in block b, as coordinates in block a+b.
  /// Returns nullopt when a+b lies outside the computed range; a zero vector of
  /// length zero when it lies inside but carries no block.
  std::optional<IntVector> multiply(const Bidegree& a, const IntVector& x, const Bidegree& b,
                                    const IntVector& y) const;

  /// Matrix of y -> x * y from block b into block a+b (columns indexed by
  /// b's classes). Torsion rows are not reduced. Throws MissingBlock when a,
  /// b or a+b carries no block or a+b is out of range.
  IntMatrix left_operator(const Bidegree& a, const IntVector& x, const Bidegree& b) const;
  /// Matrix of x -> x * y from block a into block a+b.
  IntMatrix right_operator(const Bidegree& a, const Bidegree& b, const IntVector& y) const;

  /// Canonical JSON text (sorted, deterministic).
  std::string to_json() const;
  static RingPresentation from_json(const std::string& text);

  /// Rebuilds offsets and sorts structure constants.
  void canonicalize();
};

/// Presentation of MH^k_l(X) for k <= kmax and l <= lmax. With a seed, each
/// block's free part is re-expressed in a random unimodular basis.
RingPresentation export_presentation(const QuasiMetricSpace& X, std::size_t kmax,
                                     const Rational& lmax,
                                     std::optional<std::uint64_t> scramble_seed = std::nullopt);
RingPresentation export_presentation(MagnitudeCohomology& ring, std::size_t kmax,
                                     const Rational& lmax,
                                     std::optional<std::uint64_t> scramble_seed = std::nullopt);

/// Random unimodular matrix and its inverse, built from elementary integer
/// row operations with multipliers in {-2,...,2}.
std::pair<IntMatrix, IntMatrix> random_unimodular(std::size_t n, std::mt19937_64& rng);

/// New free basis of block `b`: column j of `change` gives new class j in the
/// old free coordinates. `inverse` must be the exact inverse of `change`.
RingPresentation change_basis(const RingPresentation& P, const Bidegree& b,
                              const IntMatrix& change, const IntMatrix& inverse);

}  // namespace maghom
