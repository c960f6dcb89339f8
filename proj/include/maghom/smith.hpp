#pragma once

#include <vector>

#include "maghom/matrix.hpp"

namespace maghom {

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , di >= 0.
///
/// The inverses of U and V are tracked alongside so callers can move between
/// the original and the Smith coordinates without a separate inversion.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix U_inv;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inv;
  std::size_t rank = 0;

  /// Diagonal entries d1..d_rank (all positive).
  std::vector<Integer> diagonal() const;
};

/// Which transforms `smith_normal_form` records. Untracked matrices are left empty.
struct SmithOptions {
  bool row_transform = true;
  bool column_transform = true;
};

/// Dense Smith normal form with minimal-absolute-value pivoting.
SmithDecomposition smith_normal_form(const IntMatrix& M, SmithOptions options = {});

/// Rank and invariant factors of an integer matrix, without transforms.
struct SmithInvariants {
  std::size_t rank = 0;
  /// Invariant factors greater than one, in divisibility order.
  std::vector<Integer> torsion;
};

/// Invariant factors of a sparse matrix. Columns are reduced left to right
/// against unit pivots; whatever cannot be reduced that way is finished with
/// the dense routine.
SmithInvariants smith_invariants(const SparseMatrix& M);

/// Turns a list of nonzero diagonal entries into a divisibility chain with
/// the same Smith form.
std::vector<Integer> invariant_factors_of_diagonal(std::vector<Integer> diagonal);

}  // namespace maghom
