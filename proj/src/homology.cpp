#include "maghom/homology.hpp"

#include "maghom/errors.hpp"

namespace maghom {

std::string AbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (rank == 1) out = "Z";
  if (rank > 1) out = "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out;
}

namespace {

// Dense rows [from, to) of `m`.
IntMatrix row_slice(const IntMatrix& m, std::size_t from, std::size_t to) {
  IntMatrix out(to - from, m.cols());
  for (std::size_t r = from; r < to; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r - from, c) = m(r, c);
  }
  return out;
}

// Dense (rows of `left`) x sparse product.
IntMatrix dense_times_sparse(const IntMatrix& left, const SparseMatrix& right) {
  IntMatrix out(left.rows(), right.cols());
  for (std::size_t c = 0; c < right.cols(); ++c) {
    for (const auto& [k, v] : right.column(c)) {
      for (std::size_t r = 0; r < left.rows(); ++r) {
        if (sgn(left(r, k)) != 0) out(r, c) += left(r, k) * v;
      }
    }
  }
  return out;
}

}  // namespace

CohomologyBasis::CohomologyBasis(const SparseMatrix& coboundary_prev,
                                 const SparseMatrix& coboundary_next)
    : dimension_(coboundary_next.cols()), coboundary_(coboundary_next) {
  if (coboundary_prev.rows() != dimension_) {
    throw Error("cohomology: coboundary matrices do not compose");
  }
  // Kernel of delta_k: the last columns of V in U * delta_k * V = D.
  auto next = smith_normal_form(coboundary_next.to_dense(),
                                {.row_transform = false, .column_transform = true});
  const std::size_t r_next = next.rank;
  const std::size_t z = dimension_ - r_next;
  // Kernel coordinates of a cocycle x are rows r_next.. of V^{-1} x.
  IntMatrix kernel_coords = row_slice(next.V_inv, r_next, dimension_);

  // Image of delta_{k-1} in kernel coordinates, then its Smith form.
  IntMatrix image = dense_times_sparse(kernel_coords, coboundary_prev);
  auto prev = smith_normal_form(image, {.row_transform = true, .column_transform = false});
  auto diagonal = prev.diagonal();

  IntMatrix reduction = prev.U * kernel_coords;
  std::vector<std::size_t> free_rows;
  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < z; ++i) {
    if (i >= prev.rank) {
      free_rows.push_back(i);
    } else if (diagonal[i] != 1) {
      torsion_rows.push_back(i);
    }
  }
  auto generator = [&](std::size_t i) {
    IntVector g(dimension_);
    for (std::size_t j = 0; j < z; ++j) {
      const Integer& coeff = prev.U_inv(j, i);
      if (sgn(coeff) == 0) continue;
      for (std::size_t r = 0; r < dimension_; ++r) {
        const Integer& v = next.V(r, r_next + j);
        if (sgn(v) != 0) g[r] += coeff * v;
      }
    }
    return g;
  };
  free_reduction_ = IntMatrix(free_rows.size(), dimension_);
  for (std::size_t a = 0; a < free_rows.size(); ++a) {
    free_generators_.push_back(generator(free_rows[a]));
    for (std::size_t c = 0; c < dimension_; ++c) free_reduction_(a, c) = reduction(free_rows[a], c);
  }
  torsion_reduction_ = IntMatrix(torsion_rows.size(), dimension_);
  for (std::size_t a = 0; a < torsion_rows.size(); ++a) {
    torsion_generators_.push_back(generator(torsion_rows[a]));
    torsion_orders_.push_back(diagonal[torsion_rows[a]]);
    for (std::size_t c = 0; c < dimension_; ++c) {
      torsion_reduction_(a, c) = reduction(torsion_rows[a], c);
    }
  }
}

AbelianGroup CohomologyBasis::group() const { return {free_rank(), torsion_orders_}; }

bool CohomologyBasis::is_cocycle(const IntVector& cochain) const {
  if (cochain.size() != dimension_) return false;
  return maghom::is_zero(coboundary_ * cochain);
}

IntVector CohomologyBasis::normalize(IntVector coordinates) const {
  const std::size_t f = free_rank();
  for (std::size_t i = 0; i < torsion_orders_.size(); ++i) {
    Integer& c = coordinates[f + i];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), torsion_orders_[i].get_mpz_t());
  }
  return coordinates;
}

IntVector CohomologyBasis::coordinates(const IntVector& cocycle) const {
  if (!is_cocycle(cocycle)) throw Error("coordinates: cochain is not a cocycle");
  IntVector out = free_reduction_ * cocycle;
  IntVector tors = torsion_reduction_ * cocycle;
  out.insert(out.end(), tors.begin(), tors.end());
  return normalize(std::move(out));
}

IntVector CohomologyBasis::representative(const IntVector& coordinates) const {
  if (coordinates.size() != class_dimension()) throw Error("representative: wrong coordinate count");
  IntVector out(dimension_);
  auto accumulate = [&](const IntVector& g, const Integer& c) {
    if (sgn(c) == 0) return;
    for (std::size_t r = 0; r < dimension_; ++r) {
      if (sgn(g[r]) != 0) out[r] += c * g[r];
    }
  };
  for (std::size_t i = 0; i < free_generators_.size(); ++i) {
    accumulate(free_generators_[i], coordinates[i]);
  }
  for (std::size_t i = 0; i < torsion_generators_.size(); ++i) {
    accumulate(torsion_generators_[i], coordinates[free_generators_.size() + i]);
  }
  return out;
}

AbelianGroup homology_group(const SparseMatrix& boundary_k, const SparseMatrix& boundary_next) {
  const std::size_t dim = boundary_k.cols();
  if (boundary_next.rows() != dim) throw Error("homology: boundary matrices do not compose");
  auto out_rank = smith_invariants(boundary_k).rank;
  auto in = smith_invariants(boundary_next);
  return {dim - out_rank - in.rank, in.torsion};
}

AbelianGroup cohomology_group(const SparseMatrix& coboundary_prev,
                              const SparseMatrix& coboundary_next) {
  const std::size_t dim = coboundary_next.cols();
  if (coboundary_prev.rows() != dim) throw Error("cohomology: coboundary matrices do not compose");
  auto out_rank = smith_invariants(coboundary_next).rank;
  auto in = smith_invariants(coboundary_prev);
  return {dim - out_rank - in.rank, in.torsion};
}

namespace {

void require_degree(const GradedComplexBlock& block, std::size_t k) {
  if (k > block.kmax) throw Error("degree exceeds the block's truncation");
}

}  // namespace

AbelianGroup homology(const GradedComplexBlock& block, std::size_t k) {
  require_degree(block, k);
  return homology_group(block.boundaries[k], block.boundaries[k + 1]);
}

AbelianGroup homology(const QuasiMetricSpace& X, std::size_t k, const Rational& grade) {
  return homology(build_block(X, grade, k), k);
}

AbelianGroup cohomology_group(const GradedComplexBlock& block, std::size_t k) {
  require_degree(block, k);
  return cohomology_group(block.boundaries[k].transpose(), block.boundaries[k + 1].transpose());
}

std::pair<AbelianGroup, CohomologyBasis> cohomology(const GradedComplexBlock& block,
                                                    std::size_t k) {
  require_degree(block, k);
  CohomologyBasis basis(block.boundaries[k].transpose(), block.boundaries[k + 1].transpose());
  return {basis.group(), std::move(basis)};
}

std::pair<AbelianGroup, CohomologyBasis> cohomology(const QuasiMetricSpace& X, std::size_t k,
                                                    const Rational& grade) {
  return cohomology(build_block(X, grade, k), k);
}

bool uct_check(const AbelianGroup& cohomology_k, const AbelianGroup& homology_k,
               const AbelianGroup& homology_k_minus_1) {
  return cohomology_k.rank == homology_k.rank &&
         cohomology_k.torsion == homology_k_minus_1.torsion;
}

bool uct_check(const GradedComplexBlock& block, std::size_t k) {
  AbelianGroup below = k == 0 ? AbelianGroup{} : homology(block, k - 1);
  return uct_check(cohomology_group(block, k), homology(block, k), below);
}

bool uct_check(const QuasiMetricSpace& X, std::size_t k, const Rational& grade) {
  return uct_check(build_block(X, grade, k), k);
}

}  // namespace maghom
