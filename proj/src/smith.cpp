#include "maghom/smith.hpp"

#include <algorithm>
#include <optional>

namespace maghom {

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

class DenseSmith {
 public:
  DenseSmith(const IntMatrix& M, SmithOptions options)
      : A_(M), m_(M.rows()), n_(M.cols()), opt_(options) {
    if (opt_.row_transform) {
      U_ = IntMatrix::identity(m_);
      U_inv_ = IntMatrix::identity(m_);
    }
    if (opt_.column_transform) {
      V_ = IntMatrix::identity(n_);
      V_inv_ = IntMatrix::identity(n_);
    }
  }

  SmithDecomposition run() {
    std::size_t t = 0;
    for (; t < std::min(m_, n_); ++t) {
      auto pivot = min_abs_entry(t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      reduce_pivot(t);
      if (sgn(A_(t, t)) < 0) negate_row(t);
    }
    SmithDecomposition out;
    out.rank = t;
    out.D = std::move(A_);
    out.U = std::move(U_);
    out.U_inv = std::move(U_inv_);
    out.V = std::move(V_);
    out.V_inv = std::move(V_inv_);
    return out;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> min_abs_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m_; ++i) {
      for (std::size_t j = t; j < n_; ++j) {
        const Integer& a = A_(i, j);
        if (sgn(a) == 0) continue;
        if (!best || cmpabs(a, A_(best->first, best->second)) < 0) {
          best = {i, j};
          if (a == 1 || a == -1) return best;
        }
      }
    }
    return best;
  }

  void reduce_pivot(std::size_t t) {
    Integer q;
    for (;;) {
      // Column t below the pivot.
      bool remainder = false;
      std::vector<std::size_t> row_support;
      for (std::size_t j = t; j < n_; ++j) {
        if (sgn(A_(t, j)) != 0) row_support.push_back(j);
      }
      for (std::size_t i = t + 1; i < m_; ++i) {
        if (sgn(A_(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), A_(i, t).get_mpz_t(), A_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_row_multiple(i, t, -q, row_support);
        if (sgn(A_(i, t)) != 0) remainder = true;
      }
      if (remainder) {
        std::size_t best = t;
        for (std::size_t i = t + 1; i < m_; ++i) {
          if (sgn(A_(i, t)) != 0 && (best == t || cmpabs(A_(i, t), A_(best, t)) < 0)) best = i;
        }
        swap_rows(t, best);
        continue;
      }
      // Row t right of the pivot; column t is zero apart from the pivot.
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (sgn(A_(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), A_(t, j).get_mpz_t(), A_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_col_multiple(j, t, -q);
        if (sgn(A_(t, j)) != 0) remainder = true;
      }
      if (remainder) {
        std::size_t best = t;
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (sgn(A_(t, j)) != 0 && (best == t || cmpabs(A_(t, j), A_(t, best)) < 0)) best = j;
        }
        swap_cols(t, best);
        continue;
      }
      if (A_(t, t) == 1 || A_(t, t) == -1) return;
      // Divisibility of the remaining block by the pivot.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m_ && !offender; ++i) {
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (sgn(A_(i, j)) != 0 && !mpz_divisible_p(A_(i, j).get_mpz_t(), A_(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
        }
      }
      if (!offender) return;
      std::vector<std::size_t> support;
      for (std::size_t j = t; j < n_; ++j) {
        if (sgn(A_(*offender, j)) != 0) support.push_back(j);
      }
      add_row_multiple(t, *offender, Integer(1), support);
    }
  }

  // row_i += q * row_t; `support` lists the nonzero columns of row t in A.
  void add_row_multiple(std::size_t i, std::size_t t, const Integer& q,
                        const std::vector<std::size_t>& support) {
    for (std::size_t j : support) A_(i, j) += q * A_(t, j);
    if (opt_.row_transform) {
      for (std::size_t j = 0; j < m_; ++j) {
        if (sgn(U_(t, j)) != 0) U_(i, j) += q * U_(t, j);
      }
      for (std::size_t r = 0; r < m_; ++r) {
        if (sgn(U_inv_(r, i)) != 0) U_inv_(r, t) -= q * U_inv_(r, i);
      }
    }
  }

  // col_j += q * col_t; column t of A is zero outside row t.
  void add_col_multiple(std::size_t j, std::size_t t, const Integer& q) {
    A_(t, j) += q * A_(t, t);
    if (opt_.column_transform) {
      for (std::size_t r = 0; r < n_; ++r) {
        if (sgn(V_(r, t)) != 0) V_(r, j) += q * V_(r, t);
      }
      for (std::size_t c = 0; c < n_; ++c) {
        if (sgn(V_inv_(j, c)) != 0) V_inv_(t, c) -= q * V_inv_(j, c);
      }
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n_; ++j) swap(A_(a, j), A_(b, j));
    if (opt_.row_transform) {
      for (std::size_t j = 0; j < m_; ++j) swap(U_(a, j), U_(b, j));
      for (std::size_t r = 0; r < m_; ++r) swap(U_inv_(r, a), U_inv_(r, b));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m_; ++i) swap(A_(i, a), A_(i, b));
    if (opt_.column_transform) {
      for (std::size_t r = 0; r < n_; ++r) swap(V_(r, a), V_(r, b));
      for (std::size_t c = 0; c < n_; ++c) swap(V_inv_(a, c), V_inv_(b, c));
    }
  }

  void negate_row(std::size_t t) {
    for (std::size_t j = 0; j < n_; ++j) A_(t, j) = -A_(t, j);
    if (opt_.row_transform) {
      for (std::size_t j = 0; j < m_; ++j) U_(t, j) = -U_(t, j);
      for (std::size_t r = 0; r < m_; ++r) U_inv_(r, t) = -U_inv_(r, t);
    }
  }

  IntMatrix A_;
  std::size_t m_;
  std::size_t n_;
  SmithOptions opt_;
  IntMatrix U_, U_inv_, V_, V_inv_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& M, SmithOptions options) {
  return DenseSmith(M, options).run();
}

std::vector<Integer> invariant_factors_of_diagonal(std::vector<Integer> diagonal) {
  for (auto& d : diagonal) d = abs(d);
  diagonal.erase(std::remove_if(diagonal.begin(), diagonal.end(),
                                [](const Integer& d) { return sgn(d) == 0; }),
                 diagonal.end());
  // Pairwise (gcd, lcm) replacement keeps the Smith form and ends in a chain.
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      if (mpz_divisible_p(diagonal[j].get_mpz_t(), diagonal[i].get_mpz_t())) continue;
      Integer g = gcd(diagonal[i], diagonal[j]);
      Integer l = diagonal[i] / g * diagonal[j];
      diagonal[i] = g;
      diagonal[j] = l;
    }
  }
  return diagonal;
}

SmithInvariants smith_invariants(const SparseMatrix& M) {
  const std::size_t rows = M.rows();
  // pivot_of_row[r] = column whose lowest entry is a unit at row r.
  std::vector<std::ptrdiff_t> pivot_of_row(rows, -1);
  std::vector<SparseColumn> reduced(M.cols());
  std::vector<std::size_t> residual;
  std::size_t unit_pivots = 0;

  for (std::size_t c = 0; c < M.cols(); ++c) {
    SparseColumn col = M.column(c);
    while (!col.empty()) {
      const auto& [low, value] = col.back();
      auto owner = pivot_of_row[low];
      if (owner < 0) break;
      const auto& pcol = reduced[static_cast<std::size_t>(owner)];
      // Pivot value is a unit, so value / pivot is exact.
      Integer factor = -value * pcol.back().second;
      col = axpy(col, factor, pcol);
    }
    if (col.empty()) continue;
    const Integer& low_value = col.back().second;
    if (low_value == 1 || low_value == -1) {
      pivot_of_row[col.back().first] = static_cast<std::ptrdiff_t>(c);
      ++unit_pivots;
    } else {
      residual.push_back(c);
    }
    reduced[c] = std::move(col);
  }

  SmithInvariants out;
  out.rank = unit_pivots;
  if (residual.empty()) return out;

  // Clear every pivot row from the residual columns, then finish densely on
  // the rows that remain.
  std::vector<SparseColumn> rest;
  for (std::size_t c : residual) {
    SparseColumn col = reduced[c];
    std::size_t cursor = col.size();
    while (cursor > 0) {
      const auto& [row, value] = col[cursor - 1];
      auto owner = pivot_of_row[row];
      if (owner < 0) {
        --cursor;
        continue;
      }
      const auto& pcol = reduced[static_cast<std::size_t>(owner)];
      Integer factor = -value * pcol.back().second;
      col = axpy(col, factor, pcol);
      // Entries above `row` may have changed; entries at and below did not
      // gain anything new past the cursor position.
      cursor = static_cast<std::size_t>(
          std::lower_bound(col.begin(), col.end(), row,
                           [](const auto& e, std::size_t r) { return e.first < r; }) -
          col.begin());
    }
    if (!col.empty()) rest.push_back(std::move(col));
  }
  if (rest.empty()) return out;

  std::vector<std::size_t> live_rows;
  for (const auto& col : rest) {
    for (const auto& [r, v] : col) live_rows.push_back(r);
  }
  std::sort(live_rows.begin(), live_rows.end());
  live_rows.erase(std::unique(live_rows.begin(), live_rows.end()), live_rows.end());
  IntMatrix dense(live_rows.size(), rest.size());
  for (std::size_t j = 0; j < rest.size(); ++j) {
    for (const auto& [r, v] : rest[j]) {
      auto i = std::lower_bound(live_rows.begin(), live_rows.end(), r) - live_rows.begin();
      dense(static_cast<std::size_t>(i), j) = v;
    }
  }
  auto snf = smith_normal_form(dense, {.row_transform = false, .column_transform = false});
  out.rank += snf.rank;
  for (auto& d : invariant_factors_of_diagonal(snf.diagonal())) {
    if (d != 1) out.torsion.push_back(std::move(d));
  }
  return out;
}

}  // namespace maghom
