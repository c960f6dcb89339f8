#include "maghom/matrix.hpp"

#include <algorithm>
#include <map>

#include "maghom/errors.hpp"

namespace maghom {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error("matrix product dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        const Integer& b = other(k, c);
        if (sgn(b) != 0) out(r, c) += a * b;
      }
    }
  }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw Error("matrix-vector dimension mismatch");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool IntMatrix::is_zero() const { return maghom::is_zero(data_); }

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Integer& value) {
  if (r >= rows_ || c >= columns_.size()) throw Error("sparse entry out of range");
  if (sgn(value) == 0) return;
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second += value;
    if (sgn(it->second) == 0) col.erase(it);
  } else {
    col.insert(it, {r, value});
  }
}

Integer SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return 0;
}

void SparseMatrix::set_column(std::size_t c, SparseColumn col) { columns_[c] = std::move(col); }

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
  }
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (cols() != other.rows()) throw Error("sparse product dimension mismatch");
  SparseMatrix out(rows_, other.cols());
  for (std::size_t c = 0; c < other.cols(); ++c) {
    std::map<std::size_t, Integer> acc;
    for (const auto& [k, b] : other.columns_[c]) {
      for (const auto& [r, a] : columns_[k]) acc[r] += a * b;
    }
    for (auto& [r, v] : acc) {
      if (sgn(v) != 0) out.columns_[c].emplace_back(r, std::move(v));
    }
  }
  return out;
}

IntVector SparseMatrix::operator*(const IntVector& v) const {
  if (cols() != v.size()) throw Error("sparse matrix-vector dimension mismatch");
  IntVector out(rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    if (sgn(v[c]) == 0) continue;
    for (const auto& [r, a] : columns_[c]) out[r] += a * v[c];
  }
  return out;
}

IntVector SparseMatrix::left_multiply(const IntVector& v) const {
  if (rows_ != v.size()) throw Error("sparse row-vector dimension mismatch");
  IntVector out(cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, a] : columns_[c]) {
      if (sgn(v[r]) != 0) out[c] += a * v[r];
    }
  }
  return out;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) m(r, c) = v;
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (sgn(m(r, c)) != 0) s.columns_[c].emplace_back(r, m(r, c));
    }
  }
  return s;
}

SparseColumn axpy(const SparseColumn& a, const Integer& factor, const SparseColumn& b) {
  SparseColumn out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, factor * b[j].second);
      ++j;
    } else {
      Integer v = a[i].second + factor * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace maghom
