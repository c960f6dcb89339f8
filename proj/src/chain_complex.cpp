#include "maghom/chain_complex.hpp"

#include <algorithm>
#include <set>

#include "maghom/errors.hpp"

namespace maghom {

ExtendedRational tuple_length(const QuasiMetricSpace& X, const Tuple& t) {
  ExtendedRational total(0);
  for (std::size_t i = 1; i < t.size(); ++i) total += X.d(t[i - 1], t[i]);
  return total;
}

bool is_simplex(const Tuple& t) {
  if (t.empty()) return false;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i - 1] == t[i]) return false;
  }
  return true;
}

SimplexBasis::SimplexBasis(std::size_t k, Rational grade, std::vector<Tuple> simplices)
    : k_(k), grade_(std::move(grade)), simplices_(std::move(simplices)) {}

std::optional<std::size_t> SimplexBasis::index_of(const Tuple& t) const {
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), t);
  if (it == simplices_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - simplices_.begin());
}

namespace {

struct Step {
  std::size_t to;
  Rational length;
};

class SimplexEnumerator {
 public:
  SimplexEnumerator(const QuasiMetricSpace& X, std::size_t k, const Rational& grade)
      : k_(k), grade_(grade), steps_(X.size()) {
    floor_ = 0;
    bool first = true;
    for (std::size_t x = 0; x < X.size(); ++x) {
      for (std::size_t y = 0; y < X.size(); ++y) {
        if (x == y || X.d(x, y).is_infinite()) continue;
        steps_[x].push_back({y, X.d(x, y).value()});
        if (first || X.d(x, y).value() < floor_) floor_ = X.d(x, y).value();
        first = false;
      }
    }
  }

  std::vector<Tuple> run() {
    std::vector<Tuple> out;
    if (sgn(grade_) < 0) return out;
    Tuple current;
    for (std::size_t x = 0; x < steps_.size(); ++x) {
      current.assign(1, x);
      extend(current, grade_, out);
    }
    return out;
  }

 private:
  void extend(Tuple& current, const Rational& remaining, std::vector<Tuple>& out) {
    const std::size_t left = k_ + 1 - current.size();
    if (left == 0) {
      if (sgn(remaining) == 0) out.push_back(current);
      return;
    }
    // Each of the remaining steps costs at least floor_.
    if (remaining < floor_ * static_cast<long>(left)) return;
    for (const auto& step : steps_[current.back()]) {
      if (step.length > remaining) continue;
      Rational rest = remaining - step.length;
      if (rest < floor_ * static_cast<long>(left - 1)) continue;
      current.push_back(step.to);
      extend(current, rest, out);
      current.pop_back();
    }
  }

  std::size_t k_;
  Rational grade_;
  std::vector<std::vector<Step>> steps_;
  Rational floor_;
};

}  // namespace

SimplexBasis simplex_basis(const QuasiMetricSpace& X, std::size_t k, const Rational& grade) {
  return SimplexBasis(k, grade, SimplexEnumerator(X, k, grade).run());
}

std::vector<Simplex> enumerate_simplices(const QuasiMetricSpace& X, std::size_t k,
                                         const Rational& grade) {
  std::vector<Simplex> out;
  for (auto& t : SimplexEnumerator(X, k, grade).run()) {
    out.push_back({std::move(t), ExtendedRational(grade)});
  }
  return out;
}

SparseMatrix boundary_matrix(const QuasiMetricSpace& X, const SimplexBasis& source,
                             const SimplexBasis& target) {
  SparseMatrix M(target.size(), source.size());
  if (source.degree() == 0) return M;
  if (target.degree() + 1 != source.degree() || target.grade() != source.grade()) {
    throw Error("boundary_matrix: incompatible bases");
  }
  Tuple face;
  for (std::size_t c = 0; c < source.size(); ++c) {
    const Tuple& s = source[c];
    const std::size_t k = s.size() - 1;
    for (std::size_t i = 1; i < k; ++i) {
      if (s[i - 1] == s[i + 1]) continue;
      if (X.d(s[i - 1], s[i + 1]) != X.d(s[i - 1], s[i]) + X.d(s[i], s[i + 1])) continue;
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      auto row = target.index_of(face);
      if (!row) throw Error("boundary face missing from target basis");
      M.add(*row, c, Integer(i % 2 == 0 ? 1 : -1));
    }
  }
  return M;
}

SparseMatrix boundary_matrix(const QuasiMetricSpace& X, std::size_t k, const Rational& grade) {
  auto source = simplex_basis(X, k, grade);
  if (k == 0) return SparseMatrix(0, source.size());
  return boundary_matrix(X, source, simplex_basis(X, k - 1, grade));
}

SparseMatrix coboundary_matrix(const QuasiMetricSpace& X, std::size_t k, const Rational& grade) {
  return boundary_matrix(X, k + 1, grade).transpose();
}

SparseMatrix induced_chain_map(const QuasiMetricSpace& X, const QuasiMetricSpace& Y,
                               const std::vector<std::size_t>& f, std::size_t k,
                               const Rational& grade) {
  if (f.size() != X.size()) throw Error("induced_chain_map: map has wrong domain size");
  for (std::size_t x = 0; x < X.size(); ++x) {
    if (f[x] >= Y.size()) throw Error("induced_chain_map: image out of range");
  }
  for (std::size_t x = 0; x < X.size(); ++x) {
    for (std::size_t y = 0; y < X.size(); ++y) {
      if (Y.d(f[x], f[y]) > X.d(x, y)) {
        throw NotNonIncreasing("map increases d(" + std::to_string(x) + "," +
                               std::to_string(y) + ")");
      }
    }
  }
  auto source = simplex_basis(X, k, grade);
  auto target = simplex_basis(Y, k, grade);
  SparseMatrix M(target.size(), source.size());
  Tuple image;
  for (std::size_t c = 0; c < source.size(); ++c) {
    image.clear();
    for (std::size_t x : source[c]) image.push_back(f[x]);
    if (!is_simplex(image)) continue;
    if (tuple_length(Y, image) != ExtendedRational(grade)) continue;
    auto row = target.index_of(image);
    if (!row) throw Error("induced_chain_map: image missing from target basis");
    M.add(*row, c, Integer(1));
  }
  return M;
}

std::vector<Rational> realizable_grades(const QuasiMetricSpace& X, const Rational& max_grade) {
  require_positive_min(X);
  std::set<Rational> steps;
  for (std::size_t x = 0; x < X.size(); ++x) {
    for (std::size_t y = 0; y < X.size(); ++y) {
      if (x != y && X.d(x, y).is_finite() && X.d(x, y).value() <= max_grade) {
        steps.insert(X.d(x, y).value());
      }
    }
  }
  std::set<Rational> grades{Rational(0)};
  std::vector<Rational> frontier{Rational(0)};
  while (!frontier.empty()) {
    std::vector<Rational> next;
    for (const auto& g : frontier) {
      for (const auto& s : steps) {
        Rational h = g + s;
        if (h > max_grade) break;
        if (grades.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return {grades.begin(), grades.end()};
}

GradedComplexBlock build_block(const QuasiMetricSpace& X, const Rational& grade,
                               std::size_t kmax) {
  GradedComplexBlock block;
  block.grade = grade;
  block.kmax = kmax;
  for (std::size_t k = 0; k <= kmax + 1; ++k) block.bases.push_back(simplex_basis(X, k, grade));
  block.boundaries.emplace_back(0, block.bases[0].size());
  for (std::size_t k = 1; k <= kmax + 1; ++k) {
    block.boundaries.push_back(boundary_matrix(X, block.bases[k], block.bases[k - 1]));
  }
  return block;
}

}  // namespace maghom
