#include "maghom/recovery.hpp"

#include <algorithm>
#include <random>

#include "maghom/errors.hpp"

namespace maghom {

namespace {

using RatVector = std::vector<Rational>;
// Coefficients from the constant term upwards.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Rational evaluate(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

Poly remainder(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p, derivative(p)};
  while (!seq.back().empty()) {
    Poly r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<Poly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sgn(evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Integer roots of p in (lo, hi], by bisection over half-integer endpoints.
void integer_roots(const std::vector<Poly>& seq, const Integer& lo, const Integer& hi,
                   std::vector<Integer>& out) {
  const Rational half(1, 2);
  int count = sign_changes(seq, Rational(lo) + half) - sign_changes(seq, Rational(hi) + half);
  if (count <= 0) return;
  if (hi - lo == 1) {
    out.push_back(hi);
    return;
  }
  Integer mid = lo + (hi - lo) / 2;
  integer_roots(seq, lo, mid, out);
  integer_roots(seq, mid, hi, out);
}

RatVector act(const IntMatrix& m, const RatVector& v) {
  RatVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) != 0 && sgn(v[c]) != 0) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

// Minimal polynomial of `op` relative to the vector v (monic, low to high).
Poly krylov_minimal_polynomial(const IntMatrix& op, const RatVector& v) {
  const std::size_t n = v.size();
  // Echelon rows with the combination of Krylov vectors that produced them.
  struct Row {
    RatVector vec;
    RatVector combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  RatVector current = v;
  for (std::size_t d = 0; d <= n; ++d) {
    RatVector vec = current;
    RatVector combo(n + 1);
    combo[d] = 1;
    for (const auto& row : rows) {
      if (sgn(vec[row.pivot]) == 0) continue;
      Rational f = vec[row.pivot] / row.vec[row.pivot];
      for (std::size_t i = 0; i < n; ++i) vec[i] -= f * row.vec[i];
      for (std::size_t i = 0; i <= n; ++i) combo[i] -= f * row.combo[i];
    }
    auto nz = std::find_if(vec.begin(), vec.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (nz == vec.end()) {
      Poly p(combo.begin(), combo.begin() + static_cast<std::ptrdiff_t>(d + 1));
      return p;
    }
    const auto pivot = static_cast<std::size_t>(nz - vec.begin());
    rows.push_back({std::move(vec), std::move(combo), pivot});
    current = act(op, current);
  }
  throw NotSplit("Krylov sequence did not terminate");
}

std::optional<std::vector<Idempotent>> idempotents_from(const RingPresentation& P,
                                                        const IntVector& a) {
  const Bidegree zero{0, 0};
  const std::size_t n = P.unit.size();
  IntMatrix op = P.left_operator(zero, a, zero);
  RatVector unit(P.unit.begin(), P.unit.end());
  Poly m = krylov_minimal_polynomial(op, unit);
  if (m.size() != n + 1) return std::nullopt;

  Integer bound = 1;
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    Rational c = abs(m[i]);
    Integer ceil_c = c.get_num() / c.get_den() + 1;
    if (ceil_c + 1 > bound) bound = ceil_c + 1;
  }
  std::vector<Integer> roots;
  integer_roots(sturm_sequence(m), -bound - 1, bound, roots);
  if (roots.size() != n) throw NotSplit("the (0,0) component has a non-integral spectrum");
  for (const auto& r : roots) {
    if (sgn(evaluate(m, Rational(r))) != 0) {
      throw NotSplit("the (0,0) component has a non-integral spectrum");
    }
  }

  std::vector<Idempotent> out;
  for (std::size_t j = 0; j < n; ++j) {
    RatVector v = unit;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      RatVector av = act(op, v);
      Rational denom = Rational(roots[j] - roots[i]);
      for (std::size_t t = 0; t < n; ++t) v[t] = (av[t] - roots[i] * v[t]) / denom;
    }
    Idempotent e;
    for (const auto& q : v) {
      if (q.get_den() != 1) throw NotSplit("idempotent with non-integral coordinates");
      e.coords.push_back(q.get_num());
    }
    out.push_back(std::move(e));
  }
  return out;
}

void verify_idempotents(const RingPresentation& P, const std::vector<Idempotent>& es) {
  const Bidegree zero{0, 0};
  IntVector sum(P.unit.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      auto prod = *P.multiply(zero, es[i].coords, zero, es[j].coords);
      const IntVector expected = i == j ? es[i].coords : IntVector(P.unit.size());
      if (prod != expected) throw NotSplit("idempotent check failed in the (0,0) component");
    }
    for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += es[i].coords[t];
  }
  if (sum != P.unit) throw NotSplit("idempotents do not sum to the unit");
}

// Reduces torsion rows modulo their orders, then tests for zero.
bool operator_is_zero(const IntMatrix& m, const PresentationBlock& target) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) == 0) continue;
      if (r < target.free_rank) return false;
      if (!mpz_divisible_p(m(r, c).get_mpz_t(), target.torsion[r - target.free_rank].get_mpz_t())) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Bidegree> degree_one_blocks(const RingPresentation& P) {
  std::vector<Bidegree> out;
  for (const auto& b : P.blocks) {
    if (b.bidegree.k == 1 && P.in_range(b.bidegree)) out.push_back(b.bidegree);
  }
  return out;
}

}  // namespace

std::vector<Idempotent> primitive_idempotents(const RingPresentation& P) {
  const Bidegree zero{0, 0};
  const auto* blk = P.find(zero);
  if (blk == nullptr) {
    if (!P.unit.empty()) throw NotSplit("unit given without a (0,0) block");
    return {};
  }
  if (!blk->torsion.empty()) throw NotSplit("the (0,0) component has torsion");
  if (P.unit.size() != blk->size()) throw NotSplit("unit has the wrong length");
  const std::size_t n = blk->free_rank;

  std::mt19937_64 rng(0x6d61676dULL);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const long range = 3 + attempt * static_cast<long>(n);
    IntVector a(n);
    for (auto& c : a) c = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
    auto found = idempotents_from(P, a);
    if (!found) continue;
    verify_idempotents(P, *found);
    std::sort(found->begin(), found->end(),
              [](const Idempotent& x, const Idempotent& y) { return x.coords < y.coords; });
    return *found;
  }
  throw NotSplit("no element of the (0,0) component separates the idempotents");
}

ExtendedRational adjacency_weights(const RingPresentation& P, const Idempotent& e,
                                   const Idempotent& f) {
  const Bidegree zero{0, 0};
  std::optional<Rational> found;
  for (const auto& b : degree_one_blocks(P)) {
    IntMatrix left = P.left_operator(zero, e.coords, b);
    IntMatrix right = P.right_operator(b, zero, f.coords);
    if (operator_is_zero(right * left, *P.find(b))) continue;
    if (found) {
      throw NonUniqueGrade("two grades survive between a pair of idempotents: " +
                           rational_to_string(*found) + " and " +
                           rational_to_string(b.grade));
    }
    found = b.grade;
  }
  return found ? ExtendedRational(*found) : ExtendedRational::infinity();
}

RecoveredSpace recover_space(const RingPresentation& P) {
  auto points = primitive_idempotents(P);
  const std::size_t n = points.size();
  const Bidegree zero{0, 0};
  const auto blocks = degree_one_blocks(P);

  // Operators for every idempotent once, then one product per pair and grade.
  std::vector<std::vector<IntMatrix>> left(blocks.size()), right(blocks.size());
  for (std::size_t g = 0; g < blocks.size(); ++g) {
    for (const auto& e : points) {
      left[g].push_back(P.left_operator(zero, e.coords, blocks[g]));
      right[g].push_back(P.right_operator(blocks[g], zero, e.coords));
    }
  }
  DistanceMatrix weight(n, std::vector<ExtendedRational>(n, ExtendedRational::infinity()));
  for (std::size_t x = 0; x < n; ++x) {
    weight[x][x] = ExtendedRational(0);
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      for (std::size_t g = 0; g < blocks.size(); ++g) {
        if (operator_is_zero(right[g][y] * left[g][x], *P.find(blocks[g]))) continue;
        if (weight[x][y].is_finite()) {
          throw NonUniqueGrade("two grades survive between idempotents " + std::to_string(x) +
                               " and " + std::to_string(y));
        }
        weight[x][y] = blocks[g].grade;
      }
    }
  }

  // Dijkstra from every source over exact weights.
  DistanceMatrix dist(n, std::vector<ExtendedRational>(n, ExtendedRational::infinity()));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> done(n, false);
    dist[s][s] = ExtendedRational(0);
    for (std::size_t round = 0; round < n; ++round) {
      std::optional<std::size_t> u;
      for (std::size_t v = 0; v < n; ++v) {
        if (!done[v] && dist[s][v].is_finite() && (!u || dist[s][v] < dist[s][*u])) u = v;
      }
      if (!u) break;
      done[*u] = true;
      for (std::size_t v = 0; v < n; ++v) {
        if (weight[*u][v].is_infinite()) continue;
        auto via = dist[s][*u] + weight[*u][v];
        if (via < dist[s][v]) dist[s][v] = via;
      }
    }
  }
  return {std::move(points), QuasiMetricSpace(std::move(dist))};
}

RoundTripReport recovery_roundtrip_report(const QuasiMetricSpace& X,
                                          std::optional<std::uint64_t> scramble_seed) {
  require_positive_min(X);
  RoundTripReport report;
  auto exported = export_presentation(X, 1, max_finite_distance(X), scramble_seed);
  report.presentation = RingPresentation::from_json(exported.to_json());
  report.recovered = recover_space(report.presentation);
  report.isometric = is_isometric(report.recovered.space, X);
  return report;
}

bool recovery_roundtrip(const QuasiMetricSpace& X, std::optional<std::uint64_t> scramble_seed) {
  return recovery_roundtrip_report(X, scramble_seed).isometric;
}

}  // namespace maghom
