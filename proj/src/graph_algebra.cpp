#include "maghom/graph_algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "maghom/errors.hpp"
#include "maghom/io.hpp"
#include "maghom/ring.hpp"

namespace maghom {

namespace {

constexpr std::size_t kHole = std::numeric_limits<std::size_t>::max();

void extend_paths(const Graph& G, std::size_t k, EdgePath& current,
                  std::vector<EdgePath>& out) {
  if (current.size() == k + 1) {
    out.push_back(current);
    return;
  }
  for (std::size_t v : G.neighbours(current.back())) {
    current.push_back(v);
    extend_paths(G, k, current, out);
    current.pop_back();
  }
}

using RatColumn = std::vector<std::pair<std::size_t, Rational>>;

RatColumn rat_axpy(const RatColumn& a, const Rational& f, const RatColumn& b) {
  RatColumn out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second + f * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Reduces sparse rational vectors to echelon form, keyed by their last entry.
// Returns the set of pivot positions.
std::vector<bool> rational_pivots(const std::vector<RatColumn>& vectors, std::size_t dim) {
  std::vector<std::ptrdiff_t> owner(dim, -1);
  std::vector<RatColumn> reduced;
  std::vector<bool> pivot(dim, false);
  for (const auto& v : vectors) {
    RatColumn col = v;
    while (!col.empty()) {
      auto o = owner[col.back().first];
      if (o < 0) break;
      const auto& p = reduced[static_cast<std::size_t>(o)];
      col = rat_axpy(col, -col.back().second / p.back().second, p);
    }
    if (col.empty()) continue;
    owner[col.back().first] = static_cast<std::ptrdiff_t>(reduced.size());
    pivot[col.back().first] = true;
    reduced.push_back(std::move(col));
  }
  return pivot;
}

std::size_t rational_rank(const std::vector<RatColumn>& vectors, std::size_t dim) {
  auto p = rational_pivots(vectors, dim);
  return static_cast<std::size_t>(std::count(p.begin(), p.end(), true));
}

}  // namespace

std::vector<EdgePath> edge_paths(const Graph& G, std::size_t k) {
  std::vector<EdgePath> out;
  EdgePath current;
  for (std::size_t v = 0; v < G.size(); ++v) {
    current.assign(1, v);
    extend_paths(G, k, current, out);
  }
  return out;
}

Integer path_count(const Graph& G, std::size_t k) {
  // Walk counts by dynamic programming over the end vertex.
  std::vector<Integer> ending(G.size(), 1);
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<Integer> next(G.size(), 0);
    for (std::size_t u = 0; u < G.size(); ++u) {
      for (std::size_t v : G.neighbours(u)) next[v] += ending[u];
    }
    ending = std::move(next);
  }
  Integer total = 0;
  for (const auto& c : ending) total += c;
  return total;
}

DiagonalQuotient diagonal_quotient(const Graph& G, std::size_t k) {
  const QuasiMetricSpace X = space_from_graph(G);
  DiagonalQuotient Q;
  Q.degree = k;
  Q.paths = edge_paths(G, k);

  // Paths sharing everything but an interior vertex whose two neighbours lie
  // at distance 2 form one relation.
  std::map<EdgePath, std::vector<std::size_t>> relations;
  const ExtendedRational two(2);
  for (std::size_t i = 0; i < Q.paths.size(); ++i) {
    const EdgePath& p = Q.paths[i];
    for (std::size_t j = 1; j + 1 <= k; ++j) {
      if (X.d(p[j - 1], p[j + 1]) != two) continue;
      EdgePath key = p;
      key[j] = kHole;
      relations[key].push_back(i);
    }
  }
  Q.relations = SparseMatrix(Q.paths.size(), relations.size());
  std::vector<RatColumn> rat_relations;
  std::size_t col = 0;
  for (const auto& [key, members] : relations) {
    RatColumn rc;
    for (std::size_t i : members) {
      Q.relations.add(i, col, 1);
      rc.emplace_back(i, Rational(1));
    }
    rat_relations.push_back(std::move(rc));
    ++col;
  }
  auto inv = smith_invariants(Q.relations);
  Q.group = {Q.paths.size() - inv.rank, inv.torsion};
  auto pivots = rational_pivots(rat_relations, Q.paths.size());
  for (std::size_t i = 0; i < Q.paths.size(); ++i) {
    if (!pivots[i]) Q.representatives.push_back(Q.paths[i]);
  }
  return Q;
}

Report verify_diagonal_theorem(const Graph& G, std::size_t kmax) {
  Report report;
  MagnitudeCohomology ring(space_from_graph(G));
  std::vector<DiagonalQuotient> quotients;
  constexpr std::size_t kMaxPairs = 300;

  for (std::size_t k = 0; k <= kmax; ++k) {
    const std::string at = "k=" + std::to_string(k);
    quotients.push_back(diagonal_quotient(G, k));
    const auto& Q = quotients.back();
    const auto& blk = ring.compute(k, Rational(static_cast<long>(k)));
    if (!(Q.group == blk.group())) {
      report.fail(at + ": quotient " + Q.group.to_string() + " but MH^k_k = " +
                  blk.group().to_string());
    }
    if (blk.simplices->simplices() != Q.paths) {
      report.fail(at + ": edge paths differ from the diagonal simplices");
      continue;
    }
    for (std::size_t r = 0; r < Q.relations.cols(); ++r) {
      Cochain rel(blk.simplices);
      for (const auto& [i, v] : Q.relations.column(r)) rel.coords[i] = v;
      if (!ring.class_of(rel).is_zero()) {
        report.fail(at + ": relation " + std::to_string(r) + " is not zero in cohomology");
      }
    }
    // Concatenation against the cup product, over a deterministic sample.
    for (std::size_t j = 0; j <= k; ++j) {
      const auto& left = quotients[j].representatives;
      const auto& right = quotients[k - j].representatives;
      const std::size_t total = left.size() * right.size();
      if (total == 0) continue;
      const std::size_t stride = std::max<std::size_t>(1, total / kMaxPairs);
      const auto& lb = ring.block({j, Rational(static_cast<long>(j))});
      const auto& rb = ring.block({k - j, Rational(static_cast<long>(k - j))});
      for (std::size_t t = 0; t < total; t += stride) {
        const EdgePath& p = left[t / right.size()];
        const EdgePath& q = right[t % right.size()];
        auto lhs = ring.product(ring.class_of(dual_simplex(lb.simplices, p)),
                                ring.class_of(dual_simplex(rb.simplices, q)));
        RingClass rhs = ring.zero_class(lhs.bidegree);
        if (p.back() == q.front()) {
          EdgePath joined = p;
          joined.insert(joined.end(), q.begin() + 1, q.end());
          rhs = ring.class_of(dual_simplex(blk.simplices, joined));
        }
        if (!(lhs == rhs)) {
          report.fail(at + ": product of dual paths disagrees with concatenation at split " +
                      std::to_string(j));
          break;
        }
      }
    }
  }
  return report;
}

DiagonalityReport is_diagonal(const Graph& G, const Rational& lmax) {
  const QuasiMetricSpace X = space_from_graph(G);
  DiagonalityReport out;
  out.lmax = lmax;
  for (const auto& grade : realizable_grades(X, lmax)) {
    const auto top = static_cast<std::size_t>(mpz_class(grade.get_num() / grade.get_den()).get_ui());
    auto block = build_block(X, grade, top);
    for (std::size_t k = 0; k <= top; ++k) {
      auto h = homology(block, k);
      if (!h.torsion.empty()) out.torsion_free = false;
      if (h.is_zero() || Rational(static_cast<long>(k)) == grade) continue;
      out.diagonal = false;
      out.offending.push_back({{k, grade}, h});
    }
  }
  return out;
}

namespace {

// Alternating vertex sequences of K_{p,q} (vertices 0..p-1 on one side,
// p..p+q-1 on the other) and the two families of midpoint relations.
Integer bipartite_rank(std::size_t p, std::size_t q, std::size_t k) {
  const std::size_t n = p + q;
  auto side = [p](std::size_t v) { return v < p ? 0 : 1; };
  auto other_side = [&](std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < n; ++w) {
      if (side(w) != side(v)) out.push_back(w);
    }
    return out;
  };
  std::vector<std::vector<std::size_t>> seqs;
  std::vector<std::vector<std::size_t>> frontier;
  for (std::size_t v = 0; v < n; ++v) frontier.push_back({v});
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : frontier) {
      for (std::size_t w : other_side(s.back())) {
        auto t = s;
        t.push_back(w);
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  seqs = std::move(frontier);
  std::sort(seqs.begin(), seqs.end());
  auto index = [&](const std::vector<std::size_t>& s) {
    return static_cast<std::size_t>(std::lower_bound(seqs.begin(), seqs.end(), s) - seqs.begin());
  };
  std::vector<RatColumn> relations;
  for (const auto& s : seqs) {
    for (std::size_t j = 1; j + 1 <= k; ++j) {
      // One relation per context: take the member whose middle vertex is the
      // first one on its side.
      if (s[j - 1] == s[j + 1]) continue;
      const auto middles = other_side(s[j - 1]);
      if (s[j] != middles.front()) continue;
      RatColumn rel;
      for (std::size_t w : middles) {
        auto t = s;
        t[j] = w;
        rel.emplace_back(index(t), Rational(1));
      }
      std::sort(rel.begin(), rel.end());
      relations.push_back(std::move(rel));
    }
  }
  return Integer(static_cast<unsigned long>(seqs.size() - rational_rank(relations, seqs.size())));
}

}  // namespace

Integer oracle_rank(GraphFamily family, const std::vector<std::size_t>& params, std::size_t k) {
  switch (family) {
    case GraphFamily::tree: {
      if (params.size() != 1) throw Error("tree oracle takes the vertex count");
      const std::size_t n = params[0];
      if (k == 0) return Integer(static_cast<unsigned long>(n));
      return Integer(static_cast<unsigned long>(n == 0 ? 0 : 2 * (n - 1)));
    }
    case GraphFamily::complete: {
      if (params.size() != 1) throw Error("complete-graph oracle takes the vertex count");
      Integer r = static_cast<unsigned long>(params[0]);
      Integer base = static_cast<unsigned long>(params[0] == 0 ? 0 : params[0] - 1);
      for (std::size_t i = 0; i < k; ++i) r *= base;
      return r;
    }
    case GraphFamily::complete_bipartite:
      if (params.size() != 2) throw Error("bipartite oracle takes the two part sizes");
      return bipartite_rank(params[0], params[1], k);
  }
  throw Error("unknown graph family");
}

Report icosahedral_check(std::size_t kmax, const Rational& lmax) {
  Report report = verify_diagonal_theorem(icosahedral_graph(), kmax);
  auto diag = is_diagonal(icosahedral_graph(), lmax);
  if (diag.diagonal) {
    report.note("icosahedral graph: no off-diagonal homology up to l = " +
                rational_to_string(lmax) + " (diagonality beyond that is unverified)");
  } else {
    for (const auto& [b, g] : diag.offending) {
      report.note("icosahedral graph: off-diagonal MH at " + b.to_string() + " = " + g.to_string());
    }
  }
  return report;
}

}  // namespace maghom
