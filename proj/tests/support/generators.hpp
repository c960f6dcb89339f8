#pragma once
// Seeded random inputs for property tests.

#include <algorithm>
#include <numeric>
#include <random>

#include "maghom/poset.hpp"
#include "maghom/space.hpp"

namespace maghom::testing {

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Connected undirected graph: a random spanning tree plus extra edges.
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t max_n = 7) {
  const std::size_t n = uniform(rng, 1, max_n);
  Graph g(n, false);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(order[i], order[uniform(rng, 0, i - 1)]);
  const std::size_t extra = n < 3 ? 0 : uniform(rng, 0, n);
  for (std::size_t e = 0; e < extra; ++e) {
    auto u = uniform(rng, 0, n - 1);
    auto v = uniform(rng, 0, n - 1);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

/// Strongly connected digraph: a random Hamiltonian cycle plus extra arcs.
inline Graph random_strong_digraph(std::mt19937_64& rng, std::size_t max_n = 6) {
  const std::size_t n = uniform(rng, 2, max_n);
  Graph g(n, true);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(order[i], order[(i + 1) % n]);
  const std::size_t extra = uniform(rng, 0, n);
  for (std::size_t e = 0; e < extra; ++e) {
    auto u = uniform(rng, 0, n - 1);
    auto v = uniform(rng, 0, n - 1);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

/// Quasi-metric with positive rational entries of denominator 1, 2 or 3,
/// closed under the triangle inequality. Some pairs may be at INF.
inline QuasiMetricSpace random_quasi_metric(std::mt19937_64& rng, std::size_t max_n = 5,
                                            bool allow_infinite = true) {
  const std::size_t n = uniform(rng, 1, max_n);
  DistanceMatrix d(n, std::vector<ExtendedRational>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      if (allow_infinite && uniform(rng, 0, 9) == 0) {
        d[x][y] = ExtendedRational::infinity();
        continue;
      }
      const long den = static_cast<long>(uniform(rng, 1, 3));
      const long num = static_cast<long>(uniform(rng, static_cast<std::size_t>(den),
                                                 static_cast<std::size_t>(3 * den)));
      d[x][y] = ExtendedRational(Integer(num), Integer(den));
    }
  }
  return QuasiMetricSpace(shortest_path_closure(std::move(d)));
}

/// Random partial order: each forward pair of a shuffled labelling is a
/// generating relation with probability 1/3.
inline FinitePoset random_poset(std::mt19937_64& rng, std::size_t max_n = 7) {
  const std::size_t n = uniform(rng, 1, max_n);
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (uniform(rng, 0, 2) == 0) rel.emplace_back(label[i], label[j]);
    }
  }
  return FinitePoset(n, rel);
}

/// The built-in graphs used by the acceptance criteria.
inline std::vector<std::string> builtin_names() {
  return {"k3", "k4", "p2", "p3", "p4", "p5", "c4", "c5", "c7", "k2_2", "k2_3", "petersen"};
}

}  // namespace maghom::testing
