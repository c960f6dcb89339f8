#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "maghom/rational.hpp"

namespace maghom {

using DistanceMatrix = std::vector<std::vector<ExtendedRational>>;

/// Simple graph on vertices 0..n-1, directed or undirected, without loops.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, bool directed);

  /// Adds u-v (or u->v when directed). Throws on loops or out-of-range indices.
  void add_edge(std::size_t u, std::size_t v);

  std::size_t size() const { return n_; }
  bool directed() const { return directed_; }
  bool has_edge(std::size_t u, std::size_t v) const;
  /// Stored edges; undirected edges appear once with u < v.
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  /// Out-neighbours of u in increasing order.
  std::vector<std::size_t> neighbours(std::size_t u) const;

 private:
  std::size_t n_ = 0;
  bool directed_ = false;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

/// Finite extended quasi-metric space with an exact distance matrix.
///
/// Symmetry is not required. Distinct points at distance zero are only
/// allowed when the space is constructed with `allow_pseudo`.
class QuasiMetricSpace {
 public:
  QuasiMetricSpace() = default;
  explicit QuasiMetricSpace(DistanceMatrix d, bool allow_pseudo = false);

  std::size_t size() const { return d_.size(); }
  const ExtendedRational& d(std::size_t x, std::size_t y) const { return d_[x][y]; }
  const DistanceMatrix& matrix() const { return d_; }
  /// True when every pair of distinct points is at positive distance.
  bool positive_min() const { return positive_min_; }
  bool is_symmetric() const;

  friend bool operator==(const QuasiMetricSpace&, const QuasiMetricSpace&) = default;

 private:
  DistanceMatrix d_;
  bool positive_min_ = true;
};

struct AdjacentPair {
  std::size_t x;
  std::size_t y;
  ExtendedRational length;

  friend bool operator==(const AdjacentPair&, const AdjacentPair&) = default;
};

/// Shortest-path metric of a graph; unreachable pairs are at INF.
QuasiMetricSpace space_from_graph(const Graph& g);

/// Ordered pairs (x,y) with d(x,y) nonzero and finite and no third point a
/// with d(x,y) = d(x,a) + d(a,y). Sorted by (x, y).
std::vector<AdjacentPair> adjacent_pairs(const QuasiMetricSpace& X);
bool is_adjacent(const QuasiMetricSpace& X, std::size_t x, std::size_t y);

/// True iff some bijection of points preserves every distance exactly.
bool is_isometric(const QuasiMetricSpace& X, const QuasiMetricSpace& Y);
/// The isometry found by `is_isometric`, as the image of each point of X.
std::optional<std::vector<std::size_t>> find_isometry(const QuasiMetricSpace& X,
                                                      const QuasiMetricSpace& Y);

/// Minimum distance between distinct points (INF if all are INF).
/// Throws ZeroDistance on a pseudo space; requires at least two points.
ExtendedRational min_positive_distance(const QuasiMetricSpace& X);

/// Largest finite distance (zero for spaces with fewer than two points).
Rational max_finite_distance(const QuasiMetricSpace& X);

/// Throws ZeroDistance if some distinct pair is at distance zero.
void require_positive_min(const QuasiMetricSpace& X);

/// Closes a matrix under the triangle inequality (Floyd–Warshall) and sets
/// the diagonal to zero.
DistanceMatrix shortest_path_closure(DistanceMatrix d);

}  // namespace maghom
