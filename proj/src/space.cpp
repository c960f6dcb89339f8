#include "maghom/space.hpp"

#include <algorithm>
#include <string>

#include "maghom/errors.hpp"

namespace maghom {

Graph::Graph(std::size_t n, bool directed) : n_(n), directed_(directed) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) {
    throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  if (u == v) throw Error("loop at vertex " + std::to_string(u));
  if (!directed_ && v < u) std::swap(u, v);
  edges_.emplace(u, v);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (!directed_ && v < u) std::swap(u, v);
  return edges_.count({u, v}) != 0;
}

std::vector<std::size_t> Graph::neighbours(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n_; ++v) {
    if (v != u && has_edge(u, v)) out.push_back(v);
  }
  return out;
}

QuasiMetricSpace::QuasiMetricSpace(DistanceMatrix d, bool allow_pseudo) : d_(std::move(d)) {
  const std::size_t n = d_.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (d_[x].size() != n) throw Error("distance matrix is not square");
    if (!d_[x][x].is_zero()) {
      throw Error("d(" + std::to_string(x) + "," + std::to_string(x) + ") must be 0");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && d_[x][y].is_zero()) {
        if (!allow_pseudo) throw ZeroDistance(x, y);
        positive_min_ = false;
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (d_[x][z] > d_[x][y] + d_[y][z]) {
          throw Error("triangle inequality fails at (" + std::to_string(x) + "," +
                      std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
}

bool QuasiMetricSpace::is_symmetric() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = x + 1; y < size(); ++y) {
      if (d_[x][y] != d_[y][x]) return false;
    }
  }
  return true;
}

DistanceMatrix shortest_path_closure(DistanceMatrix d) {
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x) d[x][x] = ExtendedRational(0);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t x = 0; x < n; ++x) {
      if (d[x][m].is_infinite()) continue;
      for (std::size_t y = 0; y < n; ++y) {
        auto via = d[x][m] + d[m][y];
        if (via < d[x][y]) d[x][y] = via;
      }
    }
  }
  return d;
}

QuasiMetricSpace space_from_graph(const Graph& g) {
  const std::size_t n = g.size();
  DistanceMatrix d(n, std::vector<ExtendedRational>(n, ExtendedRational::infinity()));
  for (const auto& [u, v] : g.edges()) {
    d[u][v] = ExtendedRational(1);
    if (!g.directed()) d[v][u] = ExtendedRational(1);
  }
  return QuasiMetricSpace(shortest_path_closure(std::move(d)));
}

bool is_adjacent(const QuasiMetricSpace& X, std::size_t x, std::size_t y) {
  const auto& dxy = X.d(x, y);
  if (dxy.is_zero() || dxy.is_infinite()) return false;
  for (std::size_t a = 0; a < X.size(); ++a) {
    if (a == x || a == y) continue;
    if (X.d(x, a) + X.d(a, y) == dxy) return false;
  }
  return true;
}

std::vector<AdjacentPair> adjacent_pairs(const QuasiMetricSpace& X) {
  std::vector<AdjacentPair> out;
  for (std::size_t x = 0; x < X.size(); ++x) {
    for (std::size_t y = 0; y < X.size(); ++y) {
      if (x != y && is_adjacent(X, x, y)) out.push_back({x, y, X.d(x, y)});
    }
  }
  return out;
}

namespace {

using Signature = std::pair<std::vector<ExtendedRational>, std::vector<ExtendedRational>>;

Signature signature(const QuasiMetricSpace& X, std::size_t x) {
  Signature s;
  for (std::size_t y = 0; y < X.size(); ++y) {
    s.first.push_back(X.d(x, y));
    s.second.push_back(X.d(y, x));
  }
  std::sort(s.first.begin(), s.first.end());
  std::sort(s.second.begin(), s.second.end());
  return s;
}

bool extend(const QuasiMetricSpace& X, const QuasiMetricSpace& Y,
            const std::vector<std::vector<std::size_t>>& candidates, std::size_t next,
            std::vector<std::size_t>& image, std::vector<bool>& used) {
  if (next == X.size()) return true;
  for (std::size_t y : candidates[next]) {
    if (used[y]) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < next && ok; ++prev) {
      ok = X.d(prev, next) == Y.d(image[prev], y) && X.d(next, prev) == Y.d(y, image[prev]);
    }
    if (!ok) continue;
    image[next] = y;
    used[y] = true;
    if (extend(X, Y, candidates, next + 1, image, used)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isometry(const QuasiMetricSpace& X,
                                                      const QuasiMetricSpace& Y) {
  if (X.size() != Y.size()) return std::nullopt;
  const std::size_t n = X.size();
  std::vector<Signature> sy(n);
  for (std::size_t y = 0; y < n; ++y) sy[y] = signature(Y, y);
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto sx = signature(X, x);
    for (std::size_t y = 0; y < n; ++y) {
      if (sy[y] == sx) candidates[x].push_back(y);
    }
    if (candidates[x].empty()) return std::nullopt;
  }
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  if (!extend(X, Y, candidates, 0, image, used)) return std::nullopt;
  return image;
}

bool is_isometric(const QuasiMetricSpace& X, const QuasiMetricSpace& Y) {
  return find_isometry(X, Y).has_value();
}

void require_positive_min(const QuasiMetricSpace& X) {
  for (std::size_t x = 0; x < X.size(); ++x) {
    for (std::size_t y = 0; y < X.size(); ++y) {
      if (x != y && X.d(x, y).is_zero()) throw ZeroDistance(x, y);
    }
  }
}

ExtendedRational min_positive_distance(const QuasiMetricSpace& X) {
  if (X.size() < 2) throw Error("min_positive_distance needs at least two points");
  require_positive_min(X);
  auto best = ExtendedRational::infinity();
  for (std::size_t x = 0; x < X.size(); ++x) {
    for (std::size_t y = 0; y < X.size(); ++y) {
      if (x != y && X.d(x, y) < best) best = X.d(x, y);
    }
  }
  return best;
}

Rational max_finite_distance(const QuasiMetricSpace& X) {
  Rational best = 0;
  for (std::size_t x = 0; x < X.size(); ++x) {
    for (std::size_t y = 0; y < X.size(); ++y) {
      const auto& dxy = X.d(x, y);
      if (dxy.is_finite() && dxy.value() > best) best = dxy.value();
    }
  }
  return best;
}

}  // namespace maghom
