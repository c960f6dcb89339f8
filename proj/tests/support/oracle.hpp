#pragma once
// Brute-force reference computations that share no code with the library's
// chain complexes or Smith normal form: tuples are enumerated directly and
// ranks are taken by rational Gaussian elimination.

#include <functional>
#include <map>

#include "maghom/space.hpp"

namespace maghom::testing {

using RationalMatrix = std::vector<std::vector<Rational>>;

inline std::size_t rational_rank(RationalMatrix m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Every tuple of k+1 points with consecutive entries distinct and total
/// length exactly `grade`, found by exhaustive recursion.
inline std::vector<std::vector<std::size_t>> brute_tuples(const QuasiMetricSpace& X, std::size_t k,
                                                          const Rational& grade) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> t;
  std::function<void(Rational)> grow = [&](Rational used) {
    if (t.size() == k + 1) {
      if (used == grade) out.push_back(t);
      return;
    }
    for (std::size_t y = 0; y < X.size(); ++y) {
      if (!t.empty()) {
        if (t.back() == y) continue;
        const auto& step = X.d(t.back(), y);
        if (step.is_infinite() || used + step.value() > grade) continue;
        t.push_back(y);
        grow(used + step.value());
      } else {
        t.push_back(y);
        grow(used);
      }
      t.pop_back();
    }
  };
  grow(Rational(0));
  return out;
}

/// Rational rank of the boundary C_k -> C_{k-1} at one grade, with faces
/// built from the definition.
inline std::size_t brute_boundary_rank(const QuasiMetricSpace& X, std::size_t k,
                                       const Rational& grade) {
  if (k == 0) return 0;
  auto src = brute_tuples(X, k, grade);
  auto dst = brute_tuples(X, k - 1, grade);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
  RationalMatrix m(src.size(), std::vector<Rational>(dst.size()));
  for (std::size_t s = 0; s < src.size(); ++s) {
    const auto& t = src[s];
    for (std::size_t i = 1; i < k; ++i) {
      if (t[i - 1] == t[i + 1]) continue;
      std::vector<std::size_t> face = t;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      auto it = index.find(face);
      if (it == index.end()) continue;  // length dropped
      m[s][it->second] += (i % 2 == 0) ? 1 : -1;
    }
  }
  return rational_rank(std::move(m));
}

/// Rational Betti number of MH_{k,grade}.
inline std::size_t brute_betti(const QuasiMetricSpace& X, std::size_t k, const Rational& grade) {
  const std::size_t dim = brute_tuples(X, k, grade).size();
  return dim - brute_boundary_rank(X, k, grade) - brute_boundary_rank(X, k + 1, grade);
}

/// Rational Betti numbers of the order complex of a strict relation, with
/// the full simplicial boundary. Chains are enumerated by recursion here.
inline std::vector<std::size_t> brute_order_betti(const std::vector<std::vector<bool>>& less,
                                                  std::size_t kmax) {
  const std::size_t n = less.size();
  std::vector<std::vector<std::vector<std::size_t>>> chains(kmax + 2);
  std::vector<std::size_t> c;
  std::function<void()> grow = [&]() {
    if (!c.empty()) chains[c.size() - 1].push_back(c);
    if (c.size() == kmax + 2) return;
    for (std::size_t y = 0; y < n; ++y) {
      if (!c.empty() && !less[c.back()][y]) continue;
      c.push_back(y);
      grow();
      c.pop_back();
    }
  };
  grow();
  auto rank_of = [&](std::size_t k) -> std::size_t {
    if (k == 0 || k > kmax + 1) return 0;
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < chains[k - 1].size(); ++i) index[chains[k - 1][i]] = i;
    RationalMatrix m(chains[k].size(), std::vector<Rational>(chains[k - 1].size()));
    for (std::size_t s = 0; s < chains[k].size(); ++s) {
      for (std::size_t i = 0; i <= k; ++i) {
        auto face = chains[k][s];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        m[s][index.at(face)] += (i % 2 == 0) ? 1 : -1;
      }
    }
    return rational_rank(std::move(m));
  };
  std::vector<std::size_t> betti;
  for (std::size_t k = 0; k <= kmax; ++k) {
    betti.push_back(chains[k].size() - rank_of(k) - rank_of(k + 1));
  }
  return betti;
}

}  // namespace maghom::testing
