#include <doctest.h>

#include "maghom/errors.hpp"
#include "maghom/io.hpp"
#include "maghom/ring.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace maghom;

namespace {

Cochain random_cochain(std::mt19937_64& rng, std::shared_ptr<const SimplexBasis> basis) {
  Cochain c(std::move(basis));
  for (auto& v : c.coords) v = static_cast<long>(testing::uniform(rng, 0, 4)) - 2;
  return c;
}

IntVector sum(const IntVector& a, const IntVector& b, long sign = 1) {
  IntVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += sign * b[i];
  return out;
}

/// Every block with k <= kmax and grade <= lmax.
void compute_all(MagnitudeCohomology& R, std::size_t kmax, const Rational& lmax) {
  for (const auto& l : realizable_grades(R.space(), lmax)) {
    for (std::size_t k = 0; k <= kmax; ++k) R.compute(k, l);
  }
}

RingClass edge_class(MagnitudeCohomology& R, std::size_t x, std::size_t y) {
  const auto l = R.space().d(x, y).value();
  const auto& blk = R.compute(1, l);
  return R.class_of(dual_simplex(blk.simplices, {x, y}));
}

RingClass point_class(MagnitudeCohomology& R, std::size_t x) {
  const auto& blk = R.compute(0, 0);
  return R.class_of(dual_simplex(blk.simplices, {x}));
}

}  // namespace

TEST_CASE("unit cochain") {
  CHECK(unit_cochain(space_from_graph(path_graph(1))).coords == IntVector{1});
  CHECK(unit_cochain(space_from_graph(complete_graph(3))).coords == IntVector{1, 1, 1});
  CHECK(unit_cochain(QuasiMetricSpace(DistanceMatrix{})).coords.empty());
}

TEST_CASE("dual simplices concatenate") {
  auto X = space_from_graph(path_graph(2));
  auto ab = dual_simplex(shared_basis(X, 1, 1), {0, 1});
  auto ba = dual_simplex(shared_basis(X, 1, 1), {1, 0});
  auto prod = cup_cochain(X, ab, ba);
  CHECK(prod.evaluate({0, 1, 0}) == 1);
  CHECK(prod.evaluate({1, 0, 1}) == 0);
  CHECK(is_zero(cup_cochain(X, ab, ab).coords));
  auto u = unit_cochain(X);
  CHECK(cup_cochain(X, u, ab).coords == ab.coords);
  CHECK(cup_cochain(X, ab, u).coords == ab.coords);
  CHECK_THROWS_AS(cup_cochain(ab, ba, shared_basis(X, 1, 2)), BidegreeMismatch);
}

TEST_CASE("point classes are orthogonal idempotents") {
  MagnitudeCohomology R(space_from_graph(cycle_graph(4)));
  R.compute(0, 0);
  for (std::size_t x = 0; x < 4; ++x) {
    auto ex = point_class(R, x);
    CHECK(R.product(ex, ex) == ex);
    for (std::size_t y = 0; y < 4; ++y) {
      if (y != x) CHECK(R.product(ex, point_class(R, y)).is_zero());
    }
  }
  HomologyClass pt = R.simplex_class({2});
  CHECK(R.kronecker(R.unit(), pt) == 1);
}

TEST_CASE("tree products vanish through a midpoint") {
  MagnitudeCohomology R(space_from_graph(path_graph(3)));
  R.compute(2, 2);
  auto ab = edge_class(R, 0, 1);
  auto bc = edge_class(R, 1, 2);
  CHECK(R.product(ab, bc).is_zero());
  CHECK_FALSE(R.product(ab, edge_class(R, 1, 0)).is_zero());
}

TEST_CASE("missing blocks and mismatched pairings are errors") {
  MagnitudeCohomology R(space_from_graph(path_graph(2)));
  R.compute(1, 1);
  auto ab = edge_class(R, 0, 1);
  CHECK_THROWS_AS(R.product(ab, ab), MissingBlock);
  R.compute(0, 0);
  CHECK_THROWS_AS(R.kronecker(ab, R.simplex_class({0})), BidegreeMismatch);
  CHECK_THROWS_AS(R.block({3, 3}), MissingBlock);
}

TEST_CASE("non-commutativity witness on every built-in graph") {
  for (const auto& name : testing::builtin_names()) {
    CAPTURE(name);
    const Graph G = named_graph(name);
    MagnitudeCohomology R(space_from_graph(G));
    const auto [x, y] = *G.edges().begin();
    R.compute(2, 2);
    auto xy = edge_class(R, x, y);
    auto yx = edge_class(R, y, x);
    auto cycle = R.simplex_class({x, y, x});
    CHECK(R.kronecker(R.product(xy, yx), cycle) == 1);
    CHECK(R.kronecker(R.product(yx, xy), cycle) == 0);
  }
}

TEST_CASE("property: Leibniz rule, associativity and unitality on cochains") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto X = trial % 2 ? testing::random_quasi_metric(rng, 4, false)
                       : space_from_graph(testing::random_connected_graph(rng, 5));
    auto grades = realizable_grades(X, 2);
    auto pick = [&] { return grades[testing::uniform(rng, 0, grades.size() - 1)]; };
    for (int rep = 0; rep < 4; ++rep) {
      const std::size_t k1 = testing::uniform(rng, 0, 2), k2 = testing::uniform(rng, 0, 2),
                        k3 = testing::uniform(rng, 0, 1);
      auto phi = random_cochain(rng, shared_basis(X, k1, pick()));
      auto psi = random_cochain(rng, shared_basis(X, k2, pick()));
      auto chi = random_cochain(rng, shared_basis(X, k3, pick()));

      auto lhs = coboundary(X, cup_cochain(X, phi, psi));
      auto a = cup_cochain(X, coboundary(X, phi), psi);
      auto b = cup_cochain(X, phi, coboundary(X, psi));
      CHECK(lhs.coords == sum(a.coords, b.coords, k1 % 2 ? -1 : 1));

      CHECK(cup_cochain(X, cup_cochain(X, phi, psi), chi).coords ==
            cup_cochain(X, phi, cup_cochain(X, psi, chi)).coords);
      auto u = unit_cochain(X);
      CHECK(cup_cochain(X, u, phi).coords == phi.coords);
      CHECK(cup_cochain(X, phi, u).coords == phi.coords);
    }
  }
}

TEST_CASE("property: class products are well defined and bigraded") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    auto X = trial % 2 ? space_from_graph(testing::random_strong_digraph(rng, 4))
                       : space_from_graph(testing::random_connected_graph(rng, 5));
    MagnitudeCohomology R(X);
    compute_all(R, 2, 2);
    std::vector<RingClass> classes;
    for (const auto& [b, blk] : R.blocks()) {
      if (b.k > 1 || b.grade > 1) continue;
      for (std::size_t i = 0; i < blk.basis.class_dimension(); ++i) classes.push_back(R.basis_class(b, i));
    }
    for (const auto& alpha : classes) {
      for (const auto& beta : classes) {
        auto target = alpha.bidegree + beta.bidegree;
        if (!R.has_block(target)) continue;
        auto prod = R.product(alpha, beta);
        CHECK(prod.bidegree == target);
        // Perturb both representatives by coboundaries.
        auto rep_a = R.representative(alpha);
        auto rep_b = R.representative(beta);
        if (alpha.bidegree.k > 0) {
          auto eta = random_cochain(rng, shared_basis(X, alpha.bidegree.k - 1, alpha.bidegree.grade));
          rep_a.coords = sum(rep_a.coords, coboundary(X, eta).coords);
        }
        if (beta.bidegree.k > 0) {
          auto eta = random_cochain(rng, shared_basis(X, beta.bidegree.k - 1, beta.bidegree.grade));
          rep_b.coords = sum(rep_b.coords, coboundary(X, eta).coords);
        }
        auto moved = cup_cochain(rep_a, rep_b, R.block(target).simplices);
        CHECK(R.class_of(moved) == prod);
        CHECK(R.product(R.unit(), alpha) == alpha);
        CHECK(R.product(alpha, R.unit()) == alpha);
      }
    }
  }
}

TEST_CASE("property: degree-one cohomology is spanned by adjacent pairs") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto X = trial % 2 ? testing::random_quasi_metric(rng, 5) : space_from_graph(testing::random_strong_digraph(rng, 5));
    MagnitudeCohomology R(X);
    auto pairs = adjacent_pairs(X);
    for (const auto& l : realizable_grades(X, max_finite_distance(X))) {
      const auto& blk = R.compute(1, l);
      std::size_t expected = 0;
      for (const auto& p : pairs) {
        if (p.length != l) continue;
        ++expected;
        CHECK(blk.basis.is_cocycle(dual_simplex(blk.simplices, {p.x, p.y}).coords));
      }
      CHECK(blk.group() == AbelianGroup{expected, {}});
      CHECK(R.compute(0, l).group() == AbelianGroup{l == 0 ? X.size() : 0, {}});
    }
  }
}

TEST_CASE("property: point idempotents act on edge classes pointwise") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    auto X = testing::random_quasi_metric(rng, 4, false);
    MagnitudeCohomology R(X);
    R.compute(0, 0);
    for (const auto& p : adjacent_pairs(X)) {
      auto a = edge_class(R, p.x, p.y);
      auto cycle = R.simplex_class({p.x, p.y});
      for (std::size_t s = 0; s < X.size(); ++s) {
        for (std::size_t t = 0; t < X.size(); ++t) {
          auto sandwiched = R.product(R.product(point_class(R, s), a), point_class(R, t));
          CHECK(R.kronecker(sandwiched, cycle) == ((s == p.x && t == p.y) ? 1 : 0));
        }
      }
    }
  }
}
