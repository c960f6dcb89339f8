#include <doctest.h>

#include "maghom/chain_complex.hpp"
#include "maghom/errors.hpp"
#include "maghom/io.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace maghom;

TEST_CASE("simplex enumeration") {
  auto edge = space_from_graph(path_graph(2));
  auto b = simplex_basis(edge, 2, 2);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == Tuple{0, 1, 0});
  CHECK(b[1] == Tuple{1, 0, 1});
  CHECK(b.index_of({1, 0, 1}) == 1u);
  CHECK_FALSE(b.index_of({0, 0, 1}));

  CHECK(simplex_basis(space_from_graph(complete_graph(3)), 1, 1).size() == 6);
  CHECK(simplex_basis(space_from_graph(cycle_graph(5)), 2, 3).size() == 40);
}

TEST_CASE("boundary examples") {
  auto P3 = space_from_graph(path_graph(3));
  CHECK(boundary_matrix(P3, 1, 1).is_zero());
  CHECK(boundary_matrix(space_from_graph(path_graph(2)), 2, 2).is_zero());
  auto src = simplex_basis(P3, 2, 2);
  auto dst = simplex_basis(P3, 1, 2);
  auto d = boundary_matrix(P3, src, dst);
  CHECK(d.at(*dst.index_of({0, 2}), *src.index_of({0, 1, 2})) == -1);
  CHECK(d.at(*dst.index_of({2, 0}), *src.index_of({2, 1, 0})) == -1);
  // (0,1,0) loses its middle point to a degenerate tuple: no entry.
  CHECK(d.column(*src.index_of({0, 1, 0})).empty());
}

TEST_CASE("pseudo spaces skip degenerate faces") {
  // a and b at distance 0 both ways: (a,c,b) would drop to (a,b), which has length 0.
  DistanceMatrix m = {{0, 0, 1}, {0, 0, 1}, {1, 1, 0}};
  QuasiMetricSpace X(m, true);
  auto b2 = simplex_basis(X, 2, 2);
  auto b1 = simplex_basis(X, 1, 2);
  auto d = boundary_matrix(X, b2, b1);
  auto b3 = simplex_basis(X, 3, 2);
  CHECK((d * boundary_matrix(X, b3, b2)).is_zero());
}

TEST_CASE("induced chain maps") {
  auto P3 = space_from_graph(path_graph(3));
  auto id = induced_chain_map(P3, P3, {0, 1, 2}, 2, 2);
  CHECK(id.to_dense().is_identity());
  CHECK(induced_chain_map(P3, P3, {1, 1, 1}, 1, 1).is_zero());
  auto P2 = space_from_graph(path_graph(2));
  auto inc = induced_chain_map(P2, P3, {0, 1}, 1, 1);
  CHECK(inc.rows() == 4);
  CHECK(inc.cols() == 2);
  CHECK(inc.nonzeros() == 2);
  // Collapsing an edge of K2 onto a point would increase nothing but
  // stretching does: P2 -> P3 sending 0,1 to the ends is not 1-Lipschitz.
  CHECK_THROWS_AS(induced_chain_map(P2, P3, {0, 2}, 1, 1), NotNonIncreasing);
}

TEST_CASE("realizable grades") {
  auto C5 = space_from_graph(cycle_graph(5));
  CHECK(realizable_grades(C5, 3) == std::vector<Rational>{0, 1, 2, 3});
  DistanceMatrix m = {{0, 1}, {ExtendedRational(Integer(3), Integer(2)), 0}};
  auto grades = realizable_grades(QuasiMetricSpace(m), 3);
  CHECK(grades == std::vector<Rational>{0, 1, Rational(3, 2), 2, Rational(5, 2), 3});
  CHECK(realizable_grades(space_from_graph(path_graph(1)), 3) == std::vector<Rational>{0});
}

TEST_CASE("property: boundary squares to zero and matches brute force") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    auto X = trial % 2 ? testing::random_quasi_metric(rng, 4)
                       : space_from_graph(testing::random_connected_graph(rng, 5));
    for (const auto& l : realizable_grades(X, 3)) {
      auto block = build_block(X, l, 3);
      for (std::size_t k = 0; k <= 3; ++k) {
        CHECK(block.bases[k].size() == testing::brute_tuples(X, k, l).size());
        if (k >= 1) CHECK((block.boundaries[k] * block.boundaries[k + 1]).is_zero());
      }
    }
  }
}

TEST_CASE("property: induced maps commute with the boundary") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto G = testing::random_connected_graph(rng, 5);
    auto X = space_from_graph(G);
    auto Y = X;
    std::vector<std::size_t> f(X.size());
    for (std::size_t v = 0; v < X.size(); ++v) f[v] = v;
    for (const auto& l : realizable_grades(X, 3)) {
      for (std::size_t k = 1; k <= 3; ++k) {
        auto up = induced_chain_map(X, Y, f, k, l);
        auto down = induced_chain_map(X, Y, f, k - 1, l);
        CHECK(boundary_matrix(Y, k, l) * up == down * boundary_matrix(X, k, l));
      }
    }
    // Constant maps collapse everything of positive grade.
    std::vector<std::size_t> c(X.size(), 0);
    for (std::size_t k = 1; k <= 2; ++k) {
      auto up = induced_chain_map(X, Y, c, k, 1);
      auto down = induced_chain_map(X, Y, c, k - 1, 1);
      CHECK(boundary_matrix(Y, k, 1) * up == down * boundary_matrix(X, k, 1));
    }
  }
}

TEST_CASE("property: retraction of a path onto a shorter path is a chain map") {
  auto P5 = space_from_graph(path_graph(5));
  auto P3 = space_from_graph(path_graph(3));
  std::vector<std::size_t> fold = {0, 1, 2, 1, 0};
  for (const auto& l : realizable_grades(P5, 4)) {
    for (std::size_t k = 1; k <= 4; ++k) {
      auto up = induced_chain_map(P5, P3, fold, k, l);
      auto down = induced_chain_map(P5, P3, fold, k - 1, l);
      CHECK(boundary_matrix(P3, k, l) * up == down * boundary_matrix(P5, k, l));
    }
  }
}
