#include <doctest.h>

#include "maghom/io.hpp"
#include "maghom/series.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace maghom;

namespace {
GradedSeries series(const Rational& lmax, std::vector<std::pair<Rational, Rational>> terms) {
  GradedSeries s(lmax);
  for (const auto& [g, c] : terms) s.add(g, c);
  return s;
}
}  // namespace

TEST_CASE("series arithmetic and printing") {
  auto s = series(3, {{0, 2}, {1, -2}, {Rational(3, 2), 1}, {4, 7}});
  CHECK(s.to_string() == "2 - 2q + q^(3/2)");
  CHECK(s.coefficient(4) == 0);
  CHECK((s + -s).terms().empty());
  CHECK((s + -s).to_string() == "0");
  auto one_plus_q = series(3, {{0, 1}, {1, 1}});
  auto inv = series(3, {{0, 1}, {1, -1}, {2, 1}, {3, -1}});
  CHECK(one_plus_q * inv == series(3, {{0, 1}}));
  CHECK(s.to_json() == R"([["0","2"],["1","-2"],["3/2","1"]])");
}

TEST_CASE("known series") {
  auto point = space_from_graph(path_graph(1));
  CHECK(euler_series(point, 5) == series(5, {{0, 1}}));
  CHECK(inversion_series(point, 5) == series(5, {{0, 1}}));

  auto edge = space_from_graph(path_graph(2));
  auto alt = series(5, {{0, 2}, {1, -2}, {2, 2}, {3, -2}, {4, 2}, {5, -2}});
  CHECK(euler_series(edge, 5) == alt);
  CHECK(inversion_series(edge, 5) == alt);

  for (long n = 2; n <= 5; ++n) {
    // n / (1 + (n-1) q)
    GradedSeries expected(5);
    Rational c = n;
    for (long l = 0; l <= 5; ++l) {
      expected.add(l, c);
      c *= -(n - 1);
    }
    auto K = space_from_graph(complete_graph(static_cast<std::size_t>(n)));
    CHECK(inversion_series(K, 5) == expected);
    if (n <= 4) CHECK(euler_series(K, 5) == expected);
  }
}

TEST_CASE("categorification on named and random spaces") {
  for (const auto& name : {"k3", "p4", "c4", "c5", "dc3", "k2_3"}) {
    CAPTURE(name);
    CHECK(categorification_check(space_from_graph(named_graph(name)), 5).passed);
  }
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    auto X = testing::random_quasi_metric(rng, 4);
    CHECK(categorification_check(X, 3).passed);
  }
}

TEST_CASE("euler series agrees with brute-force Betti numbers") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 6; ++trial) {
    auto X = testing::random_quasi_metric(rng, 3);
    auto e = euler_series(X, 2);
    for (const auto& l : realizable_grades(X, 2)) {
      Rational total = 0;
      for (std::size_t k = 0; k <= 8; ++k) {
        long b = static_cast<long>(testing::brute_betti(X, k, l));
        total += (k % 2 ? -b : b);
      }
      CHECK(e.coefficient(l) == total);
    }
  }
}
