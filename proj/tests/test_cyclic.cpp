#include <doctest.h>

#include "maghom/cyclic.hpp"
#include "maghom/errors.hpp"
#include "maghom/homology.hpp"
#include "maghom/io.hpp"

using namespace maghom;

TEST_CASE("codes") {
  CHECK(code_of(5, {0}).empty());
  CHECK(code_of(5, {0, 1, 3}) == Code{1, 2});
  CHECK(code_of(5, {0, 4}) == Code{-1});
  CHECK_THROWS_AS(cycle_half(4), Error);
  CHECK_THROWS_AS(cycle_half(3), Error);
  CHECK(cycle_half(7) == 3);
}

TEST_CASE("admissibility") {
  const std::size_t m = 3;
  CHECK(is_admissible({1, 3, 1, -1, 1, 3}, m));
  CHECK(is_admissible({1, -1, 1, -1}, m));
  CHECK_FALSE(is_admissible({3, 1}, m));
  CHECK_FALSE(is_admissible({-1, -3, 1, 1, 3}, m));
  CHECK(is_admissible({}, m));
  CHECK(is_admissible({-1, -3, -1}, m));
  CHECK_FALSE(is_admissible({1, 2}, m));
  CHECK(piece_cuts({1, 3, 1, -1, 1, 3}, m) == std::vector<std::size_t>{0, 2, 3, 4, 6});
}

TEST_CASE("admissible simplex counts on C5") {
  CHECK(admissible_simplices(5, 1, 1).size() == 10);
  auto back = admissible_simplices(5, 2, 2);
  CHECK(back.size() == 10);
  for (const auto& s : back) CHECK(s.points[0] == s.points[2]);
  auto far = admissible_simplices(5, 2, 3);
  CHECK(far.size() == 10);
  for (const auto& s : far) CHECK(space_from_graph(cycle_graph(5)).d(s.points[0], s.points[2]) == 2);
}

TEST_CASE("monomials") {
  auto s = make_admissible(7, 0, {1, 3, 1, -1, 1, 3});
  auto w = monomial_of(7, s);
  REQUIRE(w.letters.size() == 4);
  CHECK(w.letters[0].kind == GeneratorKind::b);
  CHECK(w.letters[1].kind == GeneratorKind::a);
  CHECK(w.letters[2].kind == GeneratorKind::a);
  CHECK(w.letters[3].kind == GeneratorKind::b);
  CHECK(w.letters[0].from == s.points[0]);
  CHECK(w.letters[0].to == s.points[2]);
  CHECK(w.letters[3].to == s.points[6]);

  auto a = monomial_of(7, make_admissible(7, 2, {1}));
  REQUIRE(a.letters.size() == 1);
  CHECK(a.letters[0] == Generator{GeneratorKind::a, 2, 3});
  auto b = monomial_of(7, make_admissible(7, 2, {1, 3}));
  REQUIRE(b.letters.size() == 1);
  CHECK(b.letters[0] == Generator{GeneratorKind::b, 2, 6});
  CHECK(monomial_of(7, make_admissible(7, 4, {})).letters[0].kind == GeneratorKind::e);
}

TEST_CASE("word reduction") {
  const std::size_t n = 5;
  // a_{01} a_{12}: same direction, zero.
  CHECK_FALSE(reduce_word(n, {{{GeneratorKind::a, 0, 1}, {GeneratorKind::a, 1, 2}}}));
  // a_{01} a_{10} is the admissible (0,1,0).
  auto back = reduce_word(n, {{{GeneratorKind::a, 0, 1}, {GeneratorKind::a, 1, 0}}});
  REQUIRE(back);
  CHECK(back->points == Tuple{0, 1, 0});
  // Mismatched endpoints multiply to zero.
  CHECK_FALSE(reduce_word(n, {{{GeneratorKind::a, 0, 1}, {GeneratorKind::a, 2, 3}}}));
  // Round trip through monomials.
  for (const auto& s : admissible_simplices(n, 3, 4)) {
    auto r = reduce_word(n, monomial_of(n, s));
    REQUIRE(r);
    CHECK(r->points == s.points);
  }
}

TEST_CASE("basis and presentation on C5 and C7") {
  auto basis5 = verify_admissible_basis(5, 4);
  CHECK(basis5.passed);
  for (const auto& f : basis5.failures) MESSAGE(f);
  auto relations5 = verify_presentation(5, 4);
  CHECK(relations5.passed);
  for (const auto& f : relations5.failures) MESSAGE(f);
  CHECK(verify_admissible_basis(7, 3).passed);
  CHECK(verify_presentation(7, 3).passed);
  CHECK(verify_admissible_basis(9, 2).passed);
  CHECK(verify_presentation(9, 3).passed);
}

TEST_CASE("degree-two blocks of C5") {
  auto C5 = space_from_graph(cycle_graph(5));
  for (long l = 0; l <= 6; ++l) {
    auto g = homology(C5, 2, l);
    CHECK(g.rank == ((l == 2 || l == 3) ? 10u : 0u));
    CHECK(g.rank == admissible_simplices(5, 2, l).size());
  }
}
