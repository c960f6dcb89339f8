// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "maghom/cyclic.hpp"
#include "maghom/errors.hpp"
#include "maghom/graph_algebra.hpp"
#include "maghom/io.hpp"
#include "maghom/poset.hpp"
#include "maghom/recovery.hpp"
#include "maghom/series.hpp"
#include "support/generators.hpp"
#include "support/trees.hpp"

#ifndef MAGHOM_CLI
#error "MAGHOM_CLI must name the command-line binary"
#endif

using namespace maghom;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

struct Named {
  std::string name;
  QuasiMetricSpace space;
};

std::vector<Named> builtins() {
  std::vector<Named> out;
  for (const auto& name : testing::builtin_names()) out.push_back({name, space_from_graph(named_graph(name))});
  return out;
}

/// The random spaces shared by criteria 2, 6, 7 and 8.
struct RandomSpaces {
  std::vector<QuasiMetricSpace> graphs, digraphs, metrics;
  std::vector<std::uint64_t> seeds;

  std::vector<const QuasiMetricSpace*> all() const {
    std::vector<const QuasiMetricSpace*> out;
    for (const auto* group : {&graphs, &digraphs, &metrics}) {
      for (const auto& X : *group) out.push_back(&X);
    }
    return out;
  }
};

RandomSpaces make_random_spaces() {
  std::mt19937_64 rng(20240611);
  RandomSpaces r;
  for (int i = 0; i < 50; ++i) r.graphs.push_back(space_from_graph(testing::random_connected_graph(rng, 7)));
  for (int i = 0; i < 20; ++i) r.digraphs.push_back(space_from_graph(testing::random_strong_digraph(rng, 6)));
  for (int i = 0; i < 20; ++i) r.metrics.push_back(testing::random_quasi_metric(rng, 5));
  for (int i = 0; i < 90; ++i) r.seeds.push_back(rng());
  return r;
}

Outcome chain_axioms() {
  Outcome o;
  std::size_t blocks = 0;
  for (const auto& [name, X] : builtins()) {
    for (const auto& l : realizable_grades(X, 5)) {
      const auto kmax = static_cast<std::size_t>(l.get_num().get_ui());
      auto block = build_block(X, l, kmax);
      for (std::size_t k = 1; k <= kmax; ++k) {
        ++blocks;
        o.require((block.boundaries[k] * block.boundaries[k + 1]).is_zero(),
                  name + ": boundary squared nonzero at k=" + std::to_string(k));
        auto d0 = coboundary_matrix(X, k - 1, l);
        auto d1 = coboundary_matrix(X, k, l);
        o.require((d1 * d0).is_zero(), name + ": coboundary squared nonzero at k=" + std::to_string(k));
      }
    }
  }
  o.detail = std::to_string(blocks) + " blocks";
  return o;
}

Outcome low_degrees(const RandomSpaces& random) {
  Outcome o;
  std::vector<const QuasiMetricSpace*> spaces;
  auto named = builtins();
  for (const auto& n : named) spaces.push_back(&n.space);
  for (const auto& X : random.metrics) spaces.push_back(&X);
  for (const auto* X : spaces) {
    auto pairs = adjacent_pairs(*X);
    for (const auto& l : realizable_grades(*X, max_finite_distance(*X))) {
      auto block = build_block(*X, l, 1);
      auto h0 = cohomology_group(block, 0);
      auto h1 = cohomology_group(block, 1);
      std::size_t adj = 0;
      for (const auto& p : pairs) adj += p.length == l;
      o.require(h0 == AbelianGroup{l == 0 ? X->size() : 0, {}}, "MH^0 wrong at grade " + rational_to_string(l));
      o.require(h1 == AbelianGroup{adj, {}}, "MH^1 wrong at grade " + rational_to_string(l));
    }
  }
  o.detail = std::to_string(spaces.size()) + " spaces";
  return o;
}

Outcome diagonal_families() {
  Outcome o;
  struct Case {
    std::string name;
    Graph g;
    GraphFamily family;
    std::vector<std::size_t> params;
  };
  std::vector<Case> cases;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& T : testing::unlabelled_trees(n)) cases.push_back({"tree" + std::to_string(n), T, GraphFamily::tree, {n}});
  }
  for (std::size_t n = 1; n <= 4; ++n) cases.push_back({"k" + std::to_string(n), complete_graph(n), GraphFamily::complete, {n}});
  cases.push_back({"k2_2", complete_bipartite(2, 2), GraphFamily::complete_bipartite, {2, 2}});
  cases.push_back({"k2_3", complete_bipartite(2, 3), GraphFamily::complete_bipartite, {2, 3}});
  for (const auto& c : cases) {
    auto diag = is_diagonal(c.g, 5);
    o.require(diag.diagonal && diag.torsion_free, c.name + ": off-diagonal or torsion up to 5");
    auto X = space_from_graph(c.g);
    for (std::size_t k = 0; k <= 5; ++k) {
      const Integer engine = homology(X, k, k).rank;
      const Integer oracle = oracle_rank(c.family, c.params, k);
      const Integer quotient = diagonal_quotient(c.g, k).group.rank;
      o.require(engine == oracle && oracle == quotient,
                c.name + " k=" + std::to_string(k) + ": " + engine.get_str() + "/" + oracle.get_str() + "/" +
                    quotient.get_str());
    }
  }
  o.detail = std::to_string(cases.size()) + " graphs";
  return o;
}

Outcome odd_cycles() {
  Outcome o;
  for (auto [n, kmax] : {std::pair<std::size_t, std::size_t>{5, 4}, {7, 3}}) {
    for (const auto& r : {verify_admissible_basis(n, kmax), verify_presentation(n, kmax)}) {
      for (const auto& f : r.failures) o.require(false, "C" + std::to_string(n) + ": " + f);
      o.require(r.passed, "C" + std::to_string(n) + " report failed");
    }
  }
  auto C5 = space_from_graph(cycle_graph(5));
  o.require(homology(C5, 2, 2) == AbelianGroup{10, {}}, "MH_{2,2}(C5) != Z^10");
  o.require(homology(C5, 2, 3) == AbelianGroup{10, {}}, "MH_{2,3}(C5) != Z^10");
  o.detail = "C5 k<=4, C7 k<=3";
  return o;
}

Outcome noncommutativity() {
  Outcome o;
  std::size_t graphs = 0;
  for (const auto& [name, X] : builtins()) {
    auto pairs = adjacent_pairs(X);
    if (pairs.empty()) continue;
    ++graphs;
    MagnitudeCohomology R(X);
    const auto x = pairs.front().x, y = pairs.front().y;
    const auto l = pairs.front().length.value();
    const auto& b1 = R.compute(1, l);
    R.compute(2, l + l);
    auto xy = R.class_of(dual_simplex(b1.simplices, {x, y}));
    auto yx = R.class_of(dual_simplex(b1.simplices, {y, x}));
    auto z = R.simplex_class({x, y, x});
    o.require(R.kronecker(R.product(xy, yx), z) == 1, name + ": <a_xy a_yx, [xyx]> != 1");
    o.require(R.kronecker(R.product(yx, xy), z) == 0, name + ": <a_yx a_xy, [xyx]> != 0");
  }
  o.detail = std::to_string(graphs) + " graphs";
  return o;
}

Outcome recovery(const RandomSpaces& random) {
  Outcome o;
  std::size_t i = 0, good = 0;
  for (const auto* X : random.all()) {
    const auto seed = random.seeds[i++];
    bool ok = false;
    try {
      ok = recovery_roundtrip(*X, seed);
    } catch (const Error& e) {
      o.require(false, "space " + std::to_string(i) + ": " + e.what());
    }
    good += ok;
    o.require(ok, "space " + std::to_string(i) + " not recovered");
  }
  o.detail = std::to_string(good) + "/" + std::to_string(i) + " isometric";
  return o;
}

Outcome categorification(const RandomSpaces& random) {
  Outcome o;
  std::size_t count = 0;
  auto named = builtins();
  std::vector<const QuasiMetricSpace*> spaces = random.all();
  for (const auto& n : named) spaces.push_back(&n.space);
  for (const auto* X : spaces) {
    ++count;
    auto r = categorification_check(*X, 5);
    o.require(r.passed, "series differ on space " + std::to_string(count));
  }
  o.detail = std::to_string(count) + " spaces, lmax 5";
  return o;
}

Outcome universal_coefficients(const RandomSpaces& random) {
  Outcome o;
  std::size_t blocks = 0, torsion = 0;
  auto named = builtins();
  std::vector<std::pair<const QuasiMetricSpace*, Rational>> spaces;
  for (const auto& n : named) spaces.emplace_back(&n.space, 5);
  for (const auto* X : random.all()) spaces.emplace_back(X, 4);
  for (const auto& [X, lmax] : spaces) {
    for (const auto& l : realizable_grades(*X, lmax)) {
      const auto kmax = static_cast<std::size_t>(Integer(l.get_num() / l.get_den()).get_ui());
      auto block = build_block(*X, l, kmax);
      for (std::size_t k = 0; k <= kmax; ++k) {
        ++blocks;
        auto h = homology(block, k);
        torsion += !h.torsion_free();
        o.require(uct_check(block, k), "UCT fails at k=" + std::to_string(k) + " grade " + rational_to_string(l));
      }
    }
  }
  o.detail = std::to_string(blocks) + " blocks, " + std::to_string(torsion) + " with torsion";
  return o;
}

Outcome posets() {
  Outcome o;
  std::vector<std::pair<std::string, FinitePoset>> cases = {{"circle", FinitePoset::circle()}};
  for (std::size_t n = 1; n <= 6; ++n) {
    cases.emplace_back("chain" + std::to_string(n), FinitePoset::chain(n));
    cases.emplace_back("antichain" + std::to_string(n), FinitePoset::antichain(n));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) cases.emplace_back("random" + std::to_string(i), testing::random_poset(rng, 7));
  for (const auto& [name, P] : cases) {
    auto r = check_graded_commutativity(P, 3);
    o.require(r.passed, name + ": " + (r.failures.empty() ? std::string("failed") : r.failures.front()));
  }
  auto circle = order_complex_blocks(FinitePoset::circle(), 3);
  o.require(circle.cohomology(0) == AbelianGroup{1, {}}, "circle H^0 != Z");
  o.require(circle.cohomology(1) == AbelianGroup{1, {}}, "circle H^1 != Z");
  o.detail = std::to_string(cases.size()) + " posets";
  return o;
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(MAGHOM_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> commands = {
      "homology --graph c5 --kmax 3 --lmax 3",
      "homology --graph petersen --kmax 3 --lmax 3 --format tsv",
      "cohomology --graph dc4 --kmax 3 --lmax 4",
      "cohomology --graph k2_3 --kmax 2 --lmax 2 --format tsv",
      "ring --graph c5 --kmax 2 --lmax 3",
      "ring --graph p3 --kmax 2 --lmax 2 --seed 42",
      "ring --graph k3 --kmax 1 --lmax 1 --format tsv --seed 3",
      "recover --graph p4 --seed 11",
      "recover --graph dc3 --format tsv",
      "verify diagonal --graph c5 --lmax 3",
      "verify diagonal --graph k2_3 --lmax 3 --format tsv",
      "verify cyclic --n 5 --kmax 3",
      "verify poset --poset circle --kmax 3",
      "verify poset --poset antichain3 --kmax 2 --format tsv",
      "verify series --graph k3 --lmax 5",
      "homology --graph nosuch --kmax 1 --lmax 1",
  };
  for (const auto& c : commands) {
    auto a = run_cli(c);
    auto b = run_cli(c);
    o.require(a == b, "differs: " + c);
    o.require(a.first != -1 && !a.second.empty(), "did not run: " + c);
  }
  o.detail = std::to_string(commands.size()) + " commands";
  return o;
}

}  // namespace

int main() {
  const auto random = make_random_spaces();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"chain axioms", chain_axioms},
      {"MH^0 and MH^1", [&] { return low_degrees(random); }},
      {"diagonal families", diagonal_families},
      {"odd cycles", odd_cycles},
      {"non-commutativity", noncommutativity},
      {"recovery round trip", [&] { return recovery(random); }},
      {"categorification", [&] { return categorification(random); }},
      {"universal coefficients", [&] { return universal_coefficients(random); }},
      {"poset commutativity", posets},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << o.detail << ", ";
    line.precision(2);
    line << std::fixed << secs << "s)";
    std::cout << line.str() << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
