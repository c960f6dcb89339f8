#include "maghom/cyclic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "maghom/errors.hpp"
#include "maghom/io.hpp"

namespace maghom {

std::size_t cycle_half(std::size_t n) {
  if (n < 5 || n % 2 == 0) throw Error("odd cycle needs n = 2m+1 with m >= 2, got n = " + std::to_string(n));
  return (n - 1) / 2;
}

Code code_of(std::size_t n, const Tuple& t) {
  const auto m = static_cast<long>(cycle_half(n));
  const auto nn = static_cast<long>(n);
  Code code;
  for (std::size_t j = 1; j < t.size(); ++j) {
    long step = (static_cast<long>(t[j]) - static_cast<long>(t[j - 1]) + nn) % nn;
    if (step == 0) throw Error("code_of: consecutive entries coincide");
    if (step > m) step -= nn;
    code.push_back(step);
  }
  return code;
}

bool is_admissible(const Code& code, std::size_t m) {
  const auto mm = static_cast<long>(m);
  std::size_t i = 0;
  while (i < code.size()) {
    const long sign = code[i] > 0 ? 1 : -1;
    // Position within the current run decides whether 1 or m is expected.
    for (std::size_t pos = 0; i < code.size() && (code[i] > 0) == (sign > 0); ++i, ++pos) {
      if (code[i] != sign * (pos % 2 == 0 ? 1 : mm)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> piece_cuts(const Code& code, std::size_t m) {
  if (!is_admissible(code, m)) throw Error("piece_cuts: code is not admissible");
  const auto mm = static_cast<long>(m);
  std::vector<std::size_t> cuts{0};
  std::size_t i = 0;
  while (i < code.size()) {
    if (i + 1 < code.size() && code[i + 1] == code[i] * mm) {
      i += 2;
    } else {
      i += 1;
    }
    cuts.push_back(i);
  }
  return cuts;
}

AdmissibleSimplex make_admissible(std::size_t n, std::size_t start, const Code& code) {
  const std::size_t m = cycle_half(n);
  AdmissibleSimplex s;
  s.points.push_back(start % n);
  const auto nn = static_cast<long>(n);
  for (long step : code) {
    s.points.push_back(static_cast<std::size_t>(((static_cast<long>(s.points.back()) + step) % nn + nn) % nn));
  }
  s.code = code;
  s.cuts = piece_cuts(code, m);
  return s;
}

std::vector<AdmissibleSimplex> admissible_simplices(std::size_t n, std::size_t k,
                                                    const Rational& grade) {
  const std::size_t m = cycle_half(n);
  const auto mm = static_cast<long>(m);
  std::vector<AdmissibleSimplex> out;
  if (grade.get_den() != 1 || sgn(grade) < 0) return out;
  const long target = grade.get_num().get_si();
  const long alphabet[] = {1, -1, mm, -mm};
  std::vector<Code> codes;
  Code code;
  // Depth-first over the four admissible step values with a length budget.
  auto extend = [&](auto&& self, long used) -> void {
    if (code.size() == k) {
      if (used == target && is_admissible(code, m)) codes.push_back(code);
      return;
    }
    for (long s : alphabet) {
      if (used + std::labs(s) > target) continue;
      code.push_back(s);
      self(self, used + std::labs(s));
      code.pop_back();
    }
  };
  extend(extend, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& c : codes) out.push_back(make_admissible(n, x, c));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.points < b.points; });
  return out;
}

Bidegree GeneratorWord::bidegree(std::size_t m) const {
  Bidegree b{0, 0};
  for (const auto& g : letters) {
    if (g.kind == GeneratorKind::a) b = b + Bidegree{1, 1};
    if (g.kind == GeneratorKind::b) b = b + Bidegree{2, Rational(static_cast<long>(m + 1))};
  }
  return b;
}

std::string GeneratorWord::to_string() const {
  std::string out;
  for (const auto& g : letters) {
    if (!out.empty()) out += ' ';
    switch (g.kind) {
      case GeneratorKind::e:
        out += "e_" + std::to_string(g.from);
        break;
      case GeneratorKind::a:
        out += "a_" + std::to_string(g.from) + "," + std::to_string(g.to);
        break;
      case GeneratorKind::b:
        out += "b_" + std::to_string(g.from) + "," + std::to_string(g.to);
        break;
    }
  }
  return out.empty() ? "1" : out;
}

GeneratorWord monomial_of(std::size_t n, const AdmissibleSimplex& s) {
  cycle_half(n);
  GeneratorWord w;
  if (s.points.size() == 1) {
    w.letters.push_back({GeneratorKind::e, s.points[0], s.points[0]});
    return w;
  }
  for (std::size_t i = 0; i + 1 < s.cuts.size(); ++i) {
    const std::size_t from = s.cuts[i];
    const std::size_t to = s.cuts[i + 1];
    w.letters.push_back({to - from == 1 ? GeneratorKind::a : GeneratorKind::b, s.points[from],
                         s.points[to]});
  }
  return w;
}

std::optional<AdmissibleSimplex> reduce_word(std::size_t n, const GeneratorWord& word) {
  const std::size_t m = cycle_half(n);
  if (word.letters.empty()) throw Error("reduce_word: empty word");
  const auto nn = static_cast<long>(n);
  const auto mm = static_cast<long>(m);
  auto displacement = [&](const Generator& g) {
    long s = (static_cast<long>(g.to) - static_cast<long>(g.from) + nn) % nn;
    return s > mm ? s - nn : s;
  };
  for (std::size_t i = 0; i + 1 < word.letters.size(); ++i) {
    if (word.letters[i].to != word.letters[i + 1].from) return std::nullopt;
  }
  // Signed pieces: +-1 for a, +-2 for b (the sign is the direction of travel).
  std::vector<int> pieces;
  for (const auto& g : word.letters) {
    const long s = displacement(g);
    switch (g.kind) {
      case GeneratorKind::e:
        if (g.from != g.to) throw Error("reduce_word: e must have equal endpoints");
        break;
      case GeneratorKind::a:
        if (std::labs(s) != 1) throw Error("reduce_word: a needs an edge");
        pieces.push_back(s > 0 ? 1 : -1);
        break;
      case GeneratorKind::b:
        // A displacement of +(m+1) normalises to -m and is travelled clockwise.
        if (std::labs(s) != mm) throw Error("reduce_word: b needs a pair at distance m");
        pieces.push_back(s < 0 ? 2 : -2);
        break;
    }
  }
  const std::size_t start = word.letters.front().from;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
      const int p = pieces[i];
      const int q = pieces[i + 1];
      if ((p > 0) != (q > 0) || std::abs(p) != 1) continue;
      if (std::abs(q) == 1) return std::nullopt;  // a_xy a_yz with x != z
      std::swap(pieces[i], pieces[i + 1]);         // a_wx b_xz = b_wy a_yz
      changed = true;
    }
  }
  Code code;
  for (int p : pieces) {
    const long sign = p > 0 ? 1 : -1;
    code.push_back(sign);
    if (std::abs(p) == 2) code.push_back(sign * mm);
  }
  return make_admissible(n, start, code);
}

namespace {

// Cohomology block of C_n with the basis dual to the admissible cycles.
struct DualBlock {
  Bidegree bidegree;
  std::vector<AdmissibleSimplex> admissible;
  // Row j gives the class coordinates of the dual to admissible[j].
  IntMatrix inverse;
  bool valid = false;

  std::optional<std::size_t> find(const Tuple& t) const {
    auto it = std::lower_bound(admissible.begin(), admissible.end(), t,
                               [](const AdmissibleSimplex& s, const Tuple& x) { return s.points < x; });
    if (it == admissible.end() || it->points != t) return std::nullopt;
    return static_cast<std::size_t>(it - admissible.begin());
  }
};

class CycleDuals {
 public:
  CycleDuals(std::size_t n, std::size_t kmax, Report& report)
      : n_(n), m_(cycle_half(n)), ring_(space_from_graph(cycle_graph(n))) {
    for (std::size_t k = 0; k <= kmax; ++k) {
      const std::size_t lo = k;
      const std::size_t hi = k * m_;
      for (std::size_t l = lo; l <= hi; ++l) build({k, Rational(static_cast<long>(l))}, report);
    }
  }

  MagnitudeCohomology& ring() { return ring_; }
  const std::map<Bidegree, DualBlock>& blocks() const { return blocks_; }

  bool has(const Bidegree& b) const { return blocks_.count(b) != 0 && blocks_.at(b).valid; }

  RingClass dual(const Tuple& t) const {
    const Bidegree b{t.size() - 1, tuple_length(ring_.space(), t).value()};
    const auto& blk = blocks_.at(b);
    auto j = blk.find(t);
    if (!j) throw Error("dual: tuple is not admissible");
    return {b, blk.inverse.row(*j)};
  }

 private:
  void build(const Bidegree& b, Report& report) {
    DualBlock d;
    d.bidegree = b;
    d.admissible = admissible_simplices(n_, b.k, b.grade);
    const auto& blk = ring_.compute(b);
    const auto group = blk.group();
    const std::string at = "C" + std::to_string(n_) + " " + b.to_string();
    if (!group.torsion.empty()) report.fail(at + ": cohomology has torsion " + group.to_string());
    const std::size_t r = blk.basis.class_dimension();
    if (d.admissible.size() != r || group.rank != r) {
      report.fail(at + ": " + std::to_string(d.admissible.size()) +
                  " admissible simplices but MH^k_l = " + group.to_string());
      blocks_.emplace(b, std::move(d));
      return;
    }
    IntMatrix pairing(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      IntVector coords(r);
      coords[i] = 1;
      auto rep = blk.basis.representative(coords);
      for (std::size_t j = 0; j < r; ++j) {
        pairing(i, j) = rep[*blk.simplices->index_of(d.admissible[j].points)];
      }
    }
    auto snf = smith_normal_form(pairing);
    bool unimodular = snf.rank == r;
    for (const auto& v : snf.diagonal()) unimodular = unimodular && v == 1;
    if (!unimodular) {
      report.fail(at + ": pairing with admissible cycles is not unimodular");
      blocks_.emplace(b, std::move(d));
      return;
    }
    d.inverse = snf.V * snf.U;
    d.valid = true;
    blocks_.emplace(b, std::move(d));
  }

  std::size_t n_;
  std::size_t m_;
  MagnitudeCohomology ring_;
  std::map<Bidegree, DualBlock> blocks_;
};

std::size_t step(std::size_t n, std::size_t x, long s) {
  const auto nn = static_cast<long>(n);
  return static_cast<std::size_t>(((static_cast<long>(x) + s) % nn + nn) % nn);
}

}  // namespace

Report verify_admissible_basis(std::size_t n, std::size_t kmax) {
  const std::size_t m = cycle_half(n);
  const QuasiMetricSpace X = space_from_graph(cycle_graph(n));
  Report report;
  for (std::size_t k = 0; k <= kmax; ++k) {
    for (std::size_t l = k; l <= k * m; ++l) {
      const Rational grade(static_cast<long>(l));
      const std::string at = "C" + std::to_string(n) + " (" + std::to_string(k) + "," +
                             std::to_string(l) + ")";
      auto chains = simplex_basis(X, k, grade);
      auto down = k == 0 ? SparseMatrix(0, chains.size()) : boundary_matrix(X, k, grade);
      auto up = boundary_matrix(X, k + 1, grade);
      auto adm = admissible_simplices(n, k, grade);

      SparseMatrix spanning(chains.size(), up.cols() + adm.size());
      for (std::size_t c = 0; c < up.cols(); ++c) spanning.set_column(c, up.column(c));
      bool cycles = true;
      for (std::size_t j = 0; j < adm.size(); ++j) {
        auto idx = chains.index_of(adm[j].points);
        if (!idx) {
          report.fail(at + ": admissible simplex missing from the chain basis");
          cycles = false;
          continue;
        }
        if (!down.column(*idx).empty()) {
          report.fail(at + ": admissible simplex is not a cycle");
          cycles = false;
        }
        spanning.add(*idx, up.cols() + j, 1);
      }
      auto h = homology_group(down, up);
      if (!h.torsion.empty()) report.fail(at + ": torsion " + h.to_string());
      if (h.rank != adm.size()) {
        report.fail(at + ": MH = " + h.to_string() + " but " + std::to_string(adm.size()) +
                    " admissible simplices");
      }
      if (!cycles) continue;
      // Boundaries plus admissible cycles must span the cycle lattice exactly.
      const std::size_t cycle_rank = chains.size() - smith_invariants(down).rank;
      auto span = smith_invariants(spanning);
      if (span.rank != cycle_rank || !span.torsion.empty()) {
        report.fail(at + ": admissible classes do not form a basis of homology");
      }
    }
  }
  return report;
}

Report verify_presentation(std::size_t n, std::size_t kmax) {
  const std::size_t m = cycle_half(n);
  const auto mm = static_cast<long>(m);
  Report report;
  CycleDuals duals(n, kmax, report);
  if (!report.passed) return report;
  auto& ring = duals.ring();
  const auto& X = ring.space();
  const std::string name = "C" + std::to_string(n);

  auto e = [&](std::size_t x) { return duals.dual({x}); };
  auto a = [&](std::size_t x, std::size_t y) { return duals.dual({x, y}); };
  // b_{xz} for z = x + s(m+1), dual to (x, x+s, z).
  auto b = [&](std::size_t x, long s) { return duals.dual({x, step(n, x, s), step(n, x, s * (mm + 1))}); };
  // The same generator named by its endpoints: +(m+1) normalises to -m.
  auto b_to = [&](std::size_t x, std::size_t z) { return b(x, code_of(n, {x, z})[0] < 0 ? 1 : -1); };
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) report.fail(name + ": " + what);
  };

  const RingClass zero00 = ring.zero_class({0, 0});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto p = ring.product(e(x), e(y));
      expect(p == (x == y ? e(x) : zero00), "e_x e_y relation fails for " + std::to_string(x) +
                                                "," + std::to_string(y));
    }
  }
  if (kmax >= 1) {
    for (std::size_t x = 0; x < n; ++x) {
      for (long s : {1L, -1L}) {
        const std::size_t y = step(n, x, s);
        expect(ring.product(e(x), a(x, y)) == a(x, y), "e_x a_xy != a_xy");
        expect(ring.product(a(x, y), e(y)) == a(x, y), "a_xy e_y != a_xy");
      }
    }
  }
  if (kmax >= 2) {
    for (std::size_t x = 0; x < n; ++x) {
      for (long s : {1L, -1L}) {
        const std::size_t z = step(n, x, s * (mm + 1));
        expect(ring.product(e(x), b(x, s)) == b(x, s), "e_x b_xz != b_xz");
        expect(ring.product(b(x, s), e(z)) == b(x, s), "b_xz e_z != b_xz");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (long s : {1L, -1L}) {
        for (long t : {1L, -1L}) {
          const std::size_t y = step(n, x, s);
          const std::size_t z = step(n, y, t);
          if (z == x) continue;
          expect(ring.product(a(x, y), a(y, z)).is_zero(), "a_xy a_yz != 0 with x != z");
        }
      }
    }
  }
  if (kmax >= 3) {
    for (std::size_t w = 0; w < n; ++w) {
      for (long s : {1L, -1L}) {
        const std::size_t x = step(n, w, s);
        const std::size_t z = step(n, w, s * (mm + 2));
        // b_xz with z = x + s(m+1), b_wy with y = w + s(m+1).
        auto lhs = ring.product(a(w, x), b(x, s));
        auto rhs = ring.product(b(w, s), a(step(n, w, s * (mm + 1)), z));
        expect(lhs == rhs, "a_wx b_xz != b_wy a_yz at w = " + std::to_string(w));
      }
    }
  }

  // [(x,y,z)] = [(x,y',z)] for (x,y,z) with code (s m, s): the 3-simplex
  // (x,y',y,z) has exactly these two faces.
  {
    const Rational l3(mm + 1);
    auto top = simplex_basis(X, 3, l3);
    auto faces = simplex_basis(X, 2, l3);
    auto d = boundary_matrix(X, top, faces);
    for (std::size_t x = 0; x < n; ++x) {
      for (long s : {1L, -1L}) {
        const std::size_t yp = step(n, x, s);
        const std::size_t y = step(n, x, s * mm);
        const std::size_t z = step(n, y, s);
        auto col = top.index_of({x, yp, y, z});
        if (!col) {
          report.fail(name + ": (x,y',y,z) is not a simplex of length m+1");
          continue;
        }
        SparseColumn expected{{*faces.index_of({x, y, z}), Integer(-1)},
                              {*faces.index_of({x, yp, z}), Integer(1)}};
        std::sort(expected.begin(), expected.end(),
                  [](const auto& p, const auto& q) { return p.first < q.first; });
        expect(d.column(*col) == expected, "boundary of (x,y',y,z) is not -(x,y,z)+(x,y',z)");
      }
    }
  }

  // Duality of monomials with admissible cycles, and monomial counts.
  for (const auto& [bd, blk] : duals.blocks()) {
    if (!blk.valid) continue;
    const auto& cblk = ring.block(bd);
    std::set<std::string> words;
    for (const auto& x : blk.admissible) {
      auto word = monomial_of(n, x);
      words.insert(word.to_string());
      RingClass p = bd.k == 0 ? e(x.points[0]) : RingClass{};
      for (std::size_t i = 0; i < word.letters.size() && bd.k > 0; ++i) {
        const auto& g = word.letters[i];
        RingClass letter = g.kind == GeneratorKind::a ? a(g.from, g.to) : b_to(g.from, g.to);
        p = i == 0 ? letter : ring.product(p, letter);
      }
      auto rep = cblk.basis.representative(p.coords);
      for (const auto& y : blk.admissible) {
        const Integer value = rep[*cblk.simplices->index_of(y.points)];
        const Integer wanted = x.points == y.points ? 1 : 0;
        if (value != wanted) {
          report.fail(name + " " + bd.to_string() + ": <p_x,[y]> = " + value.get_str() +
                      " for x = " + word.to_string());
        }
      }
    }
    if (words.size() != cblk.basis.class_dimension()) {
      report.fail(name + " " + bd.to_string() + ": monomial count differs from the rank");
    }
  }

  // Generator words of length <= 4 against the symbolic reduction.
  std::vector<std::pair<Generator, RingClass>> gens;
  for (std::size_t x = 0; x < n; ++x) {
    gens.push_back({{GeneratorKind::e, x, x}, e(x)});
    if (kmax >= 1) {
      for (long s : {1L, -1L}) gens.push_back({{GeneratorKind::a, x, step(n, x, s)}, a(x, step(n, x, s))});
    }
    if (kmax >= 2) {
      for (long s : {1L, -1L}) gens.push_back({{GeneratorKind::b, x, step(n, x, s * (mm + 1))}, b(x, s)});
    }
  }
  std::size_t checked = 0;
  GeneratorWord word;
  auto walk = [&](auto&& self, const RingClass& prefix) -> void {
    if (word.letters.size() == 4) return;
    for (const auto& [g, cls] : gens) {
      if (g.from != word.letters.back().to) continue;
      const Bidegree target = prefix.bidegree + cls.bidegree;
      if (target.k > kmax) continue;
      word.letters.push_back(g);
      auto product = ring.product(prefix, cls);
      auto reduced = reduce_word(n, word);
      RingClass expected = reduced ? duals.dual(reduced->points) : ring.zero_class(target);
      ++checked;
      if (!(product == expected)) {
        report.fail(name + ": word " + word.to_string() + " does not reduce as the relations say");
      }
      if (!product.is_zero()) self(self, product);
      word.letters.pop_back();
    }
  };
  for (const auto& [g, cls] : gens) {
    word.letters.assign(1, g);
    ++checked;
    walk(walk, cls);
  }
  report.note(name + ": checked " + std::to_string(checked) + " generator words");
  return report;
}

}  // namespace maghom
