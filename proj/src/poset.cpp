#include "maghom/poset.hpp"

#include <fstream>
#include <sstream>

#include "maghom/errors.hpp"

namespace maghom {

FinitePoset::FinitePoset(std::size_t n,
                         const std::vector<std::pair<std::size_t, std::size_t>>& relations)
    : less_(n, std::vector<bool>(n, false)) {
  for (const auto& [a, b] : relations) {
    if (a >= n || b >= n) throw Error("poset relation out of range");
    if (a == b) throw Error("poset relation " + std::to_string(a) + " < " + std::to_string(a));
    less_[a][b] = true;
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!less_[a][m]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (less_[m][b]) less_[a][b] = true;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (less_[a][a]) throw Error("poset relations contain a cycle through " + std::to_string(a));
  }
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return FinitePoset(n, rel);
}

FinitePoset FinitePoset::antichain(std::size_t n) { return FinitePoset(n, {}); }

FinitePoset FinitePoset::circle() {
  return FinitePoset(6, {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}});
}

FinitePoset read_poset(std::istream& in) {
  std::string line;
  std::optional<std::size_t> n;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    auto number = [&](const std::string& s) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(where + ": expected a nonnegative integer, got '" + s + "'");
      }
      return static_cast<std::size_t>(std::stoul(s));
    };
    if (!n) {
      if (words.size() != 1) throw ParseError(where + ": expected the element count");
      n = number(words[0]);
      continue;
    }
    if (words.size() != 3 || words[1] != "<") throw ParseError(where + ": expected `a < b`");
    rel.emplace_back(number(words[0]), number(words[2]));
  }
  if (!n) throw ParseError("poset file is empty");
  try {
    return FinitePoset(*n, rel);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

FinitePoset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_poset(in);
}

std::vector<Tuple> strict_chains(const FinitePoset& P, std::size_t k) {
  std::vector<Tuple> out;
  Tuple current;
  auto extend = [&](auto&& self) -> void {
    if (current.size() == k + 1) {
      out.push_back(current);
      return;
    }
    for (std::size_t y = 0; y < P.size(); ++y) {
      if (!current.empty() && !P.less(current.back(), y)) continue;
      current.push_back(y);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

OrderComplex order_complex_blocks(const FinitePoset& P, std::size_t kmax) {
  OrderComplex C;
  C.kmax = kmax;
  for (std::size_t k = 0; k <= kmax + 1; ++k) C.bases.emplace_back(k, Rational(0), strict_chains(P, k));
  C.boundaries.emplace_back(0, C.bases[0].size());
  Tuple face;
  for (std::size_t k = 1; k <= kmax + 1; ++k) {
    const auto& src = C.bases[k];
    const auto& dst = C.bases[k - 1];
    SparseMatrix d(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (std::size_t i = 0; i <= k; ++i) {
        face = src[c];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        d.add(*dst.index_of(face), c, i % 2 == 0 ? 1 : -1);
      }
    }
    C.boundaries.push_back(std::move(d));
  }
  return C;
}

AbelianGroup OrderComplex::homology(std::size_t k) const {
  if (k > kmax) throw Error("order complex truncated below degree " + std::to_string(k));
  return homology_group(boundaries[k], boundaries[k + 1]);
}

AbelianGroup OrderComplex::cohomology(std::size_t k) const {
  return cohomology_basis(k).group();
}

CohomologyBasis OrderComplex::cohomology_basis(std::size_t k) const {
  if (k > kmax) throw Error("order complex truncated below degree " + std::to_string(k));
  return CohomologyBasis(boundaries[k].transpose(), boundaries[k + 1].transpose());
}

PosetCochain poset_unit(const OrderComplex& C) {
  return {0, IntVector(C.bases[0].size(), 1)};
}

PosetCochain poset_cup(const OrderComplex& C, const PosetCochain& xi, const PosetCochain& eta) {
  const std::size_t k = xi.degree + eta.degree;
  if (k >= C.bases.size()) throw Error("poset_cup: degree beyond the truncation");
  const auto& front = C.bases[xi.degree];
  const auto& back = C.bases[eta.degree];
  const auto& target = C.bases[k];
  PosetCochain out{k, IntVector(target.size())};
  Tuple part;
  for (std::size_t s = 0; s < target.size(); ++s) {
    const Tuple& t = target[s];
    part.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(xi.degree + 1));
    const Integer& f = xi.coords[*front.index_of(part)];
    if (sgn(f) == 0) continue;
    part.assign(t.begin() + static_cast<std::ptrdiff_t>(xi.degree), t.end());
    out.coords[s] = f * eta.coords[*back.index_of(part)];
  }
  return out;
}

PosetCochain poset_coboundary(const OrderComplex& C, const PosetCochain& xi) {
  if (xi.degree + 1 >= C.boundaries.size()) throw Error("poset_coboundary: beyond the truncation");
  return {xi.degree + 1, C.boundaries[xi.degree + 1].left_multiply(xi.coords)};
}

Report check_graded_commutativity(const FinitePoset& P, std::size_t kmax) {
  Report report;
  auto C = order_complex_blocks(P, kmax);
  std::vector<CohomologyBasis> H;
  for (std::size_t k = 0; k <= kmax; ++k) H.push_back(C.cohomology_basis(k));
  auto generator = [&](std::size_t k, std::size_t i) {
    IntVector coords(H[k].class_dimension());
    coords[i] = 1;
    return PosetCochain{k, H[k].representative(coords)};
  };
  for (std::size_t j = 0; j <= kmax; ++j) {
    for (std::size_t k = j; j + k <= kmax; ++k) {
      for (std::size_t a = 0; a < H[j].class_dimension(); ++a) {
        for (std::size_t b = 0; b < H[k].class_dimension(); ++b) {
          auto alpha = generator(j, a);
          auto beta = generator(k, b);
          auto ab = H[j + k].coordinates(poset_cup(C, alpha, beta).coords);
          auto ba = H[j + k].coordinates(poset_cup(C, beta, alpha).coords);
          if ((j * k) % 2 == 1) {
            for (auto& c : ba) c = -c;
            ba = H[j + k].normalize(std::move(ba));
          }
          if (ab != ba) {
            report.fail("classes " + std::to_string(a) + " in H^" + std::to_string(j) + " and " +
                        std::to_string(b) + " in H^" + std::to_string(k) + " do not commute");
          }
        }
      }
    }
  }
  return report;
}

}  // namespace maghom
