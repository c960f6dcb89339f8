#include "maghom/presentation.hpp"

#include <algorithm>
#include <json.hpp>

#include "maghom/errors.hpp"

namespace maghom {

using nlohmann::json;

std::size_t RingPresentation::class_count() const {
  return blocks.empty() ? 0 : blocks.back().offset + blocks.back().size();
}

const PresentationBlock* RingPresentation::find(const Bidegree& b) const {
  for (const auto& blk : blocks) {
    if (blk.bidegree == b) return &blk;
  }
  return nullptr;
}

std::size_t RingPresentation::block_index_of(std::size_t cls) const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (cls >= blocks[i].offset && cls < blocks[i].offset + blocks[i].size()) return i;
  }
  throw Error("class index " + std::to_string(cls) + " out of range");
}

void RingPresentation::canonicalize() {
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.bidegree < b.bidegree; });
  std::size_t offset = 0;
  for (auto& blk : blocks) {
    blk.offset = offset;
    offset += blk.size();
  }
  std::sort(products.begin(), products.end(), [](const auto& a, const auto& b) {
    return std::tie(a.left, a.right, a.target) < std::tie(b.left, b.right, b.target);
  });
}

namespace {

IntVector normalize_torsion(const PresentationBlock& blk, IntVector v) {
  for (std::size_t i = 0; i < blk.torsion.size(); ++i) {
    Integer& c = v[blk.free_rank + i];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), blk.torsion[i].get_mpz_t());
  }
  return v;
}

}  // namespace

std::optional<IntVector> RingPresentation::multiply(const Bidegree& a, const IntVector& x,
                                                    const Bidegree& b,
                                                    const IntVector& y) const {
  Bidegree t = a + b;
  if (!in_range(t)) return std::nullopt;
  const auto* ba = find(a);
  const auto* bb = find(b);
  const auto* bt = find(t);
  if (ba == nullptr || bb == nullptr) throw MissingBlock("multiply: factor bidegree not presented");
  if (x.size() != ba->size() || y.size() != bb->size()) throw Error("multiply: wrong coordinate count");
  if (bt == nullptr) return IntVector{};
  IntVector out(bt->size());
  for (const auto& c : products) {
    if (c.left < ba->offset || c.left >= ba->offset + ba->size()) continue;
    if (c.right < bb->offset || c.right >= bb->offset + bb->size()) continue;
    const Integer& xi = x[c.left - ba->offset];
    const Integer& yj = y[c.right - bb->offset];
    if (sgn(xi) == 0 || sgn(yj) == 0) continue;
    out[c.target - bt->offset] += xi * yj * c.value;
  }
  return normalize_torsion(*bt, std::move(out));
}

IntMatrix RingPresentation::left_operator(const Bidegree& a, const IntVector& x,
                                          const Bidegree& b) const {
  const auto* ba = find(a);
  const auto* bb = find(b);
  const auto* bt = find(a + b);
  if (ba == nullptr || bb == nullptr || bt == nullptr || !in_range(a + b)) {
    throw MissingBlock("left_operator: bidegree " + (a + b).to_string() + " not presented");
  }
  if (x.size() != ba->size()) throw Error("left_operator: wrong coordinate count");
  IntMatrix m(bt->size(), bb->size());
  for (const auto& c : products) {
    if (c.left < ba->offset || c.left >= ba->offset + ba->size()) continue;
    if (c.right < bb->offset || c.right >= bb->offset + bb->size()) continue;
    const Integer& xi = x[c.left - ba->offset];
    if (sgn(xi) == 0) continue;
    m(c.target - bt->offset, c.right - bb->offset) += xi * c.value;
  }
  return m;
}

IntMatrix RingPresentation::right_operator(const Bidegree& a, const Bidegree& b,
                                           const IntVector& y) const {
  const auto* ba = find(a);
  const auto* bb = find(b);
  const auto* bt = find(a + b);
  if (ba == nullptr || bb == nullptr || bt == nullptr || !in_range(a + b)) {
    throw MissingBlock("right_operator: bidegree " + (a + b).to_string() + " not presented");
  }
  if (y.size() != bb->size()) throw Error("right_operator: wrong coordinate count");
  IntMatrix m(bt->size(), ba->size());
  for (const auto& c : products) {
    if (c.left < ba->offset || c.left >= ba->offset + ba->size()) continue;
    if (c.right < bb->offset || c.right >= bb->offset + bb->size()) continue;
    const Integer& yj = y[c.right - bb->offset];
    if (sgn(yj) == 0) continue;
    m(c.target - bt->offset, c.left - ba->offset) += yj * c.value;
  }
  return m;
}

namespace {

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ParseError("expected an integer in presentation");
}

}  // namespace

std::string RingPresentation::to_json() const {
  json j;
  j["format"] = "maghom-ring-presentation";
  j["version"] = 1;
  j["kmax"] = kmax;
  j["lmax"] = rational_to_string(lmax);
  std::vector<Rational> grades;
  json blocks_json = json::array();
  for (const auto& blk : blocks) {
    if (std::find(grades.begin(), grades.end(), blk.bidegree.grade) == grades.end()) {
      grades.push_back(blk.bidegree.grade);
    }
    json tors = json::array();
    for (const auto& t : blk.torsion) tors.push_back(integer_json(t));
    blocks_json.push_back({{"k", blk.bidegree.k},
                           {"grade", rational_to_string(blk.bidegree.grade)},
                           {"rank", blk.free_rank},
                           {"torsion", tors},
                           {"offset", blk.offset}});
  }
  std::sort(grades.begin(), grades.end());
  json grades_json = json::array();
  for (const auto& g : grades) grades_json.push_back(rational_to_string(g));
  j["grades"] = grades_json;
  j["blocks"] = blocks_json;
  json unit_json = json::array();
  for (const auto& u : unit) unit_json.push_back(integer_json(u));
  j["unit"] = unit_json;
  json prods = json::array();
  for (const auto& c : products) {
    prods.push_back(json::array({c.left, c.right, c.target, integer_json(c.value)}));
  }
  j["products"] = prods;
  return j.dump(1) + "\n";
}

RingPresentation RingPresentation::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("presentation is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format") != "maghom-ring-presentation") throw ParseError("unknown presentation format");
    RingPresentation P;
    P.kmax = j.at("kmax").get<std::size_t>();
    P.lmax = parse_rational(j.at("lmax").get<std::string>());
    for (const auto& b : j.at("blocks")) {
      PresentationBlock blk;
      blk.bidegree = {b.at("k").get<std::size_t>(), parse_rational(b.at("grade").get<std::string>())};
      blk.free_rank = b.at("rank").get<std::size_t>();
      for (const auto& t : b.at("torsion")) blk.torsion.push_back(integer_from_json(t));
      P.blocks.push_back(std::move(blk));
    }
    for (const auto& u : j.at("unit")) P.unit.push_back(integer_from_json(u));
    P.canonicalize();
    const std::size_t count = P.class_count();
    for (const auto& c : j.at("products")) {
      if (!c.is_array() || c.size() != 4) throw ParseError("structure constant must have 4 entries");
      StructureConstant sc{c[0].get<std::size_t>(), c[1].get<std::size_t>(),
                           c[2].get<std::size_t>(), integer_from_json(c[3])};
      if (sc.left >= count || sc.right >= count || sc.target >= count) {
        throw ParseError("structure constant index out of range");
      }
      P.products.push_back(std::move(sc));
    }
    P.canonicalize();
    const auto* zero = P.find({0, 0});
    if ((zero == nullptr && !P.unit.empty()) || (zero != nullptr && P.unit.size() != zero->size())) {
      throw ParseError("unit vector does not match the (0,0) block");
    }
    return P;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed presentation: ") + e.what());
  }
}

RingPresentation export_presentation(MagnitudeCohomology& ring, std::size_t kmax,
                                     const Rational& lmax,
                                     std::optional<std::uint64_t> scramble_seed) {
  const auto& X = ring.space();
  RingPresentation P;
  P.kmax = kmax;
  P.lmax = lmax;
  auto grades = realizable_grades(X, lmax);
  std::vector<Bidegree> present;
  for (std::size_t k = 0; k <= kmax; ++k) {
    for (const auto& g : grades) {
      const auto& blk = ring.compute(k, g);
      auto group = blk.group();
      if (group.is_zero()) continue;
      P.blocks.push_back({blk.bidegree, group.rank, group.torsion, 0});
      present.push_back(blk.bidegree);
    }
  }
  P.canonicalize();
  if (P.find({0, 0}) != nullptr) P.unit = ring.unit().coords;
  for (const auto& a : P.blocks) {
    for (const auto& b : P.blocks) {
      Bidegree t = a.bidegree + b.bidegree;
      if (!P.in_range(t)) continue;
      const auto* bt = P.find(t);
      if (bt == nullptr) continue;
      for (std::size_t i = 0; i < a.size(); ++i) {
        auto x = ring.basis_class(a.bidegree, i);
        for (std::size_t j = 0; j < b.size(); ++j) {
          auto z = ring.product(x, ring.basis_class(b.bidegree, j));
          for (std::size_t r = 0; r < z.coords.size(); ++r) {
            if (sgn(z.coords[r]) != 0) {
              P.products.push_back({a.offset + i, b.offset + j, bt->offset + r, z.coords[r]});
            }
          }
        }
      }
    }
  }
  P.canonicalize();
  if (scramble_seed) {
    std::mt19937_64 rng(*scramble_seed);
    for (const auto& b : present) {
      const auto* blk = P.find(b);
      if (blk->free_rank == 0) continue;
      auto [S, S_inv] = random_unimodular(blk->free_rank, rng);
      P = change_basis(P, b, S, S_inv);
    }
  }
  return P;
}

RingPresentation export_presentation(const QuasiMetricSpace& X, std::size_t kmax,
                                     const Rational& lmax,
                                     std::optional<std::uint64_t> scramble_seed) {
  MagnitudeCohomology ring(X);
  return export_presentation(ring, kmax, lmax, scramble_seed);
}

std::pair<IntMatrix, IntMatrix> random_unimodular(std::size_t n, std::mt19937_64& rng) {
  IntMatrix S = IntMatrix::identity(n);
  IntMatrix S_inv = IntMatrix::identity(n);
  if (n == 0) return {S, S_inv};
  static const long kMultipliers[] = {-2, -1, 1, 2};
  const std::size_t ops = n >= 2 ? 3 * n : 0;
  for (std::size_t op = 0; op < ops; ++op) {
    std::size_t i = rng() % n;
    std::size_t j = rng() % (n - 1);
    if (j >= i) ++j;
    Integer c = kMultipliers[rng() % 4];
    // S <- E S with E adding c * row j to row i; S_inv <- S_inv E^{-1}.
    for (std::size_t col = 0; col < n; ++col) S(i, col) += c * S(j, col);
    for (std::size_t row = 0; row < n; ++row) S_inv(row, j) -= c * S_inv(row, i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() % 2 == 0) continue;
    for (std::size_t col = 0; col < n; ++col) S(i, col) = -S(i, col);
    for (std::size_t row = 0; row < n; ++row) S_inv(row, i) = -S_inv(row, i);
  }
  return {S, S_inv};
}

RingPresentation change_basis(const RingPresentation& P, const Bidegree& b,
                              const IntMatrix& change, const IntMatrix& inverse) {
  const auto* changed = P.find(b);
  if (changed == nullptr) throw MissingBlock("change_basis: bidegree not presented");
  const std::size_t f = changed->free_rank;
  if (change.rows() != f || change.cols() != f || inverse.rows() != f || inverse.cols() != f ||
      !(change * inverse).is_identity()) {
    throw Error("change_basis: matrices are not mutually inverse of the free rank");
  }
  // New class i of block `blk`, in old coordinates.
  auto new_class = [&](const PresentationBlock& blk, std::size_t i) {
    IntVector v(blk.size());
    if (blk.bidegree == b && i < f) {
      for (std::size_t r = 0; r < f; ++r) v[r] = change(r, i);
    } else {
      v[i] = 1;
    }
    return v;
  };
  auto to_new = [&](const PresentationBlock& blk, IntVector v) {
    if (!(blk.bidegree == b)) return v;
    IntVector out = v;
    for (std::size_t r = 0; r < f; ++r) {
      out[r] = 0;
      for (std::size_t c = 0; c < f; ++c) out[r] += inverse(r, c) * v[c];
    }
    return out;
  };

  RingPresentation Q;
  Q.kmax = P.kmax;
  Q.lmax = P.lmax;
  Q.blocks = P.blocks;
  if (const auto* zero = P.find({0, 0})) Q.unit = to_new(*zero, P.unit);
  for (const auto& a : P.blocks) {
    for (const auto& c : P.blocks) {
      Bidegree t = a.bidegree + c.bidegree;
      if (!P.in_range(t)) continue;
      const auto* bt = P.find(t);
      if (bt == nullptr) continue;
      for (std::size_t i = 0; i < a.size(); ++i) {
        auto x = new_class(a, i);
        for (std::size_t j = 0; j < c.size(); ++j) {
          auto z = to_new(*bt, *P.multiply(a.bidegree, x, c.bidegree, new_class(c, j)));
          for (std::size_t r = 0; r < z.size(); ++r) {
            if (sgn(z[r]) != 0) Q.products.push_back({a.offset + i, c.offset + j, bt->offset + r, z[r]});
          }
        }
      }
    }
  }
  Q.canonicalize();
  return Q;
}

}  // namespace maghom
