#include "maghom/ring.hpp"

#include "maghom/errors.hpp"

namespace maghom {

std::string Bidegree::to_string() const {
  return "(" + std::to_string(k) + "," + rational_to_string(grade) + ")";
}

Bidegree operator+(const Bidegree& a, const Bidegree& b) {
  return {a.k + b.k, a.grade + b.grade};
}

Cochain::Cochain(std::shared_ptr<const SimplexBasis> b, IntVector c)
    : basis(std::move(b)), coords(std::move(c)) {
  if (coords.size() != basis->size()) throw Error("cochain length does not match its basis");
}

Cochain::Cochain(std::shared_ptr<const SimplexBasis> b) : basis(std::move(b)) {
  coords.resize(basis->size());
}

Integer Cochain::evaluate(const Tuple& t) const {
  auto i = basis->index_of(t);
  return i ? coords[*i] : Integer(0);
}

std::shared_ptr<const SimplexBasis> shared_basis(const QuasiMetricSpace& X, std::size_t k,
                                                 const Rational& grade) {
  return std::make_shared<const SimplexBasis>(simplex_basis(X, k, grade));
}

Cochain unit_cochain(const QuasiMetricSpace& X) {
  Cochain u(shared_basis(X, 0, 0));
  for (auto& c : u.coords) c = 1;
  return u;
}

Cochain dual_simplex(std::shared_ptr<const SimplexBasis> basis, const Tuple& t) {
  Cochain phi(std::move(basis));
  auto i = phi.basis->index_of(t);
  if (!i) throw Error("dual_simplex: tuple is not in the basis");
  phi.coords[*i] = 1;
  return phi;
}

Cochain cup_cochain(const Cochain& phi, const Cochain& psi,
                    std::shared_ptr<const SimplexBasis> target) {
  if (!(target->degree() == phi.basis->degree() + psi.basis->degree() &&
        target->grade() == phi.basis->grade() + psi.basis->grade())) {
    throw BidegreeMismatch("cup_cochain: target basis has the wrong bidegree");
  }
  Cochain out(std::move(target));
  // Nonzero entries of psi, grouped by their first point.
  std::map<std::size_t, std::vector<std::size_t>> by_start;
  for (std::size_t j = 0; j < psi.coords.size(); ++j) {
    if (sgn(psi.coords[j]) != 0) by_start[(*psi.basis)[j].front()].push_back(j);
  }
  Tuple joined;
  for (std::size_t i = 0; i < phi.coords.size(); ++i) {
    if (sgn(phi.coords[i]) == 0) continue;
    const Tuple& front = (*phi.basis)[i];
    auto it = by_start.find(front.back());
    if (it == by_start.end()) continue;
    for (std::size_t j : it->second) {
      const Tuple& back = (*psi.basis)[j];
      joined.assign(front.begin(), front.end());
      joined.insert(joined.end(), back.begin() + 1, back.end());
      auto idx = out.basis->index_of(joined);
      if (!idx) throw Error("cup_cochain: concatenation missing from target basis");
      out.coords[*idx] += phi.coords[i] * psi.coords[j];
    }
  }
  return out;
}

Cochain cup_cochain(const QuasiMetricSpace& X, const Cochain& phi, const Cochain& psi) {
  auto b = phi.bidegree() + psi.bidegree();
  return cup_cochain(phi, psi, shared_basis(X, b.k, b.grade));
}

Cochain coboundary(const QuasiMetricSpace& X, const Cochain& phi) {
  auto up = shared_basis(X, phi.basis->degree() + 1, phi.basis->grade());
  auto d = boundary_matrix(X, *up, *phi.basis);
  return Cochain(up, d.left_multiply(phi.coords));
}

MagnitudeCohomology::MagnitudeCohomology(QuasiMetricSpace X) : X_(std::move(X)) {}

const CohomologyBlock& MagnitudeCohomology::compute(std::size_t k, const Rational& grade) {
  Bidegree key{k, grade};
  if (auto it = blocks_.find(key); it != blocks_.end()) return it->second;
  CohomologyBlock block;
  block.bidegree = key;
  block.simplices = shared_basis(X_, k, grade);
  auto above = simplex_basis(X_, k + 1, grade);
  auto delta_next = boundary_matrix(X_, above, *block.simplices).transpose();
  if (k == 0) {
    block.faces = std::make_shared<const SimplexBasis>();
    block.boundary = SparseMatrix(0, block.simplices->size());
  } else {
    block.faces = shared_basis(X_, k - 1, grade);
    block.boundary = boundary_matrix(X_, *block.simplices, *block.faces);
  }
  block.basis = CohomologyBasis(block.boundary.transpose(), delta_next);
  return blocks_.emplace(key, std::move(block)).first->second;
}

const CohomologyBlock& MagnitudeCohomology::block(const Bidegree& b) const {
  auto it = blocks_.find(b);
  if (it == blocks_.end()) throw MissingBlock("bidegree " + b.to_string() + " not computed");
  return it->second;
}

RingClass MagnitudeCohomology::class_of(const Cochain& cocycle) const {
  const auto& blk = block(cocycle.bidegree());
  return {cocycle.bidegree(), blk.basis.coordinates(cocycle.coords)};
}

Cochain MagnitudeCohomology::representative(const RingClass& c) const {
  const auto& blk = block(c.bidegree);
  return Cochain(blk.simplices, blk.basis.representative(c.coords));
}

RingClass MagnitudeCohomology::basis_class(const Bidegree& b, std::size_t i) const {
  RingClass c = zero_class(b);
  if (i >= c.coords.size()) throw Error("basis_class: index out of range");
  c.coords[i] = 1;
  return c;
}

RingClass MagnitudeCohomology::zero_class(const Bidegree& b) const {
  return {b, IntVector(block(b).basis.class_dimension())};
}

RingClass MagnitudeCohomology::unit() const { return class_of(unit_cochain(X_)); }

RingClass MagnitudeCohomology::product(const RingClass& a, const RingClass& b) const {
  Bidegree target = a.bidegree + b.bidegree;
  const auto& tb = block(target);
  auto phi = representative(a);
  auto psi = representative(b);
  auto prod = cup_cochain(phi, psi, tb.simplices);
  return {target, tb.basis.coordinates(prod.coords)};
}

RingClass MagnitudeCohomology::add(const RingClass& a, const RingClass& b) const {
  if (!(a.bidegree == b.bidegree)) throw BidegreeMismatch("add: bidegrees differ");
  RingClass out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  out.coords = block(a.bidegree).basis.normalize(std::move(out.coords));
  return out;
}

Integer MagnitudeCohomology::kronecker(const RingClass& alpha, const HomologyClass& z) const {
  if (!(alpha.bidegree == z.bidegree)) throw BidegreeMismatch("kronecker: bidegrees differ");
  const auto& blk = block(alpha.bidegree);
  if (z.chain.size() != blk.simplices->size()) throw Error("kronecker: chain has wrong length");
  if (!maghom::is_zero(blk.boundary * z.chain)) throw Error("kronecker: chain is not a cycle");
  auto rep = blk.basis.representative(alpha.coords);
  Integer total = 0;
  for (std::size_t i = 0; i < rep.size(); ++i) total += rep[i] * z.chain[i];
  return total;
}

HomologyClass MagnitudeCohomology::simplex_class(const Tuple& t) const {
  auto length = tuple_length(X_, t);
  if (!is_simplex(t) || length.is_infinite()) throw Error("simplex_class: not a finite simplex");
  Bidegree b{t.size() - 1, length.value()};
  const auto& blk = block(b);
  HomologyClass z{b, IntVector(blk.simplices->size())};
  z.chain[*blk.simplices->index_of(t)] = 1;
  if (!maghom::is_zero(blk.boundary * z.chain)) throw Error("simplex_class: simplex is not a cycle");
  return z;
}

RingClass class_product(const MagnitudeCohomology& ring, const RingClass& a, const RingClass& b) {
  return ring.product(a, b);
}

Integer kronecker(const MagnitudeCohomology& ring, const RingClass& alpha, const HomologyClass& z) {
  return ring.kronecker(alpha, z);
}

}  // namespace maghom
