#pragma once

#include <optional>
#include <vector>

#include "maghom/ring.hpp"
#include "maghom/report.hpp"

namespace maghom {

/// Vertex sequence x0..xk in which consecutive vertices span an edge.
using EdgePath = std::vector<std::size_t>;

/// Every edge path of length k, in lexicographic order.
std::vector<EdgePath> edge_paths(const Graph& G, std::size_t k);
Integer path_count(const Graph& G, std::size_t k);

/// Degree-k part of the path algebra of G modulo the midpoint relations
/// sum_{y : x-y-z} (...x y z...) = 0, one for each pair at distance 2 in each
/// position and context.
struct DiagonalQuotient {
  std::size_t degree = 0;
  std::vector<EdgePath> paths;
  /// Column j is relation j over `paths`.
  SparseMatrix relations;
  AbelianGroup group;
  /// Paths whose classes form a rational basis of the quotient.
  std::vector<EdgePath> representatives;
};

DiagonalQuotient diagonal_quotient(const Graph& G, std::size_t k);

/// Compares the quotient with MH^k_k for k <= kmax, checks that the relations
/// vanish in cohomology, and spot-checks that concatenation of paths matches
/// the cup product of their dual classes.
Report verify_diagonal_theorem(const Graph& G, std::size_t kmax);

/// Vanishing of every off-diagonal block MH_{k,l}, l <= lmax. This is only a
/// certificate up to lmax.
struct DiagonalityReport {
  bool diagonal = true;
  Rational lmax;
  /// Off-diagonal bidegrees (k, l) with nonzero homology.
  std::vector<std::pair<Bidegree, AbelianGroup>> offending;
  /// Whether every computed block was torsion-free.
  bool torsion_free = true;
};

DiagonalityReport is_diagonal(const Graph& G, const Rational& lmax);

enum class GraphFamily { tree, complete, complete_bipartite };

/// Closed-form rank of MH^k_k: trees (n) give n for k = 0 and 2(n-1) after;
/// K_n gives n(n-1)^k; K_{p,q} (params p, q) is computed by rational
/// elimination over alternating sequences modulo both relation families.
Integer oracle_rank(GraphFamily family, const std::vector<std::size_t>& params, std::size_t k);

/// The icosahedral graph: quotient and cohomology agree up to kmax, and its
/// off-diagonal blocks up to lmax are reported. Diagonality is reported as a
/// note, never asserted.
Report icosahedral_check(std::size_t kmax, const Rational& lmax);

}  // namespace maghom
