#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maghom/presentation.hpp"

namespace maghom {

/// An idempotent of the (0,0) component, in the presentation's coordinates.
struct Idempotent {
  IntVector coords;

  friend bool operator==(const Idempotent&, const Idempotent&) = default;
};

/// Points (as primitive idempotents) and the reconstructed distances.
struct RecoveredSpace {
  std::vector<Idempotent> points;
  QuasiMetricSpace space;
};

/// The primitive idempotents of the (0,0) component, sorted by coordinates.
///
/// A generic element of the (0,0) ring is diagonalised through its minimal
/// polynomial; the Lagrange interpolation idempotents of its integer roots are
/// then checked to be integral, idempotent, orthogonal, and to sum to the unit.
/// Throws NotSplit when the component is not isomorphic to Z^n.
std::vector<Idempotent> primitive_idempotents(const RingPresentation& P);

/// The unique grade l with e * MH^1_l * f != 0, or INF when every degree-1
/// block is killed. Throws NonUniqueGrade when two grades survive.
ExtendedRational adjacency_weights(const RingPresentation& P, const Idempotent& e,
                                   const Idempotent& f);

/// Reconstruction of a space from its cohomology ring: adjacency weights
/// between primitive idempotents, closed under shortest paths.
RecoveredSpace recover_space(const RingPresentation& P);

struct RoundTripReport {
  bool isometric = false;
  RingPresentation presentation;
  RecoveredSpace recovered;
};

/// Exports X with kmax = 1 and lmax = the largest finite distance (scrambled
/// when a seed is given), serialises and re-reads the presentation, recovers
/// it and compares with X. Throws ZeroDistance on pseudo spaces.
RoundTripReport recovery_roundtrip_report(const QuasiMetricSpace& X,
                                          std::optional<std::uint64_t> scramble_seed);
bool recovery_roundtrip(const QuasiMetricSpace& X, std::optional<std::uint64_t> scramble_seed);

}  // namespace maghom
