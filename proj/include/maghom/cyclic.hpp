#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maghom/report.hpp"
#include "maghom/ring.hpp"

namespace maghom {

/// Signed circular steps of a simplex on C_n, each in {-m..m} \ {0}.
using Code = std::vector<long>;

/// Requires n = 2m + 1 with m >= 2; returns m.
std::size_t cycle_half(std::size_t n);

/// Steps x_j - x_{j-1} normalised into {-m..m}. Increasing index mod n is
/// the positive direction.
Code code_of(std::size_t n, const Tuple& t);

/// Every maximal same-sign run reads (1, m, 1, m, ...) or (-1, -m, -1, -m, ...).
bool is_admissible(const Code& code, std::size_t m);

/// Start indices of the pieces (1), (-1), (1,m), (-1,-m) of an admissible
/// code, followed by the code length.
std::vector<std::size_t> piece_cuts(const Code& code, std::size_t m);

struct AdmissibleSimplex {
  Tuple points;
  Code code;
  /// Piece boundaries as positions in `points`: 0 = c0 < c1 < ... = k.
  std::vector<std::size_t> cuts;
};

AdmissibleSimplex make_admissible(std::size_t n, std::size_t start, const Code& code);

/// All admissible simplices of degree k and length l on C_n, lexicographic.
std::vector<AdmissibleSimplex> admissible_simplices(std::size_t n, std::size_t k,
                                                    const Rational& grade);

enum class GeneratorKind { e, a, b };

struct Generator {
  GeneratorKind kind;
  std::size_t from;
  std::size_t to;

  friend bool operator==(const Generator&, const Generator&) = default;
};

struct GeneratorWord {
  std::vector<Generator> letters;

  Bidegree bidegree(std::size_t m) const;
  std::string to_string() const;
};

/// p_x: one generator per piece (e_{x0} for a 0-simplex).
GeneratorWord monomial_of(std::size_t n, const AdmissibleSimplex& s);

/// Symbolic normal form of a word under the defining relations: the
/// admissible simplex whose monomial equals the word, or nullopt for zero.
std::optional<AdmissibleSimplex> reduce_word(std::size_t n, const GeneratorWord& word);

/// Admissible simplices are cycles whose classes form a basis of MH_{k,l}(C_n)
/// for k <= kmax, and every block is torsion-free.
Report verify_admissible_basis(std::size_t n, std::size_t kmax);

/// Generators as dual classes, every defining relation, the duality
/// <p_x, [y]> = delta_{xy}, monomial counts, and generator words of length
/// <= 4 against their symbolic reduction.
Report verify_presentation(std::size_t n, std::size_t kmax);

}  // namespace maghom
