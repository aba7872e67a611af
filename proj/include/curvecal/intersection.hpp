#pragma once

// Algebraic intersection pairing on a genus-k surface and change-of-basis
// matrices between canonical generator systems.
//
// Orientation convention: a_i . b_i = +1, every other pairing of canonical
// generators vanishes. For words l, g with coordinates (m, n), (m', n'):
//
//     l . g = sum_i (m_i n'_i - n_i m'_i)

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvecal/matrix.hpp"
#include "curvecal/words.hpp"

namespace curvecal {

std::int64_t pairing(const CurveWord& l, const CurveWord& g);
std::int64_t pairing(const AbelianCoords& l, const AbelianCoords& g);

// Pairings of a word against the canonical generators.
struct MuCoords {
  std::vector<std::int64_t> dot_alpha;  // l . a_i  (= -n_i)
  std::vector<std::int64_t> dot_beta;   // l . b_i  (=  m_i)

  friend bool operator==(const MuCoords&, const MuCoords&) = default;
};

MuCoords mu_coords(const CurveWord& l);

// sum_i |det [[l.b_i, -l.a_i], [g.b_i, -g.a_i]]|, a lower bound on the number
// of crossings of any transverse representatives of the two classes.
std::int64_t degree_lower_bound(const CurveWord& l, const CurveWord& g);

// "l = 2·a1 + 3·b1"-style expression of l modulo the commutator subgroup.
std::string linear_expression(const CurveWord& l);

struct BasisCandidate {
  int genus = 1;
  std::vector<CurveWord> theta;
  std::vector<CurveWord> gamma;

  // Validates counts and genus of every word.
  BasisCandidate(int genus, std::vector<CurveWord> theta, std::vector<CurveWord> gamma);

  static BasisCandidate canonical(int genus);
};

struct BasisMatrix {
  int genus = 1;
  // Rows theta_1..theta_k, gamma_1..gamma_k; row j = (x.b_1..x.b_k, -x.a_1..-x.a_k).
  IntMatrix h;
  std::int64_t det = 0;
};

// Builds H and its determinant from pairings with the canonical generators.
BasisMatrix basis_matrix(const BasisCandidate& c);

// Wraps an externally supplied matrix, recomputing the determinant. Throws
// if the shape is not 2k x 2k.
BasisMatrix make_basis_matrix(int genus, IntMatrix h);

// The reverse change of basis assembled from pairings of the canonical
// generators against the candidate: rows a_1..a_k, b_1..b_k, row x =
// (x.gamma_1..x.gamma_k, -x.theta_1..-x.theta_k).
IntMatrix reverse_basis_matrix(const BasisCandidate& c);

struct BasisVerdict {
  bool unimodular = false;
  std::int64_t det = 0;
  // sigma[i] = j (0-based) pairs canonical index i with candidate pair j.
  std::optional<std::vector<int>> block_permutation;
  std::vector<std::int64_t> block_dets;  // det of the 2x2 block for each i
  std::string diagnostics;
};

BasisVerdict verify_basis(const BasisMatrix& m);

}  // namespace curvecal
