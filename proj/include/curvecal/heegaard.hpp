#pragma once

// Closed orientable 3-manifolds given by genus-k attaching data: the
// attaching curves theta_1..theta_k of the 2-handles written as words on the
// level surface, where a_i bounds the core disc of the i-th 1-handle.
//
// Collapsing the a_i gives pi1 of the handlebody, free on b_1..b_k; each
// attaching curve contributes one relator.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvecal/matrix.hpp"
#include "curvecal/words.hpp"

namespace curvecal {

struct HeegaardDiagram {
  int genus = 1;
  std::vector<CurveWord> attaching;
};

HeegaardDiagram build_heegaard(int genus, const std::vector<std::string>& words,
                               const WordOptions& opts = {});

// Line-oriented text: "genus k", then k attaching words; '#' starts a comment
// and blank lines are ignored.
HeegaardDiagram parse_heegaard_text(std::string_view text, const WordOptions& opts = {});

// Deletes every a-letter and freely reduces the remaining b-letters.
CurveWord project_to_handlebody(const CurveWord& w);

struct Presentation {
  int genus = 1;
  std::vector<CurveWord> relators;  // b-letters only
  IntMatrix abelianization;         // row i = b-exponent sums of relator i
};

Presentation presentation(const HeegaardDiagram& d);

// "<b1, b2 | b1^3, b2^4>"
std::string render(const Presentation& p);

// Occurrences of a_j and a_j^-1 agree, and likewise for b_j.
bool homogeneity_check(const ProductForm& w, int j);
bool homogeneity_check(const CurveWord& w, int j);

struct BlockDecomposition {
  std::vector<int> sigma;          // sigma[i] = attaching word paired with a_{i+1}, 0-based
  std::vector<std::int64_t> orders;  // r_i = |theta_sigma(i) . a_i|
};

// Finds sigma with theta_sigma(j) . a_i = 0 for all j != i.
std::optional<BlockDecomposition> block_decompose(const HeegaardDiagram& d);

struct ClassificationReport {
  bool decided = false;
  std::vector<int> sigma;  // 1-based for reporting
  std::vector<std::int64_t> orders;
  std::string pi1;  // "1", "Z", "Z/5", "Z/2 * Z/3", or "undecided"
  bool simply_connected = false;
  bool finite = false;
  bool prime = false;
};

ClassificationReport classify(const HeegaardDiagram& d);

}  // namespace curvecal
