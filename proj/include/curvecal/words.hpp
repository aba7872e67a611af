#pragma once

// Words in the canonical generators a1, b1, ..., ak, bk of the fundamental
// group of a closed oriented genus-k surface.  Words are kept freely reduced
// at all times; the surface relator is never applied at the word level.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace curvecal {

inline constexpr std::int64_t kDefaultMaxExponent = 1'000'000;

struct WordOptions {
  // Largest admissible |exponent| of a single syllable, before and after merging.
  std::int64_t max_exponent = kDefaultMaxExponent;
};

enum class GenKind : std::uint8_t { alpha, beta };

struct Generator {
  GenKind kind = GenKind::alpha;
  int index = 1;  // 1-based

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// One maximal run gen^exp of a word; exp is never zero in a stored word.
struct Syllable {
  Generator gen;
  std::int64_t exp = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class CurveWord {
 public:
  // Identity word on the genus-k surface. Throws GenusError for k < 1.
  explicit CurveWord(int genus);

  // Validates every index against genus, drops zero exponents and reduces.
  CurveWord(int genus, std::vector<Syllable> syllables, bool cyclic = false,
            const WordOptions& opts = {});

  static CurveWord alpha(int genus, int index, std::int64_t exp = 1);
  static CurveWord beta(int genus, int index, std::int64_t exp = 1);

  int genus() const noexcept { return genus_; }
  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  bool cyclic() const noexcept { return cyclic_; }
  bool is_identity() const noexcept { return syllables_.empty(); }

  // Number of letters, i.e. the sum of |exp| over syllables.
  std::int64_t letter_length() const noexcept;

  friend bool operator==(const CurveWord&, const CurveWord&) = default;

 private:
  struct Trusted {};
  CurveWord(Trusted, int genus, std::vector<Syllable> syllables, bool cyclic);

  friend CurveWord cyclic_reduce(const CurveWord& w, const WordOptions& opts);

  int genus_;
  std::vector<Syllable> syllables_;
  bool cyclic_ = false;
};

struct AbelianCoords {
  int genus = 1;
  std::vector<std::int64_t> m;  // exponent sums of a_i
  std::vector<std::int64_t> n;  // exponent sums of b_i

  explicit AbelianCoords(int genus);
  AbelianCoords(std::vector<std::int64_t> m, std::vector<std::int64_t> n);

  bool is_zero() const noexcept;

  friend bool operator==(const AbelianCoords&, const AbelianCoords&) = default;
  friend AbelianCoords operator+(const AbelianCoords& a, const AbelianCoords& b);
  friend AbelianCoords operator-(const AbelianCoords& a);
};

// Unreduced token list, as written by the user.
struct ProductForm {
  int genus = 1;
  std::vector<Syllable> tokens;
};

CurveWord parse_word(std::string_view text, int genus, const WordOptions& opts = {});
ProductForm parse_product_form(std::string_view text, int genus,
                               const WordOptions& opts = {});
std::string render(const CurveWord& w);
std::string render(const Generator& g);

CurveWord free_reduce(const CurveWord& w, const WordOptions& opts = {});
CurveWord cyclic_reduce(const CurveWord& w, const WordOptions& opts = {});
CurveWord concat(const CurveWord& l, const CurveWord& g, const WordOptions& opts = {});
CurveWord invert(const CurveWord& l);
CurveWord commutator(const CurveWord& d, const CurveWord& e, const WordOptions& opts = {});
AbelianCoords abelianize(const CurveWord& l);

// Product of [a_i, b_i] over i = 1..genus.
CurveWord surface_relator(int genus);

}  // namespace curvecal
