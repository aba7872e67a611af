#include "curvecal/words.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <utility>

#include "curvecal/checked.hpp"
#include "curvecal/error.hpp"

namespace curvecal {

namespace {

void check_genus(int genus) {
  if (genus < 1) throw GenusError("genus must be at least 1, got " + std::to_string(genus));
}

void check_index(const Generator& g, int genus) {
  if (g.index < 1 || g.index > genus) {
    throw GenusError("generator " + render(g) + " outside genus " + std::to_string(genus));
  }
}

void check_exponent(std::int64_t e, const WordOptions& opts) {
  if (checked::abs(e) > opts.max_exponent) {
    throw LimitError("exponent " + std::to_string(e) + " exceeds limit " +
                     std::to_string(opts.max_exponent));
  }
}

// Stack-based free reduction: merge equal neighbours, drop zero runs, cascade.
std::vector<Syllable> reduce(std::span<const Syllable> in, const WordOptions& opts) {
  std::vector<Syllable> out;
  out.reserve(in.size());
  for (const Syllable& s : in) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      std::int64_t merged = checked::add(out.back().exp, s.exp);
      if (merged == 0) {
        out.pop_back();
      } else {
        check_exponent(merged, opts);
        out.back().exp = merged;
      }
    } else {
      check_exponent(s.exp, opts);
      out.push_back(s);
    }
  }
  return out;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Syllable> tokenize(std::string_view text, int genus, const WordOptions& opts) {
  std::vector<Syllable> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    Syllable s;
    if (text[i] == 'a') {
      s.gen.kind = GenKind::alpha;
    } else if (text[i] == 'b') {
      s.gen.kind = GenKind::beta;
    } else {
      throw ParseError(std::string("expected 'a' or 'b', found '") + text[i] + "'", i);
    }
    ++i;
    if (i >= n || !is_digit(text[i])) throw ParseError("expected generator index", i);
    std::size_t digits_end = i;
    while (digits_end < n && is_digit(text[digits_end])) ++digits_end;
    int index = 0;
    auto [p, ec] = std::from_chars(text.data() + i, text.data() + digits_end, index);
    if (ec != std::errc{} || p != text.data() + digits_end) {
      throw ParseError("generator index out of range", i);
    }
    if (index < 1) throw ParseError("generator index must be at least 1", i);
    s.gen.index = index;
    i = digits_end;
    if (index > genus) {
      throw GenusError("generator " + render(s.gen) + " at position " + std::to_string(start) +
                       " outside genus " + std::to_string(genus));
    }
    if (i < n && text[i] == '^') {
      ++i;
      bool negative = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      if (i >= n || !is_digit(text[i])) throw ParseError("expected exponent", i);
      std::size_t exp_end = i;
      while (exp_end < n && is_digit(text[exp_end])) ++exp_end;
      std::int64_t mag = 0;
      auto [q, ec2] = std::from_chars(text.data() + i, text.data() + exp_end, mag);
      if (ec2 == std::errc::result_out_of_range || mag > opts.max_exponent) {
        throw LimitError("exponent at position " + std::to_string(i) + " exceeds limit " +
                         std::to_string(opts.max_exponent));
      }
      if (ec2 != std::errc{} || q != text.data() + exp_end) throw ParseError("bad exponent", i);
      if (mag == 0) throw ParseError("zero exponent", i);
      s.exp = negative ? -mag : mag;
      i = exp_end;
    }
    if (i < n && !is_space(text[i])) {
      throw ParseError(std::string("unexpected '") + text[i] + "' after token", i);
    }
    tokens.push_back(s);
  }
  return tokens;
}

}  // namespace

CurveWord::CurveWord(int genus) : genus_(genus) { check_genus(genus); }

CurveWord::CurveWord(int genus, std::vector<Syllable> syllables, bool cyclic,
                     const WordOptions& opts)
    : genus_(genus), cyclic_(cyclic) {
  check_genus(genus);
  for (const Syllable& s : syllables) check_index(s.gen, genus);
  syllables_ = reduce(syllables, opts);
}

CurveWord::CurveWord(Trusted, int genus, std::vector<Syllable> syllables, bool cyclic)
    : genus_(genus), syllables_(std::move(syllables)), cyclic_(cyclic) {}

CurveWord CurveWord::alpha(int genus, int index, std::int64_t exp) {
  return CurveWord(genus, {{{GenKind::alpha, index}, exp}});
}

CurveWord CurveWord::beta(int genus, int index, std::int64_t exp) {
  return CurveWord(genus, {{{GenKind::beta, index}, exp}});
}

std::int64_t CurveWord::letter_length() const noexcept {
  std::int64_t len = 0;
  for (const Syllable& s : syllables_) len += s.exp < 0 ? -s.exp : s.exp;
  return len;
}

AbelianCoords::AbelianCoords(int g) : genus(g) {
  check_genus(g);
  m.assign(static_cast<std::size_t>(g), 0);
  n.assign(static_cast<std::size_t>(g), 0);
}

AbelianCoords::AbelianCoords(std::vector<std::int64_t> m_in, std::vector<std::int64_t> n_in)
    : genus(static_cast<int>(m_in.size())), m(std::move(m_in)), n(std::move(n_in)) {
  check_genus(genus);
  if (m.size() != n.size()) throw GenusError("coordinate vectors differ in length");
}

bool AbelianCoords::is_zero() const noexcept {
  for (auto v : m)
    if (v != 0) return false;
  for (auto v : n)
    if (v != 0) return false;
  return true;
}

AbelianCoords operator+(const AbelianCoords& a, const AbelianCoords& b) {
  if (a.genus != b.genus) throw GenusError("genus mismatch in coordinate sum");
  AbelianCoords r(a.genus);
  for (std::size_t i = 0; i < a.m.size(); ++i) {
    r.m[i] = checked::add(a.m[i], b.m[i]);
    r.n[i] = checked::add(a.n[i], b.n[i]);
  }
  return r;
}

AbelianCoords operator-(const AbelianCoords& a) {
  AbelianCoords r(a.genus);
  for (std::size_t i = 0; i < a.m.size(); ++i) {
    r.m[i] = checked::neg(a.m[i]);
    r.n[i] = checked::neg(a.n[i]);
  }
  return r;
}

CurveWord parse_word(std::string_view text, int genus, const WordOptions& opts) {
  check_genus(genus);
  return CurveWord(genus, tokenize(text, genus, opts), false, opts);
}

ProductForm parse_product_form(std::string_view text, int genus, const WordOptions& opts) {
  check_genus(genus);
  return ProductForm{genus, tokenize(text, genus, opts)};
}

std::string render(const Generator& g) {
  return (g.kind == GenKind::alpha ? "a" : "b") + std::to_string(g.index);
}

std::string render(const CurveWord& w) {
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += render(s.gen);
    if (s.exp != 1) out += '^' + std::to_string(s.exp);
  }
  return out;
}

CurveWord free_reduce(const CurveWord& w, const WordOptions& opts) {
  return CurveWord(w.genus(), {w.syllables().begin(), w.syllables().end()}, w.cyclic(), opts);
}

CurveWord cyclic_reduce(const CurveWord& w, const WordOptions& opts) {
  std::vector<Syllable> s = reduce(w.syllables(), opts);
  // Conjugating by the last syllable folds it into the first; repeat while
  // the ends share a generator.
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
    std::int64_t merged = checked::add(s[lo].exp, s[hi - 1].exp);
    --hi;
    if (merged == 0) {
      ++lo;
    } else {
      check_exponent(merged, opts);
      s[lo].exp = merged;
      break;
    }
  }
  std::vector<Syllable> out(s.begin() + static_cast<std::ptrdiff_t>(lo),
                            s.begin() + static_cast<std::ptrdiff_t>(hi));
  return CurveWord(CurveWord::Trusted{}, w.genus(), std::move(out), true);
}

CurveWord concat(const CurveWord& l, const CurveWord& g, const WordOptions& opts) {
  if (l.genus() != g.genus()) {
    throw GenusError("cannot concatenate words of genus " + std::to_string(l.genus()) + " and " +
                     std::to_string(g.genus()));
  }
  std::vector<Syllable> all(l.syllables().begin(), l.syllables().end());
  all.insert(all.end(), g.syllables().begin(), g.syllables().end());
  return CurveWord(l.genus(), std::move(all), false, opts);
}

CurveWord invert(const CurveWord& l) {
  std::vector<Syllable> out;
  out.reserve(l.syllables().size());
  for (auto it = l.syllables().rbegin(); it != l.syllables().rend(); ++it) {
    out.push_back({it->gen, -it->exp});
  }
  return CurveWord(l.genus(), std::move(out), l.cyclic(), {std::numeric_limits<std::int64_t>::max()});
}

CurveWord commutator(const CurveWord& d, const CurveWord& e, const WordOptions& opts) {
  return concat(concat(d, e, opts), concat(invert(d), invert(e), opts), opts);
}

AbelianCoords abelianize(const CurveWord& l) {
  AbelianCoords c(l.genus());
  for (const Syllable& s : l.syllables()) {
    auto& slot = s.gen.kind == GenKind::alpha ? c.m : c.n;
    auto& v = slot[static_cast<std::size_t>(s.gen.index - 1)];
    v = checked::add(v, s.exp);
  }
  return c;
}

CurveWord surface_relator(int genus) {
  check_genus(genus);
  std::vector<Syllable> s;
  for (int i = 1; i <= genus; ++i) {
    s.push_back({{GenKind::alpha, i}, 1});
    s.push_back({{GenKind::beta, i}, 1});
    s.push_back({{GenKind::alpha, i}, -1});
    s.push_back({{GenKind::beta, i}, -1});
  }
  return CurveWord(genus, std::move(s));
}

}  // namespace curvecal
