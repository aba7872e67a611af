#include "curvecal/heegaard.hpp"

#include <charconv>
#include <limits>

#include "curvecal/checked.hpp"
#include "curvecal/detail/matching.hpp"
#include "curvecal/error.hpp"
#include "curvecal/intersection.hpp"

namespace curvecal {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

HeegaardDiagram build_heegaard(int genus, const std::vector<std::string>& words,
                               const WordOptions& opts) {
  if (genus < 1) throw GenusError("genus must be at least 1");
  if (words.size() != static_cast<std::size_t>(genus)) {
    throw Error("genus " + std::to_string(genus) + " diagram needs " + std::to_string(genus) +
                " attaching words, got " + std::to_string(words.size()));
  }
  HeegaardDiagram d{genus, {}};
  for (const auto& w : words) d.attaching.push_back(parse_word(w, genus, opts));
  return d;
}

HeegaardDiagram parse_heegaard_text(std::string_view text, const WordOptions& opts) {
  std::vector<std::string> lines;
  std::size_t line_no = 0;
  std::size_t genus_line = 0;
  int genus = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (genus == 0) {
      if (line.substr(0, 5) != "genus") {
        throw Error("line " + std::to_string(line_no) + ": expected 'genus k'");
      }
      auto num = trim(line.substr(5));
      auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), genus);
      if (ec != std::errc{} || p != num.data() + num.size() || genus < 1 ||
          line.size() == 5 || (line[5] != ' ' && line[5] != '\t')) {
        throw Error("line " + std::to_string(line_no) + ": bad genus declaration");
      }
      genus_line = line_no;
      continue;
    }
    lines.emplace_back(line);
  }
  if (genus == 0) throw Error("missing 'genus k' line");
  if (lines.size() != static_cast<std::size_t>(genus)) {
    throw Error("genus " + std::to_string(genus) + " declared on line " +
                std::to_string(genus_line) + " but " + std::to_string(lines.size()) +
                " attaching words given");
  }
  return build_heegaard(genus, lines, opts);
}

CurveWord project_to_handlebody(const CurveWord& w) {
  std::vector<Syllable> kept;
  for (const Syllable& s : w.syllables()) {
    if (s.gen.kind == GenKind::beta) kept.push_back(s);
  }
  // b-runs separated by deleted a-runs may merge past the syllable limit.
  return CurveWord(w.genus(), std::move(kept), false,
                   WordOptions{std::numeric_limits<std::int64_t>::max()});
}

Presentation presentation(const HeegaardDiagram& d) {
  const auto k = static_cast<std::size_t>(d.genus);
  Presentation p{d.genus, {}, IntMatrix(d.attaching.size(), k)};
  for (std::size_t r = 0; r < d.attaching.size(); ++r) {
    CurveWord rel = project_to_handlebody(d.attaching[r]);
    AbelianCoords c = abelianize(rel);
    for (std::size_t i = 0; i < k; ++i) p.abelianization(r, i) = c.n[i];
    p.relators.push_back(std::move(rel));
  }
  return p;
}

std::string render(const Presentation& p) {
  std::string out = "<";
  for (int i = 1; i <= p.genus; ++i) {
    if (i > 1) out += ", ";
    out += "b" + std::to_string(i);
  }
  out += " |";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    out += r == 0 ? " " : ", ";
    out += p.relators[r].is_identity() ? "1" : render(p.relators[r]);
  }
  out += ">";
  return out;
}

bool homogeneity_check(const ProductForm& w, int j) {
  if (j < 1 || j > w.genus) {
    throw GenusError("index " + std::to_string(j) + " outside genus " + std::to_string(w.genus));
  }
  std::int64_t a_pos = 0, a_neg = 0, b_pos = 0, b_neg = 0;
  for (const Syllable& s : w.tokens) {
    if (s.gen.index != j) continue;
    const bool is_alpha = s.gen.kind == GenKind::alpha;
    if (s.exp > 0) {
      (is_alpha ? a_pos : b_pos) += s.exp;
    } else {
      (is_alpha ? a_neg : b_neg) -= s.exp;
    }
  }
  return a_pos == a_neg && b_pos == b_neg;
}

bool homogeneity_check(const CurveWord& w, int j) {
  return homogeneity_check(
      ProductForm{w.genus(), {w.syllables().begin(), w.syllables().end()}}, j);
}

std::optional<BlockDecomposition> block_decompose(const HeegaardDiagram& d) {
  const auto k = static_cast<std::size_t>(d.genus);
  if (d.attaching.size() != k) throw Error("diagram has the wrong number of attaching words");
  // pairs[j][i] = theta_j . a_i
  std::vector<std::vector<std::int64_t>> pairs(k, std::vector<std::int64_t>(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      pairs[j][i] = pairing(d.attaching[j], CurveWord::alpha(d.genus, static_cast<int>(i) + 1));
    }
  }
  // theta_j may serve index i only if it pairs trivially with every other a_l.
  std::vector<std::vector<bool>> ok(k, std::vector<bool>(k, false));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      bool exclusive = true;
      for (std::size_t l = 0; l < k; ++l)
        if (l != i && pairs[j][l] != 0) exclusive = false;
      ok[i][j] = exclusive;
    }
  }
  auto matched = detail::perfect_matching(ok);
  if (!matched) return std::nullopt;
  BlockDecomposition out;
  out.sigma = *matched;
  for (std::size_t i = 0; i < k; ++i) {
    out.orders.push_back(checked::abs(pairs[static_cast<std::size_t>(out.sigma[i])][i]));
  }
  return out;
}

ClassificationReport classify(const HeegaardDiagram& d) {
  ClassificationReport rep;
  auto blocks = block_decompose(d);
  if (!blocks) {
    rep.pi1 = "undecided";
    return rep;
  }
  rep.decided = true;
  for (int s : blocks->sigma) rep.sigma.push_back(s + 1);
  rep.orders = blocks->orders;

  // Order-1 blocks are product cobordisms and drop out of the free product.
  std::vector<std::string> factors;
  bool has_infinite = false;
  int finite_factors = 0;
  for (std::int64_t r : rep.orders) {
    if (r == 1) continue;
    if (r == 0) {
      factors.emplace_back("Z");
      has_infinite = true;
    } else {
      factors.push_back("Z/" + std::to_string(r));
      ++finite_factors;
    }
  }
  rep.simply_connected = factors.empty();
  rep.finite = !has_infinite && finite_factors <= 1;
  rep.prime = factors.size() <= 1;
  if (factors.empty()) {
    rep.pi1 = "1";
  } else {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) rep.pi1 += " * ";
      rep.pi1 += factors[i];
    }
  }
  return rep;
}

}  // namespace curvecal
