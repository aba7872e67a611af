#pragma once

// Test-only oracles and random generators. The oracles work on flat letter
// sequences and never call the library routine they are used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "curvecal/crossing.hpp"
#include "curvecal/words.hpp"

namespace oracle {

using curvecal::CurveWord;
using curvecal::GenKind;
using curvecal::Generator;
using curvecal::Syllable;

struct Letter {
  Generator gen;
  int sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline std::vector<Letter> letters(const std::vector<Syllable>& syllables) {
  std::vector<Letter> out;
  for (const auto& s : syllables) {
    const int sg = s.exp > 0 ? 1 : -1;
    for (std::int64_t e = 0; e < (s.exp > 0 ? s.exp : -s.exp); ++e) out.push_back({s.gen, sg});
  }
  return out;
}

inline std::vector<Letter> letters(const CurveWord& w) {
  return letters(std::vector<Syllable>(w.syllables().begin(), w.syllables().end()));
}

inline std::vector<Letter> reduce_letters(const std::vector<Letter>& in) {
  std::vector<Letter> st;
  for (const auto& l : in) {
    if (!st.empty() && st.back().gen == l.gen && st.back().sign == -l.sign) {
      st.pop_back();
    } else {
      st.push_back(l);
    }
  }
  return st;
}

// One-pass exponent counter: (m, n).
inline std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> count_letters(
    const std::vector<Letter>& ls, int genus) {
  std::vector<std::int64_t> m(static_cast<std::size_t>(genus), 0);
  std::vector<std::int64_t> n(static_cast<std::size_t>(genus), 0);
  for (const auto& l : ls) {
    (l.gen.kind == GenKind::alpha ? m : n)[static_cast<std::size_t>(l.gen.index - 1)] += l.sign;
  }
  return {m, n};
}

// Pairing of single canonical letters: a_i.b_i = 1, b_i.a_i = -1, else 0.
inline int letter_pairing(const Generator& x, const Generator& y) {
  if (x.index != y.index) return 0;
  if (x.kind == GenKind::alpha && y.kind == GenKind::beta) return 1;
  if (x.kind == GenKind::beta && y.kind == GenKind::alpha) return -1;
  return 0;
}

// Bilinear expansion over every pair of letters.
inline std::int64_t bilinear_pairing(const CurveWord& l, const CurveWord& g) {
  std::int64_t acc = 0;
  for (const auto& x : letters(l))
    for (const auto& y : letters(g)) acc += x.sign * y.sign * letter_pairing(x.gen, y.gen);
  return acc;
}

// Minimal length over conjugates by repeated rotate-and-reduce.
inline std::size_t min_conjugate_length(const CurveWord& w) {
  std::vector<Letter> cur = reduce_letters(letters(w));
  for (;;) {
    std::vector<Letter> best = cur;
    for (std::size_t r = 1; r < cur.size(); ++r) {
      std::vector<Letter> rot(cur.begin() + static_cast<std::ptrdiff_t>(r), cur.end());
      rot.insert(rot.end(), cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(r));
      rot = reduce_letters(rot);
      if (rot.size() < best.size()) best = rot;
    }
    if (best.size() == cur.size()) return cur.size();
    cur = best;
  }
}

// Is `b` a cyclic rotation of `a`?
inline bool is_rotation(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = a[(i + r) % a.size()] == b[i];
    if (same) return true;
  }
  return false;
}

// --- crossing diagrams ----------------------------------------------------

struct PlainDiagram {
  std::vector<std::string> m, mp;
  std::map<std::string, int> signs;
};

inline bool adjacent(const std::vector<std::string>& order, const std::string& p,
                     const std::string& q) {
  const auto n = order.size();
  if (n < 2) return false;
  const auto ip = std::find(order.begin(), order.end(), p) - order.begin();
  const auto iq = std::find(order.begin(), order.end(), q) - order.begin();
  const auto d = (ip - iq + static_cast<std::ptrdiff_t>(n)) % static_cast<std::ptrdiff_t>(n);
  return d == 1 || d == static_cast<std::ptrdiff_t>(n) - 1;
}

inline PlainDiagram delete_pair(PlainDiagram d, const std::string& p, const std::string& q) {
  auto drop = [&](std::vector<std::string>& v) {
    v.erase(std::remove_if(v.begin(), v.end(), [&](const auto& x) { return x == p || x == q; }),
            v.end());
  };
  drop(d.m);
  drop(d.mp);
  d.signs.erase(p);
  d.signs.erase(q);
  return d;
}

// Every final crossing count reachable by some order of bigon removals.
inline void reachable_final_sizes(const PlainDiagram& d, std::set<std::size_t>& out) {
  bool any = false;
  for (std::size_t i = 0; i < d.m.size(); ++i) {
    for (std::size_t j = i + 1; j < d.m.size(); ++j) {
      const auto& p = d.m[i];
      const auto& q = d.m[j];
      if (d.signs.at(p) == d.signs.at(q)) continue;
      if (!adjacent(d.m, p, q) || !adjacent(d.mp, p, q)) continue;
      any = true;
      reachable_final_sizes(delete_pair(d, p, q), out);
    }
  }
  if (!any) out.insert(d.m.size());
}

// --- random generation ----------------------------------------------------

inline CurveWord random_word(std::mt19937_64& rng, int genus, int max_letters) {
  std::uniform_int_distribution<int> len(0, max_letters);
  std::uniform_int_distribution<int> idx(1, genus);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Syllable> s;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    s.push_back({{coin(rng) ? GenKind::alpha : GenKind::beta, idx(rng)}, coin(rng) ? 1 : -1});
  }
  return CurveWord(genus, std::move(s));
}

inline std::vector<Syllable> random_raw(std::mt19937_64& rng, int genus, int max_letters) {
  std::uniform_int_distribution<int> len(0, max_letters);
  std::uniform_int_distribution<int> idx(1, genus);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> ex(-3, 3);
  std::vector<Syllable> s;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    s.push_back({{coin(rng) ? GenKind::alpha : GenKind::beta, idx(rng)}, ex(rng)});
  }
  return s;
}

inline PlainDiagram random_diagram(std::mt19937_64& rng, int max_crossings) {
  std::uniform_int_distribution<int> cnt(0, max_crossings);
  std::uniform_int_distribution<int> coin(0, 1);
  const int n = cnt(rng);
  PlainDiagram d;
  for (int i = 0; i < n; ++i) {
    std::string id = "x" + std::to_string(i);
    d.m.push_back(id);
    d.signs[id] = coin(rng) ? 1 : -1;
  }
  d.mp = d.m;
  std::shuffle(d.m.begin(), d.m.end(), rng);
  std::shuffle(d.mp.begin(), d.mp.end(), rng);
  return d;
}

inline curvecal::CrossingDiagram to_diagram(const PlainDiagram& d) {
  return curvecal::build_diagram(d.m, d.mp, d.signs);
}

}  // namespace oracle
