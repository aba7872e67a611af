#include "curvecal/cobordism.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>
#include <utility>

#include "curvecal/error.hpp"

namespace curvecal {

namespace {

std::string show(const MorseType& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
         "," + std::to_string(t[3]) + "}";
}

bool commutes(const CobordismChain& c, const CriticalRecord& a, const CriticalRecord& b) {
  return a.index == b.index || c.incidence(a.id, b.id) == 0;
}

std::size_t position(const CobordismChain& c, const std::string& id) {
  const auto& r = c.records();
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i].id == id) return i;
  throw Error("unknown critical point '" + id + "'");
}

// Order that places `first` and `second` next to each other, or an
// explanation of why no legal rearrangement does.
struct Adjacency {
  std::vector<std::size_t> order;
  std::string problem;
};

Adjacency make_adjacent(const CobordismChain& c, std::size_t p1, std::size_t p2) {
  const auto& r = c.records();
  const std::size_t lo = std::min(p1, p2);
  const std::size_t hi = std::max(p1, p2);
  // Records strictly between the pair go left of it if they commute with
  // the earlier record, otherwise right of it if they commute with the later.
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  for (std::size_t x = lo + 1; x < hi; ++x) {
    if (commutes(c, r[x], r[lo])) {
      left.push_back(x);
    } else if (commutes(c, r[x], r[hi])) {
      right.push_back(x);
    } else {
      return {{}, "'" + r[x].id + "' is paired with both '" + r[lo].id + "' and '" + r[hi].id + "'"};
    }
  }
  for (std::size_t a : right) {
    for (std::size_t b : left) {
      if (a < b && !commutes(c, r[a], r[b])) {
        return {{}, "'" + r[a].id + "' and '" + r[b].id + "' cannot be exchanged"};
      }
    }
  }
  Adjacency out;
  for (std::size_t x = 0; x < lo; ++x) out.order.push_back(x);
  out.order.insert(out.order.end(), left.begin(), left.end());
  out.order.push_back(lo);
  out.order.push_back(hi);
  out.order.insert(out.order.end(), right.begin(), right.end());
  for (std::size_t x = hi + 1; x < r.size(); ++x) out.order.push_back(x);
  return out;
}

}  // namespace

MorseType CobordismChain::type() const noexcept {
  MorseType t{0, 0, 0, 0};
  for (const auto& r : records_) ++t[static_cast<std::size_t>(r.index)];
  return t;
}

int CobordismChain::euler_characteristic() const noexcept {
  MorseType t = type();
  return t[0] - t[1] + t[2] - t[3];
}

bool CobordismChain::closed() const noexcept {
  MorseType t = type();
  return t[0] >= 1 && t[3] >= 1;
}

const CriticalRecord* CobordismChain::find(const std::string& id) const {
  for (const auto& r : records_)
    if (r.id == id) return &r;
  return nullptr;
}

std::int64_t CobordismChain::incidence(const std::string& a, const std::string& b) const {
  const CriticalRecord* ra = find(a);
  const CriticalRecord* rb = find(b);
  if (!ra || !rb) return 0;
  if (rb->index == ra->index + 1) {
    auto it = ra->incidence.find(b);
    return it == ra->incidence.end() ? 0 : it->second;
  }
  if (ra->index == rb->index + 1) {
    auto it = rb->incidence.find(a);
    return it == rb->incidence.end() ? 0 : it->second;
  }
  return 0;
}

CobordismChain build_chain(std::vector<CriticalRecord> records) {
  std::map<std::string, int> index_of;
  for (const auto& r : records) {
    if (r.index < 0 || r.index > 3) {
      throw Error("critical point '" + r.id + "' has index " + std::to_string(r.index) +
                  ", expected 0..3");
    }
    if (r.id.empty()) throw Error("critical point with empty id");
    if (!index_of.emplace(r.id, r.index).second) {
      throw Error("duplicate critical point id '" + r.id + "'");
    }
  }
  for (const auto& r : records) {
    for (const auto& [partner, value] : r.incidence) {
      auto it = index_of.find(partner);
      if (it == index_of.end()) {
        throw Error("critical point '" + r.id + "' references unknown partner '" + partner + "'");
      }
      if (it->second != r.index + 1) {
        throw Error("incidence from '" + r.id + "' (index " + std::to_string(r.index) + ") to '" +
                    partner + "' (index " + std::to_string(it->second) +
                    ") must target index " + std::to_string(r.index + 1));
      }
    }
  }
  CobordismChain c;
  c.records_ = std::move(records);
  if (c.closed() && c.euler_characteristic() != 0) {
    throw Error("closed chain of type " + show(c.type()) + " has Euler characteristic " +
                std::to_string(c.euler_characteristic()) + ", expected 0");
  }
  return c;
}

std::vector<int> boundary_genus_profile(const CobordismChain& chain) {
  MorseType t = chain.type();
  if (t[0] != 1 || t[3] != 1) {
    throw Error("genus profile needs exactly one minimum and one maximum, chain has type " +
                show(t));
  }
  const auto& r = chain.records();
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i].index < r[i - 1].index) {
      throw Error("genus profile needs records sorted by index; '" + r[i].id + "' follows '" +
                  r[i - 1].id + "'");
    }
  }
  std::vector<int> profile;
  int genus = 0;
  for (const auto& rec : r) {
    switch (rec.index) {
      case 0:
        profile.push_back(genus);
        break;
      case 1:
        profile.push_back(++genus);
        break;
      case 2:
        if (genus == 0) throw Error("index-2 point '" + rec.id + "' on a sphere level");
        profile.push_back(--genus);
        break;
      default:
        break;
    }
  }
  return profile;
}

CobordismChain rearrange(const CobordismChain& chain, const std::vector<std::size_t>& new_order) {
  const auto& r = chain.records();
  const std::size_t n = r.size();
  if (new_order.size() != n) throw Error("permutation has the wrong length");
  std::vector<std::size_t> new_pos(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (new_order[p] >= n || new_pos[new_order[p]] != n) throw Error("not a permutation");
    new_pos[new_order[p]] = p;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (new_pos[a] > new_pos[b] && !commutes(chain, r[a], r[b])) {
        throw Error("illegal commutation of '" + r[a].id + "' and '" + r[b].id +
                    "': pairing " + std::to_string(chain.incidence(r[a].id, r[b].id)));
      }
    }
  }
  std::vector<CriticalRecord> out;
  out.reserve(n);
  for (std::size_t p : new_order) out.push_back(r[p]);
  return build_chain(std::move(out));
}

std::optional<std::string> cancel_obstruction(const CobordismChain& chain,
                                              const std::string& lower,
                                              const std::string& upper) {
  const CriticalRecord* lo = chain.find(lower);
  const CriticalRecord* up = chain.find(upper);
  if (!lo) return "unknown critical point '" + lower + "'";
  if (!up) return "unknown critical point '" + upper + "'";
  if (up->index != lo->index + 1) {
    return "indices " + std::to_string(lo->index) + " and " + std::to_string(up->index) +
           " are not adjacent";
  }
  const std::int64_t p = chain.incidence(lower, upper);
  if (p != 1 && p != -1) {
    return "pairing of '" + lower + "' and '" + upper + "' is " + std::to_string(p) +
           ", cancellation needs +-1";
  }
  Adjacency adj = make_adjacent(chain, position(chain, lower), position(chain, upper));
  if (!adj.problem.empty()) return "cannot bring '" + lower + "' and '" + upper +
                                   "' together: " + adj.problem;
  return std::nullopt;
}

CobordismChain cancel_pair(const CobordismChain& chain, const std::string& lower,
                           const std::string& upper) {
  if (auto why = cancel_obstruction(chain, lower, upper)) throw Error(*why);
  Adjacency adj = make_adjacent(chain, position(chain, lower), position(chain, upper));
  CobordismChain slid = rearrange(chain, adj.order);
  std::vector<CriticalRecord> kept;
  for (const auto& rec : slid.records()) {
    if (rec.id == lower || rec.id == upper) continue;
    CriticalRecord copy = rec;
    copy.incidence.erase(lower);
    copy.incidence.erase(upper);
    kept.push_back(std::move(copy));
  }
  return build_chain(std::move(kept));
}

Normalization normalize(const CobordismChain& chain) {
  Normalization out{chain, {}};

  // Lowest (lower id, upper id) cancellable pair whose lower index is in
  // `lower_indices`.
  auto next_move = [&](std::initializer_list<int> lower_indices)
      -> std::optional<std::pair<std::string, std::string>> {
    const MorseType t = out.chain.type();
    std::set<std::pair<std::string, std::string>> candidates;
    for (const auto& rec : out.chain.records()) {
      const bool wanted = std::find(lower_indices.begin(), lower_indices.end(), rec.index) !=
                          lower_indices.end();
      if (!wanted) continue;
      // Keep the last minimum and the last maximum.
      if (rec.index == 0 && t[0] <= 1) continue;
      if (rec.index == 2 && t[3] <= 1) continue;
      for (const auto& [partner, value] : rec.incidence) {
        if (value == 1 || value == -1) candidates.emplace(rec.id, partner);
      }
    }
    for (const auto& [lo, up] : candidates) {
      if (!cancel_obstruction(out.chain, lo, up)) return std::make_pair(lo, up);
    }
    return std::nullopt;
  };

  auto apply = [&](const std::pair<std::string, std::string>& m) {
    const std::int64_t p = out.chain.incidence(m.first, m.second);
    out.chain = cancel_pair(out.chain, m.first, m.second);
    out.moves.push_back({m.first, m.second, p, out.chain.type()});
  };

  while (auto m = next_move({0, 2})) apply(*m);
  while (auto m = next_move({1})) apply(*m);
  return out;
}

CobordismChain dual_chain(const CobordismChain& chain) {
  const auto& r = chain.records();
  std::vector<CriticalRecord> out;
  out.reserve(r.size());
  for (auto it = r.rbegin(); it != r.rend(); ++it) {
    out.push_back({it->id, 3 - it->index, {}});
  }
  for (const auto& rec : r) {
    for (const auto& [partner, value] : rec.incidence) {
      for (auto& d : out) {
        if (d.id == partner) d.incidence[rec.id] = value;
      }
    }
  }
  return build_chain(std::move(out));
}

}  // namespace curvecal
