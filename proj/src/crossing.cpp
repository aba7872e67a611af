#include "curvecal/crossing.hpp"

#include <algorithm>
#include <set>

#include "curvecal/error.hpp"

namespace curvecal {

namespace {

bool cyclically_adjacent(const std::vector<CrossingId>& order, const CrossingId& p,
                         const CrossingId& q) {
  const std::size_t n = order.size();
  if (n < 2) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const CrossingId& next = order[(i + 1) % n];
    if ((order[i] == p && next == q) || (order[i] == q && next == p)) return true;
  }
  return false;
}

std::vector<CrossingId> without(const std::vector<CrossingId>& order, const Bigon& b) {
  std::vector<CrossingId> out;
  out.reserve(order.size());
  for (const auto& id : order)
    if (id != b.p && id != b.q) out.push_back(id);
  return out;
}

}  // namespace

int CrossingDiagram::sign(const CrossingId& id) const {
  auto it = signs_.find(id);
  if (it == signs_.end()) throw Error("unknown crossing '" + id + "'");
  return it->second;
}

std::int64_t CrossingDiagram::algebraic_sum() const noexcept {
  std::int64_t s = 0;
  for (const auto& [id, sg] : signs_) s += sg;
  return s;
}

CrossingDiagram build_diagram(std::vector<CrossingId> order_on_m,
                              std::vector<CrossingId> order_on_mprime,
                              std::map<CrossingId, int> signs) {
  std::set<CrossingId> ids_m;
  for (const auto& id : order_on_m) {
    if (!ids_m.insert(id).second) throw Error("duplicate crossing '" + id + "' along M");
  }
  std::set<CrossingId> ids_mp;
  for (const auto& id : order_on_mprime) {
    if (!ids_mp.insert(id).second) throw Error("duplicate crossing '" + id + "' along M'");
  }
  if (ids_m != ids_mp) throw Error("the two cyclic orders list different crossings");
  for (const auto& id : ids_m) {
    auto it = signs.find(id);
    if (it == signs.end()) throw Error("crossing '" + id + "' has no sign");
    if (it->second != 1 && it->second != -1) {
      throw Error("crossing '" + id + "' has sign " + std::to_string(it->second) +
                  ", expected +1 or -1");
    }
  }
  if (signs.size() != ids_m.size()) throw Error("sign given for a crossing not on the curves");

  CrossingDiagram d;
  d.order_m_ = std::move(order_on_m);
  d.order_mprime_ = std::move(order_on_mprime);
  d.signs_ = std::move(signs);
  return d;
}

bool is_bigon(const CrossingDiagram& d, const CrossingId& p, const CrossingId& q) {
  if (p == q) return false;
  auto sp = d.signs().find(p);
  auto sq = d.signs().find(q);
  if (sp == d.signs().end() || sq == d.signs().end()) return false;
  if (sp->second != -sq->second) return false;
  return cyclically_adjacent(d.order_on_m(), p, q) &&
         cyclically_adjacent(d.order_on_mprime(), p, q);
}

std::vector<Bigon> all_bigons(const CrossingDiagram& d) {
  std::set<Bigon> found;
  const auto& order = d.order_on_m();
  const std::size_t n = order.size();
  if (n < 2) return {};
  for (std::size_t i = 0; i < n; ++i) {
    const CrossingId& a = order[i];
    const CrossingId& b = order[(i + 1) % n];
    if (is_bigon(d, a, b)) found.insert(a < b ? Bigon{a, b} : Bigon{b, a});
  }
  return {found.begin(), found.end()};
}

std::optional<Bigon> find_bigon(const CrossingDiagram& d) {
  auto all = all_bigons(d);
  if (all.empty()) return std::nullopt;
  return all.front();
}

CrossingDiagram remove_bigon(const CrossingDiagram& d, const Bigon& b) {
  if (!is_bigon(d, b.p, b.q)) {
    throw Error("(" + b.p + ", " + b.q + ") is not a bigon of the diagram");
  }
  std::map<CrossingId, int> signs = d.signs();
  signs.erase(b.p);
  signs.erase(b.q);
  return build_diagram(without(d.order_on_m(), b), without(d.order_on_mprime(), b),
                       std::move(signs));
}

Reduction reduce_to_minimal(const CrossingDiagram& d) {
  Reduction r{d, 0, {}};
  while (auto b = find_bigon(r.diagram)) {
    r.diagram = remove_bigon(r.diagram, *b);
    r.trace.push_back(*b);
    ++r.steps;
  }
  return r;
}

}  // namespace curvecal
