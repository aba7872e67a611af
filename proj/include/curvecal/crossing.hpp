#pragma once

// Combinatorial record of two transverse closed curves M, M' on a surface:
// signed crossings and the cyclic order in which each curve meets them.
// A bigon is a pair of opposite-sign crossings adjacent along both curves;
// removing it models the isotopy that pushes one arc across the disc.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvecal {

using CrossingId = std::string;

class CrossingDiagram {
 public:
  CrossingDiagram() = default;

  const std::vector<CrossingId>& order_on_m() const noexcept { return order_m_; }
  const std::vector<CrossingId>& order_on_mprime() const noexcept { return order_mprime_; }
  const std::map<CrossingId, int>& signs() const noexcept { return signs_; }

  std::size_t size() const noexcept { return order_m_.size(); }
  int sign(const CrossingId& id) const;
  std::int64_t algebraic_sum() const noexcept;

  friend bool operator==(const CrossingDiagram&, const CrossingDiagram&) = default;

 private:
  friend CrossingDiagram build_diagram(std::vector<CrossingId>, std::vector<CrossingId>,
                                       std::map<CrossingId, int>);

  std::vector<CrossingId> order_m_;
  std::vector<CrossingId> order_mprime_;
  std::map<CrossingId, int> signs_;
};

struct Bigon {
  CrossingId p;  // p < q
  CrossingId q;

  friend auto operator<=>(const Bigon&, const Bigon&) = default;
};

// Throws Error on mismatched id sets, duplicates, missing or invalid signs.
CrossingDiagram build_diagram(std::vector<CrossingId> order_on_m,
                              std::vector<CrossingId> order_on_mprime,
                              std::map<CrossingId, int> signs);

bool is_bigon(const CrossingDiagram& d, const CrossingId& p, const CrossingId& q);

// Every bigon of d, sorted.
std::vector<Bigon> all_bigons(const CrossingDiagram& d);

// Lexicographically least bigon.
std::optional<Bigon> find_bigon(const CrossingDiagram& d);

CrossingDiagram remove_bigon(const CrossingDiagram& d, const Bigon& b);

struct Reduction {
  CrossingDiagram diagram;
  int steps = 0;
  std::vector<Bigon> trace;
};

Reduction reduce_to_minimal(const CrossingDiagram& d);

}  // namespace curvecal
