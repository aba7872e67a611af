#pragma once

// Bookkeeping for chains of elementary cobordisms of a closed 3-manifold.
// Each record is one critical point; incidence numbers (right-hand sphere of
// the point against the left-hand sphere of a partner one index higher) are
// supplied by the user, not derived from geometry.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curvecal {

struct CriticalRecord {
  std::string id;
  int index = 0;  // 0..3
  std::map<std::string, std::int64_t> incidence;  // partner id -> signed pairing

  friend bool operator==(const CriticalRecord&, const CriticalRecord&) = default;
};

// Counts {r0, r1, r2, r3} of critical points per index.
using MorseType = std::array<int, 4>;

class CobordismChain {
 public:
  CobordismChain() = default;

  const std::vector<CriticalRecord>& records() const noexcept { return records_; }
  MorseType type() const noexcept;
  int euler_characteristic() const noexcept;
  bool closed() const noexcept;

  const CriticalRecord* find(const std::string& id) const;
  // Pairing between two records, read from whichever one is one index lower;
  // zero when absent or when the indices are not adjacent.
  std::int64_t incidence(const std::string& a, const std::string& b) const;

  friend bool operator==(const CobordismChain&, const CobordismChain&) = default;

 private:
  friend CobordismChain build_chain(std::vector<CriticalRecord> records);
  std::vector<CriticalRecord> records_;
};

// Throws Error on invalid index, duplicate id, dangling or non-adjacent
// incidence, or a closed chain with nonzero Euler characteristic.
CobordismChain build_chain(std::vector<CriticalRecord> records);

// Genus of the level surface after the first index-0 record and after each
// index-1 and index-2 record. Requires r0 = r3 = 1 and records sorted by index.
std::vector<int> boundary_genus_profile(const CobordismChain& chain);

// new_order[p] is the old position of the record placed at p. Every pair of
// records whose relative order flips must have equal index or zero incidence.
CobordismChain rearrange(const CobordismChain& chain, const std::vector<std::size_t>& new_order);

// Why (lower, upper) cannot be cancelled, or nullopt if it can.
std::optional<std::string> cancel_obstruction(const CobordismChain& chain,
                                              const std::string& lower,
                                              const std::string& upper);

// Slides the pair together by legal commutations, then deletes both records.
CobordismChain cancel_pair(const CobordismChain& chain, const std::string& lower,
                           const std::string& upper);

struct CancelMove {
  std::string lower;
  std::string upper;
  std::int64_t pairing = 0;
  MorseType type_after{};
};

struct Normalization {
  CobordismChain chain;
  std::vector<CancelMove> moves;
};

Normalization normalize(const CobordismChain& chain);

// Chain of -f: order reversed, index i becomes 3 - i, incidences transposed.
CobordismChain dual_chain(const CobordismChain& chain);

}  // namespace curvecal
