#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace curvecal::detail {

// Perfect matching of columns to rows in a square admissibility table
// ok[col][row]. Kuhn's augmenting paths, visiting columns and rows in index
// order so the result is deterministic. Returns row_of_col.
inline std::optional<std::vector<int>> perfect_matching(
    const std::vector<std::vector<bool>>& ok) {
  const std::size_t n = ok.size();
  std::vector<int> row_of_col(n, -1);
  std::vector<int> col_of_row(n, -1);
  std::vector<bool> seen;

  auto augment = [&](auto&& self, std::size_t col) -> bool {
    for (std::size_t row = 0; row < n; ++row) {
      if (!ok[col][row] || seen[row]) continue;
      seen[row] = true;
      if (col_of_row[row] < 0 || self(self, static_cast<std::size_t>(col_of_row[row]))) {
        row_of_col[col] = static_cast<int>(row);
        col_of_row[row] = static_cast<int>(col);
        return true;
      }
    }
    return false;
  };

  for (std::size_t col = 0; col < n; ++col) {
    seen.assign(n, false);
    if (!augment(augment, col)) return std::nullopt;
  }
  return row_of_col;
}

}  // namespace curvecal::detail
