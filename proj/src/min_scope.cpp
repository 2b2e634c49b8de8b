#include <algorithm>
#include <numeric>

#include "qcc/errors.hpp"
#include "qcc/search.hpp"

namespace qcc {

namespace {

// Row sums `rows` and column sums `cols` admit a 0/1 matrix (Gale-Ryser).
bool gale_ryser(std::vector<int> rows, const std::vector<int>& cols) {
  std::sort(rows.begin(), rows.end(), std::greater<>());
  if (std::accumulate(rows.begin(), rows.end(), 0) != std::accumulate(cols.begin(), cols.end(), 0)) return false;
  int left = 0;
  for (std::size_t k = 1; k <= rows.size(); ++k) {
    left += rows[k - 1];
    int right = 0;
    for (int c : cols) right += std::min(c, static_cast<int>(k));
    if (left > right) return false;
  }
  return true;
}

class ScopeSearch {
 public:
  ScopeSearch(const Partition& shape, int s) : shape_(shape), s_(s), lambda1_(shape.largest()) {
    used_.assign(static_cast<std::size_t>(2 * s + 2), false);
  }

  // Fills `rows` with one admissible choice of entries per row, if any.
  bool solve(std::vector<std::vector<int>>& rows) {
    std::vector<int> sizes(static_cast<std::size_t>(lambda1_), 1);
    return sizes_from(sizes, 0, rows);
  }

 private:
  bool sizes_from(std::vector<int>& sizes, std::size_t i, std::vector<std::vector<int>>& rows) {
    const int columns = static_cast<int>(shape_.size());
    if (i == sizes.size()) {
      if (!gale_ryser(sizes, shape_.parts())) return false;
      sizes_ = sizes;
      // Fill larger rows first; they constrain the difference pool most.
      order_.resize(sizes.size());
      std::iota(order_.begin(), order_.end(), 0);
      std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
      marks_.assign(sizes.size(), {});
      if (!fill(0)) return false;
      rows.clear();
      for (std::size_t r = 0; r < sizes.size(); ++r) {
        const int residue = static_cast<int>((r + 1) % static_cast<std::size_t>(lambda1_));
        std::vector<int> entries;
        for (int a : marks_[r]) entries.push_back(residue + lambda1_ * a);
        rows.push_back(std::move(entries));
      }
      return true;
    }
    for (int k = 1; k <= columns; ++k) {
      sizes[i] = k;
      if (sizes_from(sizes, i + 1, rows)) return true;
    }
    return false;
  }

  bool fill(std::size_t idx) {
    if (idx == order_.size()) return true;
    const std::size_t r = order_[idx];
    const int residue = static_cast<int>((r + 1) % static_cast<std::size_t>(lambda1_));
    if (2 * s_ < residue) return false;
    const int max_a = (2 * s_ - residue) / lambda1_;
    const int span = s_ / lambda1_;
    for (int first = 0; first <= max_a; ++first) {
      marks_[r] = {first};
      if (extend(idx, r, sizes_[r] - 1, std::min(max_a, first + span))) return true;
    }
    return false;
  }

  bool extend(std::size_t idx, std::size_t r, int left, int limit) {
    if (left == 0) return fill(idx + 1);
    auto& row = marks_[r];
    for (int a = row.back() + 1; a <= limit - (left - 1); ++a) {
      std::vector<std::size_t> added;
      bool clash = false;
      for (int b : row) {
        const auto d = static_cast<std::size_t>(a - b);
        if (used_[d]) {
          clash = true;
          break;
        }
        used_[d] = true;
        added.push_back(d);
      }
      if (!clash) {
        row.push_back(a);
        if (extend(idx, r, left - 1, limit)) return true;
        row.pop_back();
      }
      for (auto d : added) used_[d] = false;
    }
    return false;
  }

  const Partition& shape_;
  int s_;
  int lambda1_;
  std::vector<int> sizes_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<int>> marks_;
  std::vector<bool> used_;
};

// Rows to a grid: each row, largest first, fills the columns with the most
// cells still needed.
Grid place(const Partition& shape, const std::vector<std::vector<int>>& rows) {
  const std::size_t columns = shape.size();
  Grid grid(rows.size(), std::vector<Cell>(columns));
  std::vector<int> need(shape.parts());
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a].size() > rows[b].size(); });
  for (std::size_t r : order) {
    std::vector<std::size_t> cols(columns);
    std::iota(cols.begin(), cols.end(), 0);
    std::stable_sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) { return need[a] > need[b]; });
    cols.resize(rows[r].size());
    std::sort(cols.begin(), cols.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      grid[r][cols[k]] = rows[r][k];
      --need[cols[k]];
    }
  }
  return grid;
}

}  // namespace

std::optional<LambdaArray> min_scope_array(const Partition& shape, int scope_cap) {
  if (shape.empty()) throw InvalidInput("min_scope_array: empty shape");
  if (shape.sum() > 10) throw InvalidInput("min_scope_array: shapes above weight 10 are not supported");
  for (int s = 0; s <= scope_cap; ++s) {
    std::vector<std::vector<int>> rows;
    if (!ScopeSearch(shape, s).solve(rows)) continue;
    Grid grid = place(shape, rows);
    const auto report = verify_array(grid, shape);
    if (!report.valid) throw std::logic_error("min_scope_array produced an invalid array");
    return LambdaArray{shape, std::move(grid), report.scope};
  }
  return std::nullopt;
}

}  // namespace qcc
