#include "doap/matrix_search.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace doap {

namespace {

// A square cell of the (conceptually 2^L-padded) matrix, clipped to n.
// lo/hi are its top-left and bottom-right values in ascending orientation.
struct Cell {
  Index row;
  Index col;
  double lo;
  double hi;
};

// Smallest feasible value in sorted distinct `values`, or nothing.
std::optional<double> bisect_sorted(const std::vector<double>& values, const Predicate& predicate,
                                    std::size_t& calls) {
  std::size_t lo = 0, hi = values.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++calls;
    if (predicate(values[mid])) hi = mid;
    else lo = mid + 1;
  }
  if (lo == values.size()) return std::nullopt;
  return values[lo];
}

}  // namespace

SearchResult min_feasible_in_matrix(const SortedMatrixView& matrix, const Predicate& predicate) {
  if (matrix.n < 1) throw std::invalid_argument("sorted matrix search needs n >= 1");
  if (!matrix.eval) throw std::invalid_argument("sorted matrix view has no evaluator");
  const Index n = matrix.n;
  SearchStats stats;

  // Present every view as ascending along rows and down columns.
  auto at = [&](Index r, Index c) {
    ++stats.evaluations;
    const Index row = matrix.col_order == Order::Ascending ? r : n + 1 - r;
    const Index col = matrix.row_order == Order::Ascending ? c : n + 1 - c;
    return matrix.eval(row, col);
  };

  // Entries <= infeasible are known infeasible; `feasible` is the best entry known feasible.
  double infeasible = -std::numeric_limits<double>::infinity();
  double feasible = std::numeric_limits<double>::infinity();
  bool found = false;
  auto test = [&](double x) {
    if (x <= infeasible || (found && x >= feasible)) return;
    ++stats.predicate_calls;
    if (predicate(x)) {
      feasible = x;
      found = true;
    } else {
      infeasible = x;
    }
  };
  auto dead = [&](const Cell& c) { return c.hi <= infeasible || (found && c.lo >= feasible); };

  Index side = Index{1} << search_budget::levels(n);
  std::vector<Cell> cells;
  if (side == 1) {
    const double v = at(1, 1);
    cells.push_back({1, 1, v, v});
  } else {
    cells.push_back({1, 1, 0.0, 0.0});
  }

  std::vector<Cell> next;
  std::vector<double> corners;
  while (side > 1) {
    side /= 2;
    next.clear();
    for (const Cell& cell : cells) {
      for (Index dr : {Index{0}, side}) {
        for (Index dc : {Index{0}, side}) {
          const Index r = cell.row + dr, c = cell.col + dc;
          if (r > n || c > n) continue;
          const Index r2 = std::min(r + side - 1, n), c2 = std::min(c + side - 1, n);
          const double lo = at(r, c);
          const double hi = (r2 == r && c2 == c) ? lo : at(r2, c2);
          Cell piece{r, c, lo, hi};
          if (!dead(piece)) next.push_back(piece);
        }
      }
    }
    cells.swap(next);

    // Each median test leaves at most half the cells plus the O(n / side)
    // cells straddling the tested value. Only corners strictly between the
    // known bounds count, so a test is never wasted on a settled value. A
    // handful of huge cells is cheap to carry to the next level, and testing
    // the median of their corners mostly probes far from the answer.
    for (int round = 0; round < 2 && cells.size() > search_budget::kUntestedCells; ++round) {
      corners.clear();
      for (const Cell& c : cells) {
        for (double v : {c.lo, c.hi})
          if (v > infeasible && !(found && v >= feasible)) corners.push_back(v);
      }
      if (corners.empty()) break;
      auto median = corners.begin() + static_cast<std::ptrdiff_t>((corners.size() - 1) / 2);
      std::nth_element(corners.begin(), median, corners.end());
      test(*median);
      std::erase_if(cells, dead);
    }
  }

  std::vector<double> survivors;
  survivors.reserve(cells.size());
  for (const Cell& c : cells) survivors.push_back(c.lo);
  std::sort(survivors.begin(), survivors.end());
  survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());
  if (auto v = bisect_sorted(survivors, predicate, stats.predicate_calls)) {
    feasible = *v;
    found = true;
  }

  SearchResult result;
  result.stats = stats;
  if (found) result.value = feasible;
  return result;
}

std::optional<double> min_feasible_in_set(std::vector<double> values, const Predicate& predicate,
                                          SearchStats* stats) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::size_t calls = 0;
  auto best = bisect_sorted(values, predicate, calls);
  if (stats) stats->predicate_calls += calls;
  return best;
}

}  // namespace doap
