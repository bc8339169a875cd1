#pragma once

#include <bit>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "doap/metric_path.hpp"

namespace doap {

enum class Order { Ascending, Descending };

/// An implicit n x n matrix whose rows are monotone left-to-right per
/// `row_order` and whose columns are monotone top-to-bottom per `col_order`.
/// `eval` takes 1-based (row, col).
struct SortedMatrixView {
  Index n = 0;
  std::function<double(Index, Index)> eval;
  Order row_order = Order::Ascending;
  Order col_order = Order::Ascending;
};

struct SearchStats {
  std::size_t predicate_calls = 0;
  std::size_t evaluations = 0;

  SearchStats& operator+=(const SearchStats& o) noexcept {
    predicate_calls += o.predicate_calls;
    evaluations += o.evaluations;
    return *this;
  }
};

/// `value` is empty when no entry satisfies the predicate.
struct SearchResult {
  std::optional<double> value;
  SearchStats stats;
};

using Predicate = std::function<bool(double)>;

namespace search_budget {

/// ceil(log2 n), 0 for n <= 1.
inline std::size_t levels(Index n) noexcept {
  return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(static_cast<std::size_t>(n - 1)));
}

// Up to two median tests per halving level, then a binary search over at most
// 6 * 2^L single-entry survivors: 2L + (L + 4) predicate calls.
inline constexpr std::size_t kCallsPerLevel = 3;
inline constexpr std::size_t kCallsExtra = 4;
// Levels holding at most this many cells skip their tests.
inline constexpr std::size_t kUntestedCells = 256;
// Two corner evaluations per cell. Tested levels keep about 6 * 2^L / s cells
// of side s, below 48 * 2^L in total, and each untested level adds at most
// 8 * 256. The asserted budget is 96 n; large instances measure under 12 n.
inline constexpr std::size_t kEvaluationsPerEntry = 96;

inline std::size_t predicate_calls(Index n) noexcept { return kCallsPerLevel * levels(n) + kCallsExtra; }
inline std::size_t evaluations(Index n) noexcept {
  return kEvaluationsPerEntry * static_cast<std::size_t>(n < 1 ? 1 : n);
}

}  // namespace search_budget

/// Smallest entry v of the matrix with predicate(v) true, for a predicate that
/// is false below some threshold and true from it on.
///
/// Frederickson-Johnson style: the matrix is covered by square cells that are
/// halved every round. After a split that leaves more than kUntestedCells
/// cells, the median of the corner values still inside the bracket (known
/// infeasible, best feasible) is tested twice, and cells entirely outside the
/// bracket are dropped.
/// Once cells are single entries the survivors are binary searched.
SearchResult min_feasible_in_matrix(const SortedMatrixView& matrix, const Predicate& predicate);

/// Smallest value in `values` satisfying a monotone predicate. Sorts, then
/// binary searches with O(log k) predicate calls.
std::optional<double> min_feasible_in_set(std::vector<double> values, const Predicate& predicate,
                                          SearchStats* stats = nullptr);

}  // namespace doap
