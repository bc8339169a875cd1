#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "doap/metric_path.hpp"

namespace doap {

/// Static range-minimum index over a real array (+inf entries allowed).
///
/// Positions are split into 64-wide blocks. Inside a block a per-position
/// bitmask records the monotone stack of suffix minima, so an in-block query
/// is one mask and one count-trailing-zeros. Whole blocks are covered by a
/// sparse table over block minima. Build is O(n), queries are O(1).
class RangeMinIndex {
 public:
  explicit RangeMinIndex(std::span<const double> values);
  explicit RangeMinIndex(const std::vector<double>& values)
      : RangeMinIndex(std::span<const double>(values)) {}

  Index size() const noexcept { return static_cast<Index>(values_.size()); }

  /// min(values[l..r]), 1-based inclusive. Throws std::invalid_argument unless
  /// 1 <= l <= r <= size(). `work` (if given) is incremented per table lookup.
  double query(Index l, Index r, std::size_t* work = nullptr) const;

  /// A 1-based position of min(values[l..r]); same checks and work as query.
  Index argmin(Index l, Index r, std::size_t* work = nullptr) const;

  /// Elementary steps spent in construction.
  std::size_t build_work() const noexcept { return build_work_; }

 private:
  static constexpr std::size_t kBlock = 64;

  std::size_t lower(std::size_t a, std::size_t b) const noexcept { return values_[b] < values_[a] ? b : a; }
  std::size_t in_block(std::size_t l, std::size_t r) const noexcept;
  std::size_t across_blocks(std::size_t lb, std::size_t rb) const noexcept;

  std::vector<double> values_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<std::size_t>> sparse_;  // sparse_[k][b]: position of the min of blocks b .. b+2^k-1
  std::size_t build_work_ = 0;
};

}  // namespace doap
