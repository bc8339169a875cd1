#include "doap/rmq.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace doap {

RangeMinIndex::RangeMinIndex(std::span<const double> values)
    : values_(values.begin(), values.end()), masks_(values.size(), 0) {
  if (values_.empty()) throw std::invalid_argument("range-minimum index over an empty array");
  const std::size_t n = values_.size();
  const std::size_t blocks = (n + kBlock - 1) / kBlock;

  std::vector<std::size_t> block_min(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t start = b * kBlock;
    const std::size_t stop = std::min(n, start + kBlock);
    std::uint64_t stack = 0;
    for (std::size_t p = start; p < stop; ++p) {
      // Pop entries not smaller than values_[p]; each position is popped at most once.
      while (stack != 0) {
        const std::size_t top = start + (63 - std::countl_zero(stack));
        if (values_[top] < values_[p]) break;
        stack ^= std::uint64_t{1} << (top - start);
        ++build_work_;
      }
      stack |= std::uint64_t{1} << (p - start);
      masks_[p] = stack;
      ++build_work_;
    }
    block_min[b] = start + std::countr_zero(masks_[stop - 1]);
  }

  sparse_.push_back(std::move(block_min));
  for (std::size_t width = 2; width <= blocks; width *= 2) {
    const auto& prev = sparse_.back();
    std::vector<std::size_t> next(blocks - width + 1);
    for (std::size_t b = 0; b < next.size(); ++b) {
      next[b] = lower(prev[b], prev[b + width / 2]);
      ++build_work_;
    }
    sparse_.push_back(std::move(next));
  }
}

std::size_t RangeMinIndex::in_block(std::size_t l, std::size_t r) const noexcept {
  const std::size_t start = l - l % kBlock;
  const std::uint64_t live = masks_[r] & (~std::uint64_t{0} << (l - start));
  return start + std::countr_zero(live);
}

std::size_t RangeMinIndex::across_blocks(std::size_t lb, std::size_t rb) const noexcept {
  const std::size_t level = std::bit_width(rb - lb + 1) - 1;
  return lower(sparse_[level][lb], sparse_[level][rb + 1 - (std::size_t{1} << level)]);
}

Index RangeMinIndex::argmin(Index l, Index r, std::size_t* work) const {
  if (l < 1 || r > size() || l > r) {
    std::ostringstream msg;
    msg << "range-minimum query [" << l << ", " << r << "] invalid for length " << size();
    throw std::invalid_argument(msg.str());
  }
  const auto lo = static_cast<std::size_t>(l - 1);
  const auto hi = static_cast<std::size_t>(r - 1);
  const std::size_t lb = lo / kBlock, rb = hi / kBlock;
  if (lb == rb) {
    if (work) *work += 1;
    return static_cast<Index>(in_block(lo, hi)) + 1;
  }
  std::size_t best = lower(in_block(lo, lb * kBlock + kBlock - 1), in_block(rb * kBlock, hi));
  if (work) *work += 2;
  if (lb + 1 < rb) {
    best = lower(best, across_blocks(lb + 1, rb - 1));
    if (work) *work += 2;
  }
  return static_cast<Index>(best) + 1;
}

double RangeMinIndex::query(Index l, Index r, std::size_t* work) const {
  return values_[static_cast<std::size_t>(argmin(l, r, work) - 1)];
}

}  // namespace doap
