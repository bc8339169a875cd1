#include <doctest.h>

#include <algorithm>
#include <limits>
#include <vector>

#include "doap/instances.hpp"
#include "doap/rmq.hpp"

using namespace doap;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double scan_min(const std::vector<double>& v, Index l, Index r) {
  return *std::min_element(v.begin() + (l - 1), v.begin() + r);
}

}  // namespace

TEST_CASE("small arrays") {
  CHECK(RangeMinIndex(std::vector<double>{3}).query(1, 1) == 3);

  const RangeMinIndex q(std::vector<double>{5, 2, 9, 2});
  CHECK(q.query(1, 4) == 2);
  CHECK(q.query(3, 4) == 2);
  CHECK(q.query(3, 3) == 9);
  CHECK(q.query(1, 2) == 2);
  CHECK(q.size() == 4);

  const RangeMinIndex with_inf(std::vector<double>{1, kInf});
  CHECK(with_inf.query(2, 2) == kInf);
  CHECK(with_inf.query(1, 2) == 1);
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(RangeMinIndex(std::vector<double>{}), std::invalid_argument);
  const RangeMinIndex q(std::vector<double>{5, 2, 9, 2});
  CHECK_THROWS_AS(q.query(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(q.query(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(q.query(2, 5), std::invalid_argument);
}

TEST_CASE("every range of random arrays matches a linear scan") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<Index>(1 + rng.next() % 1000);
    std::vector<double> v(static_cast<std::size_t>(n));
    // Few distinct values so that ties are common, plus some +inf entries.
    for (double& x : v) {
      const auto r = rng.next() % 20;
      x = r == 0 ? kInf : static_cast<double>(r % 7) - 3.0;
    }
    const RangeMinIndex q(v);
    std::size_t bad = 0;
    for (Index l = 1; l <= n; ++l) {
      double running = kInf;
      for (Index r = l; r <= n; ++r) {
        running = std::min(running, v[static_cast<std::size_t>(r - 1)]);
        bad += q.query(l, r) != running;
      }
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("random queries on long arrays") {
  SplitMix64 rng(22);
  for (Index n : {Index{63}, Index{64}, Index{65}, Index{4097}, Index{100000}}) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = rng.uniform();
    const RangeMinIndex q(v);
    for (int t = 0; t < 2000; ++t) {
      Index l = 1 + static_cast<Index>(rng.next() % static_cast<std::uint64_t>(n));
      Index r = 1 + static_cast<Index>(rng.next() % static_cast<std::uint64_t>(n));
      if (l > r) std::swap(l, r);
      REQUIRE(q.query(l, r) == scan_min(v, l, r));
    }
  }
}

TEST_CASE("build is linear and queries take constant work") {
  SplitMix64 rng(23);
  for (Index n : {Index{1000}, Index{1} << 16, Index{1} << 20}) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = rng.uniform();
    const RangeMinIndex q(v);
    CHECK(q.build_work() <= 4 * static_cast<std::size_t>(n));
    std::size_t worst = 0;
    for (int t = 0; t < 5000; ++t) {
      Index l = 1 + static_cast<Index>(rng.next() % static_cast<std::uint64_t>(n));
      Index r = 1 + static_cast<Index>(rng.next() % static_cast<std::uint64_t>(n));
      if (l > r) std::swap(l, r);
      std::size_t work = 0;
      q.query(l, r, &work);
      worst = std::max(worst, work);
    }
    CHECK(worst <= 4);
  }
}
