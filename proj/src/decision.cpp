#include "doap/decision.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace doap {

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0)) {
    std::ostringstream msg;
    msg << "threshold must be a nonnegative number, got " << lambda;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

ThresholdTests::ThresholdTests(const MetricPath& path, double lambda, Bound bound)
    : path_(&path), lambda_(lambda), bound_(bound) {
  const Index n = path.size();
  // d_P(1,k) is non-decreasing in k: count the prefix that stays within lambda.
  Index lo = 0, hi = n;
  while (lo < hi) {
    const Index mid = lo + (hi - lo + 1) / 2;
    if (within(path.a(mid), lambda, bound)) lo = mid;
    else hi = mid - 1;
  }
  alpha_cut_ = lo;

  // d_P(k,n) is non-increasing in k.
  lo = 1, hi = n + 1;
  while (lo < hi) {
    const Index mid = lo + (hi - lo) / 2;
    if (within(path.dp(mid, n), lambda, bound)) hi = mid;
    else lo = mid + 1;
  }
  beta_cut_ = lo;
}

// Every v_k with k <= alpha_cut is close enough to v_1 along the path. The
// others in [i,j] are reached over the edge, the farthest of them being
// alpha_cut + 1.
bool ThresholdTests::alpha(Index i, Index j) const noexcept {
  if (alpha_cut_ >= j) return true;
  if (alpha_cut_ < i) return false;
  const double w = path_->d(i, j);
  return within(detail::via_edge_from_start(*path_, i, j, w, alpha_cut_ + 1), lambda_, bound_);
}

bool ThresholdTests::beta(Index i, Index j) const noexcept {
  if (beta_cut_ <= i) return true;
  if (beta_cut_ > j) return false;
  const double w = path_->d(i, j);
  return within(detail::via_edge_from_end(*path_, i, j, w, beta_cut_ - 1), lambda_, bound_);
}

bool ThresholdTests::delta(Index i, Index j) const noexcept {
  return within(detail::delta_unchecked(*path_, i, j), lambda_, bound_);
}

IndexProfile compute_index_profile(const MetricPath& path, double lambda, Bound bound,
                                   DecisionCounters* counters) {
  check_lambda(lambda);
  const Index n = path.size();
  const ThresholdTests test(path, lambda, bound);
  IndexProfile profile(n, lambda, bound);
  std::size_t tests = 0;

  // I(delta) is non-decreasing in i.
  Index j = 1;
  for (Index i = 1; i <= n; ++i) {
    j = std::max(j, i);
    while (j <= n && (++tests, !test.delta(i, j))) ++j;
    profile.delta_[i - 1] = j;
  }

  // Rows with d_P(i,n) within lambda form a suffix and have I(beta) = i. On the
  // remaining prefix I(beta) > i and is non-increasing, so j only moves down.
  j = n + 1;
  for (Index i = 1; i <= n; ++i) {
    ++tests;
    if (test.beta(i, i)) {
      profile.beta_[i - 1] = i;
      continue;
    }
    while (j - 1 > i && (++tests, test.beta(i, j - 1))) --j;
    profile.beta_[i - 1] = j;
  }

  // I(alpha) is non-increasing in i. Rows with d_P(1,i) over budget form a
  // suffix and have no alpha index at all.
  for (Index i = n; i >= 1; --i) {
    if (i == n || profile.alpha_[i] == i) {
      ++tests;
      if (!test.alpha(i, i)) {
        profile.alpha_[i - 1] = i - 1;
        continue;
      }
      j = i;
    } else {
      j = profile.alpha_[i];
    }
    while (j < n && (++tests, test.alpha(i, j + 1))) ++j;
    profile.alpha_[i - 1] = j;
  }

  if (counters) counters->threshold_tests += tests;
  return profile;
}

GammaOracle build_gamma_oracle(const MetricPath& path, double lambda, Bound bound, DecisionCounters* counters) {
  check_lambda(lambda);
  if (bound == Bound::Strict && lambda <= 0.0)
    throw std::invalid_argument("strict reach arrays need a positive threshold");
  const Index n = path.size();
  std::vector<Index> g(static_cast<std::size_t>(n)), h(static_cast<std::size_t>(n));
  std::vector<double> b(static_cast<std::size_t>(n));
  std::size_t steps = 0;

  Index k = 1;
  for (Index j = 1; j <= n; ++j) {
    k = std::max(k, j);
    while (k < n && within(path.dp(j, k + 1), lambda, bound)) {
      ++k;
      ++steps;
    }
    g[j - 1] = k;
    b[j - 1] = k < n ? path.dp(j, k + 1) : std::numeric_limits<double>::infinity();
  }

  // g_k >= k, so the pointer never passes k.
  Index j = 1;
  for (k = 1; k <= n; ++k) {
    while (g[j - 1] < k) {
      ++j;
      ++steps;
    }
    h[k - 1] = j;
  }

  if (counters) counters->sweep_steps += steps + 2 * static_cast<std::size_t>(n);
  RangeMinIndex rmq(b);
  return GammaOracle{lambda, bound, std::move(g), std::move(h), std::move(b), std::move(rmq)};
}

// Rows j in [i, h_a - 1] cannot reach a along the path, so each needs its
// detour d_P(i,j) + |v_i v_a| + d_P(g_j + 1, a) = |C| - B[j] within lambda.
// The binding row is the one with the smallest B[j]; its detour is summed along
// the route, in the same order as a direct evaluation would.
double binding_detour(const GammaOracle& oracle, const MetricPath& path, Index i, Index a) {
  const Index j = oracle.rmq.argmin(i, oracle.first_cover(a) - 1);
  return (path.dp(i, j) + path.d(i, a)) + path.dp(oracle.reach(j) + 1, a);
}

bool gamma_feasible(const GammaOracle& oracle, const MetricPath& path, Index i, Index a) {
  if (i < 1 || a > path.size() || i >= a) {
    std::ostringstream msg;
    msg << "gamma test needs 1 <= i < a <= n, got i=" << i << ", a=" << a;
    throw std::invalid_argument(msg.str());
  }
  if (oracle.first_cover(a) <= i) return true;
  return within(binding_detour(oracle, path, i, a), oracle.lambda, oracle.bound);
}

DecisionOutcome decide(const MetricPath& path, double lambda, Bound bound, DecisionCounters* counters) {
  check_lambda(lambda);
  const IndexProfile profile = compute_index_profile(path, lambda, bound, counters);
  std::optional<GammaOracle> gamma;
  const Index n = path.size();
  for (Index i = 1; i <= n; ++i) {
    const auto a = profile.partner(i);
    if (!a) continue;
    if (*a <= i) return {lambda, CandidateEdge{i, i}};
    if (!gamma) gamma.emplace(build_gamma_oracle(path, lambda, bound, counters));
    if (counters) ++counters->gamma_tests;
    if (gamma_feasible(*gamma, path, i, *a)) return {lambda, CandidateEdge{i, *a}};
  }
  return {lambda, std::nullopt};
}

}  // namespace doap
