#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "doap/metric_path.hpp"
#include "doap/rmq.hpp"

namespace doap {

/// Whether a threshold test is "<= lambda" or "< lambda".
enum class Bound { Inclusive, Strict };

inline bool within(double value, double lambda, Bound bound) noexcept {
  return bound == Bound::Strict ? value < lambda : value <= lambda;
}

/// Work counters for one decision run.
struct DecisionCounters {
  std::size_t threshold_tests = 0;  // O(1) component-vs-lambda tests in the index sweeps
  std::size_t gamma_tests = 0;
  std::size_t sweep_steps = 0;      // g/h pointer moves
};

/// O(1) tests "f(i,j) within lambda" for f in {alpha, beta, delta}, after an
/// O(log n) search for the two path cut-off indices.
class ThresholdTests {
 public:
  ThresholdTests(const MetricPath& path, double lambda, Bound bound);

  bool alpha(Index i, Index j) const noexcept;
  bool beta(Index i, Index j) const noexcept;
  bool delta(Index i, Index j) const noexcept;

  /// Largest k with d_P(1,k) within lambda, 0 if none.
  Index alpha_cut() const noexcept { return alpha_cut_; }
  /// Smallest k with d_P(k,n) within lambda, n+1 if none.
  Index beta_cut() const noexcept { return beta_cut_; }

 private:
  const MetricPath* path_;
  double lambda_;
  Bound bound_;
  Index alpha_cut_;
  Index beta_cut_;
};

/// I_i(alpha), I_i(beta), I_i(delta) for every i at one threshold.
///
/// Missing alpha indices are stored as i - 1 and missing beta/delta indices as
/// n + 1, so row i has a partner iff max(beta(i), delta(i)) <= alpha(i).
class IndexProfile {
 public:
  IndexProfile(Index n, double lambda, Bound bound)
      : n_(n), lambda_(lambda), bound_(bound),
        alpha_(static_cast<std::size_t>(n)), beta_(static_cast<std::size_t>(n)),
        delta_(static_cast<std::size_t>(n)) {}

  Index size() const noexcept { return n_; }
  double lambda() const noexcept { return lambda_; }
  Bound bound() const noexcept { return bound_; }
  Index infinity() const noexcept { return n_ + 1; }

  Index alpha(Index i) const noexcept { return alpha_[i - 1]; }
  Index beta(Index i) const noexcept { return beta_[i - 1]; }
  Index delta(Index i) const noexcept { return delta_[i - 1]; }

  /// a_i: the smallest index in [1,I(alpha)] ∩ [I(beta),n] ∩ [I(delta),n].
  std::optional<Index> partner(Index i) const noexcept {
    const Index lo = std::max(beta(i), delta(i));
    if (lo > alpha(i)) return std::nullopt;
    return lo;
  }

 private:
  friend IndexProfile compute_index_profile(const MetricPath&, double, Bound, DecisionCounters*);

  Index n_;
  double lambda_;
  Bound bound_;
  std::vector<Index> alpha_, beta_, delta_;
};

/// Monotone two-pointer sweeps, O(n) threshold tests in total.
IndexProfile compute_index_profile(const MetricPath& path, double lambda, Bound bound = Bound::Inclusive,
                                   DecisionCounters* counters = nullptr);

/// g_j: farthest vertex reachable from v_j along the path within lambda.
/// h_k: first j whose reach covers k. B[j] = d_P(j, g_j + 1), +inf past the end.
struct GammaOracle {
  double lambda;
  Bound bound;
  std::vector<Index> g;  // 1-based values, 0-based storage
  std::vector<Index> h;
  std::vector<double> b;
  RangeMinIndex rmq;

  Index reach(Index j) const noexcept { return g[j - 1]; }
  Index first_cover(Index k) const noexcept { return h[k - 1]; }
};

/// Strict bound needs lambda > 0 so that every g_j exists.
GammaOracle build_gamma_oracle(const MetricPath& path, double lambda, Bound bound = Bound::Inclusive,
                               DecisionCounters* counters = nullptr);

/// Longest detour through the added edge that C(i,a) forces: taken over the
/// rows j in [i, h_a - 1], whose path reach stops short of a. Requires
/// h_a > i. One range-minimum query.
double binding_detour(const GammaOracle& oracle, const MetricPath& path, Index i, Index a);

/// gamma(i, a) within the oracle's threshold, for the pair (i, a_i) produced by
/// the interval intersection. Requires i < a. One range-minimum query.
bool gamma_feasible(const GammaOracle& oracle, const MetricPath& path, Index i, Index a);

struct DecisionOutcome {
  double lambda = 0.0;
  std::optional<CandidateEdge> witness;

  bool feasible() const noexcept { return witness.has_value(); }
};

/// Is there an edge (i,j) with D(i,j) <= lambda (or < lambda under Bound::Strict)?
/// Reports the first row i that admits one. Throws std::invalid_argument for
/// negative or NaN lambda.
DecisionOutcome decide(const MetricPath& path, double lambda, Bound bound = Bound::Inclusive,
                       DecisionCounters* counters = nullptr);

}  // namespace doap
