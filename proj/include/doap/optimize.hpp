#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "doap/matrix_search.hpp"
#include "doap/metric_path.hpp"

namespace doap {

enum class Component { Alpha, Beta, Delta };

/// f(i,j) for j >= i, padded below the diagonal so that rows and columns stay
/// monotone: alpha with alpha(j,j) (both ascending), beta with beta(i,i) (both
/// descending), delta with delta(j,j) = d_P(1,n) (rows descending, columns ascending).
SortedMatrixView component_matrix(const MetricPath& path, Component f);

/// d_P(i,j) for j >= i and 0 below the diagonal: rows ascending, columns descending.
SortedMatrixView path_length_matrix(const MetricPath& path);

/// decide(path, lambda).feasible() with memory. Feasibility is monotone in
/// lambda, so anything at or below the largest infeasible value seen, or at or
/// above the smallest feasible one, is answered without a decision call.
class FeasibilityCache {
 public:
  explicit FeasibilityCache(const MetricPath& path) : path_(&path) {}
  bool operator()(double lambda);
  std::size_t decision_calls() const noexcept { return calls_; }

 private:
  const MetricPath* path_;
  std::optional<double> infeasible_;
  std::optional<double> feasible_;
  std::size_t calls_ = 0;
};

struct LambdaSearch {
  double value = 0.0;
  SearchStats stats;
};

/// Smallest feasible value among {f(i,j)}. Without a cache every predicate
/// call is a decision call.
LambdaSearch lambda_f(const MetricPath& path, Component f, FeasibilityCache* cache = nullptr);

/// Smallest feasible subpath length d_P(i,j).
LambdaSearch lambda_path(const MetricPath& path, FeasibilityCache* cache = nullptr);

/// Candidate partners under strict thresholds.
///
/// partner[i-1] is a_i from the "< lambda_1" index profile (0 when row i has no
/// partner); `rows` lists those i. `escaping_rows` keeps the rows with
/// i <= h'(a_i) - 1 for the "< lambda_p" reach arrays, and `d1_max` holds
/// the binding detour of C(i,a_i) for each of them, summed along its route.
struct CandidateTable {
  std::vector<Index> partner;
  std::vector<Index> rows;
  std::vector<Index> escaping_rows;
  std::vector<double> d1_max;
};

/// O(n) plus one range-minimum build. A nonpositive lambda_1 yields an empty
/// table, a nonpositive lambda_p leaves `escaping_rows` empty.
CandidateTable build_candidate_table(const MetricPath& path, double lambda_1, double lambda_p);

struct SolveStats {
  std::size_t decision_calls = 0;
  std::size_t matrix_evaluations = 0;
  // Decision calls per stage. Stages share what earlier ones learned, so
  // later stages usually need far fewer.
  std::size_t alpha_calls = 0;
  std::size_t beta_calls = 0;
  std::size_t delta_calls = 0;
  std::size_t path_calls = 0;
  std::size_t candidate_calls = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveResult {
  double lambda_star = 0.0;
  CandidateEdge edge;
  double lambda_alpha = 0.0;
  double lambda_beta = 0.0;
  double lambda_delta = 0.0;
  double lambda_1 = 0.0;
  std::optional<double> lambda_p;      // absent when no strict partner exists
  std::optional<double> lambda_prime;  // smallest feasible d1_max, if any
  SolveStats stats;
};

/// Minimum diameter over all single-edge augmentations and an edge attaining it.
SolveResult solve(const MetricPath& path);

}  // namespace doap
