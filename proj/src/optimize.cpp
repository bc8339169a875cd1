#include "doap/optimize.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "doap/decision.hpp"

namespace doap {

namespace {

Predicate feasibility(const MetricPath& path, FeasibilityCache* cache) {
  if (cache) return [cache](double lambda) { return (*cache)(lambda); };
  return [&path](double lambda) { return decide(path, lambda).feasible(); };
}

LambdaSearch search(const SortedMatrixView& view, const MetricPath& path, FeasibilityCache* cache) {
  auto result = min_feasible_in_matrix(view, feasibility(path, cache));
  // d_P(1,n) is an entry of every searched matrix and is always feasible.
  if (!result.value) throw std::logic_error("no feasible entry in a matrix that must contain one");
  return {*result.value, result.stats};
}

}  // namespace

bool FeasibilityCache::operator()(double lambda) {
  if (infeasible_ && lambda <= *infeasible_) return false;
  if (feasible_ && lambda >= *feasible_) return true;
  ++calls_;
  const bool ok = decide(*path_, lambda).feasible();
  if (ok) feasible_ = lambda;
  else infeasible_ = lambda;
  return ok;
}

SortedMatrixView component_matrix(const MetricPath& path, Component f) {
  const Index n = path.size();
  switch (f) {
    case Component::Alpha:
      return {n,
              [&path](Index r, Index c) { return c >= r ? alpha(path, {r, c}) : alpha(path, {c, c}); },
              Order::Ascending, Order::Ascending};
    case Component::Beta:
      return {n,
              [&path](Index r, Index c) { return c >= r ? beta(path, {r, c}) : beta(path, {r, r}); },
              Order::Descending, Order::Descending};
    case Component::Delta:
      return {n,
              [&path](Index r, Index c) { return c >= r ? delta(path, {r, c}) : delta(path, {c, c}); },
              Order::Descending, Order::Ascending};
  }
  throw std::invalid_argument("unknown diameter component");
}

SortedMatrixView path_length_matrix(const MetricPath& path) {
  return {path.size(), [&path](Index r, Index c) { return c >= r ? path.dp(r, c) : 0.0; }, Order::Ascending,
          Order::Descending};
}

LambdaSearch lambda_f(const MetricPath& path, Component f, FeasibilityCache* cache) {
  return search(component_matrix(path, f), path, cache);
}

LambdaSearch lambda_path(const MetricPath& path, FeasibilityCache* cache) {
  return search(path_length_matrix(path), path, cache);
}

CandidateTable build_candidate_table(const MetricPath& path, double lambda_1, double lambda_p) {
  const Index n = path.size();
  CandidateTable table;
  table.partner.assign(static_cast<std::size_t>(n), 0);
  if (!(lambda_1 > 0.0)) return table;

  const IndexProfile profile = compute_index_profile(path, lambda_1, Bound::Strict);
  for (Index i = 1; i <= n; ++i) {
    if (auto a = profile.partner(i)) {
      table.partner[i - 1] = *a;
      table.rows.push_back(i);
    }
  }
  if (table.rows.empty() || !(lambda_p > 0.0)) return table;

  const GammaOracle reach = build_gamma_oracle(path, lambda_p, Bound::Strict);
  for (Index i : table.rows) {
    const Index a = table.partner[i - 1];
    if (reach.first_cover(a) <= i) continue;
    table.escaping_rows.push_back(i);
    table.d1_max.push_back(binding_detour(reach, path, i, a));
  }
  return table;
}

// lambda* = min(lambda_1, lambda_gamma). When lambda_gamma < lambda_1 some
// (i, a_i) is optimal with its diameter set by gamma, which is either a subpath
// length (covered by lambda_p) or a detour through the new edge (covered by the
// d1_max values). Taking the minimum of all three settles every case.
SolveResult solve(const MetricPath& path) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult out;
  auto& stats = out.stats;

  FeasibilityCache feasible(path);
  auto stage = [&feasible, before = std::size_t{0}]() mutable {
    const std::size_t now = feasible.decision_calls();
    return now - std::exchange(before, now);
  };

  const auto la = lambda_f(path, Component::Alpha, &feasible);
  stats.alpha_calls = stage();
  const auto lb = lambda_f(path, Component::Beta, &feasible);
  stats.beta_calls = stage();
  const auto ld = lambda_f(path, Component::Delta, &feasible);
  stats.delta_calls = stage();
  out.lambda_alpha = la.value;
  out.lambda_beta = lb.value;
  out.lambda_delta = ld.value;
  out.lambda_1 = std::min({la.value, lb.value, ld.value});
  stats.matrix_evaluations = la.stats.evaluations + lb.stats.evaluations + ld.stats.evaluations;

  double best = out.lambda_1;
  bool any_partner = false;
  if (out.lambda_1 > 0.0) {
    const IndexProfile strict = compute_index_profile(path, out.lambda_1, Bound::Strict);
    for (Index i = 1; i <= path.size() && !any_partner; ++i) any_partner = strict.partner(i).has_value();
  }

  if (any_partner) {
    const auto lp = lambda_path(path, &feasible);
    out.lambda_p = lp.value;
    stats.path_calls = stage();
    stats.matrix_evaluations += lp.stats.evaluations;
    best = std::min(best, lp.value);

    const CandidateTable table = build_candidate_table(path, out.lambda_1, lp.value);
    out.lambda_prime = min_feasible_in_set(table.d1_max, feasibility(path, &feasible));
    stats.candidate_calls = stage();
    if (out.lambda_prime) best = std::min(best, *out.lambda_prime);
  }

  const DecisionOutcome final_check = decide(path, best);
  if (!final_check.feasible()) throw std::logic_error("optimal value failed its own feasibility check");
  out.lambda_star = best;
  out.edge = *final_check.witness;
  stats.decision_calls =
      stats.alpha_calls + stats.beta_calls + stats.delta_calls + stats.path_calls + stats.candidate_calls + 1;
  stats.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

}  // namespace doap
