#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "doap/decision.hpp"
#include "doap/optimize.hpp"
#include "doap/oracle.hpp"
#include "support.hpp"

using namespace doap;
using doap::testing::close_rel;

namespace {

const std::vector<testing::Sample>& shared_corpus() {
  static const auto samples = testing::corpus(520, 2, 40, 41);
  return samples;
}

// The detour bound of C(i,a) straight from its definition: every row j of the
// cycle that cannot reach a along the path within lambda_p.
double detour_by_scan(const MetricPath& path, double lambda_p, Index i, Index a) {
  double worst = 0.0;
  for (Index j = i; j <= a; ++j) {
    Index g = j;
    while (g < path.size() && path.dp(j, g + 1) < lambda_p) ++g;
    if (g >= a) continue;
    worst = std::max(worst, (path.dp(i, j) + path.d(i, a)) + path.dp(g + 1, a));
  }
  return worst;
}

}  // namespace

TEST_CASE("lambda_f examples") {
  const auto sq4 = testing::square4();
  CHECK(lambda_f(sq4, Component::Beta).value == 2.0);
  CHECK(lambda_f(testing::collinear(), Component::Delta).value == 4.0);

  const auto one = testing::single_vertex();
  for (Component f : {Component::Alpha, Component::Beta, Component::Delta}) CHECK(lambda_f(one, f).value == 0.0);
  CHECK(lambda_path(one).value == 0.0);
}

TEST_CASE("padded component matrices are sorted") {
  for (const auto& s : shared_corpus()) {
    if (s.path.size() > 20) continue;
    const Index n = s.path.size();
    for (const auto& view : {component_matrix(s.path, Component::Alpha), component_matrix(s.path, Component::Beta),
                             component_matrix(s.path, Component::Delta), path_length_matrix(s.path)}) {
      std::size_t bad = 0;
      for (Index r = 1; r <= n; ++r)
        for (Index c = 1; c <= n; ++c) {
          const double v = view.eval(r, c);
          if (c < n) {
            const double right = view.eval(r, c + 1);
            bad += view.row_order == Order::Ascending ? right < v : right > v;
          }
          if (r < n) {
            const double down = view.eval(r + 1, c);
            bad += view.col_order == Order::Ascending ? down < v : down > v;
          }
        }
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("candidate table examples") {
  const auto col5 = testing::collinear();
  const auto above = build_candidate_table(col5, std::nextafter(4.0, 5.0), 1.5);
  for (Index i = 1; i <= 5; ++i) CHECK(above.partner[i - 1] == i);
  CHECK(above.rows == std::vector<Index>{1, 2, 3, 4, 5});
  // a_i = i leaves no cycle to escape from.
  CHECK(above.escaping_rows.empty());

  const auto sq4 = build_candidate_table(testing::square4(), 2.0, 1.0);
  CHECK(sq4.partner[0] == 0);
  CHECK(std::find(sq4.rows.begin(), sq4.rows.end(), Index{1}) == sq4.rows.end());

  const auto none = build_candidate_table(col5, 0.0, 1.0);
  CHECK(none.rows.empty());
  CHECK(none.escaping_rows.empty());
  CHECK(none.d1_max.empty());
  CHECK(none.partner == std::vector<Index>(5, 0));
}

TEST_CASE("candidate detours match a direct scan") {
  std::size_t checked = 0;
  for (const auto& s : shared_corpus()) {
    const auto r = solve(s.path);
    if (!r.lambda_p) continue;
    const auto table = build_candidate_table(s.path, r.lambda_1, *r.lambda_p);
    REQUIRE(table.escaping_rows.size() == table.d1_max.size());
    for (std::size_t k = 0; k < table.escaping_rows.size(); ++k) {
      const Index i = table.escaping_rows[k];
      const Index a = table.partner[i - 1];
      CHECK(a > i);
      CHECK(close_rel(table.d1_max[k], detour_by_scan(s.path, *r.lambda_p, i, a), 1e-12));
      ++checked;
    }
    for (Index i : table.rows) {
      const bool escapes = std::find(table.escaping_rows.begin(), table.escaping_rows.end(), i) != table.escaping_rows.end();
      if (!escapes && table.partner[i - 1] > i)
        CHECK(detour_by_scan(s.path, *r.lambda_p, i, table.partner[i - 1]) == 0.0);
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("solve examples") {
  auto r = solve(testing::square4());
  CHECK(r.lambda_star == 2.0);
  CHECK(r.edge == CandidateEdge{1, 4});

  r = solve(testing::collinear());
  CHECK(r.lambda_star == 4.0);
  CHECK(oracle::brute_profile(testing::collinear(), r.edge).diameter == 4.0);

  r = solve(testing::two_points(7.0));
  CHECK(r.lambda_star == 7.0);
  CHECK((r.edge == CandidateEdge{1, 2} || r.edge == CandidateEdge{1, 1}));

  r = solve(testing::single_vertex());
  CHECK(r.lambda_star == 0.0);
  CHECK(r.edge == CandidateEdge{1, 1});
}

TEST_CASE("solve agrees with the oracle") {
  std::size_t bad = 0;
  for (const auto& s : shared_corpus()) {
    const auto r = solve(s.path);
    const auto brute = oracle::brute_solve(s.path);
    const double edge_diameter = oracle::brute_profile(s.path, r.edge).diameter;
    const bool ok = close_rel(r.lambda_star, brute.lambda_star, 1e-9) && close_rel(edge_diameter, r.lambda_star, 1e-9);
    if (!ok) {
      ++bad;
      MESSAGE(to_string(s.spec.kind) << " n=" << s.spec.n << " seed=" << s.spec.seed << ": solve " << r.lambda_star
                                     << ", oracle " << brute.lambda_star);
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("solve result is consistent with its stages") {
  for (const auto& s : shared_corpus()) {
    const auto r = solve(s.path);
    CHECK(r.lambda_1 == std::min({r.lambda_alpha, r.lambda_beta, r.lambda_delta}));
    CHECK(r.lambda_star <= r.lambda_1);
    if (r.lambda_p) CHECK(r.lambda_star <= *r.lambda_p);
    if (r.lambda_prime) CHECK(r.lambda_star <= *r.lambda_prime);
    CHECK(decide(s.path, r.lambda_star).feasible());
    if (r.lambda_star > 0.0) CHECK_FALSE(decide(s.path, r.lambda_star * (1 - 1e-6)).feasible());
  }
}

TEST_CASE("decision calls stay within the per-stage budgets") {
  SplitMix64 rng(42);
  for (Index n : {Index{2}, Index{17}, Index{300}, Index{5000}, Index{40000}}) {
    GeneratorSpec spec{GeneratorKind::EuclideanUniform, n, 2, rng.next(), {}};
    const auto path = generate(spec);
    const auto r = solve(path);
    const auto per_search = search_budget::predicate_calls(n);
    CHECK(r.stats.alpha_calls <= per_search);
    CHECK(r.stats.beta_calls <= per_search);
    CHECK(r.stats.delta_calls <= per_search);
    CHECK(r.stats.path_calls <= per_search);
    CHECK(r.stats.candidate_calls <= search_budget::levels(n) + 1);
    CHECK(static_cast<double>(r.stats.decision_calls) <= 4.0 * (4.0 * std::log2(static_cast<double>(n)) + 8.0));
    CHECK(r.stats.matrix_evaluations <= 4 * search_budget::evaluations(n));
  }
}

TEST_CASE("feasibility cache answers from its bracket") {
  const auto sq4 = testing::square4();
  FeasibilityCache cache(sq4);
  CHECK(cache(2.0));
  CHECK(cache.decision_calls() == 1);
  CHECK(cache(3.0));
  CHECK(cache.decision_calls() == 1);
  CHECK_FALSE(cache(1.9));
  CHECK(cache.decision_calls() == 2);
  CHECK_FALSE(cache(1.0));
  CHECK_FALSE(cache(1.9));
  CHECK(cache.decision_calls() == 2);
  CHECK_FALSE(cache(1.95));
  CHECK(cache.decision_calls() == 3);
}
