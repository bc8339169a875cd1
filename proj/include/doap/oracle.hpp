#pragma once

#include "doap/metric_path.hpp"

namespace doap::oracle {

/// Default refusal threshold for brute_solve.
inline constexpr Index kDefaultCap = 200;

/// Shortest u-v distance in G(i,j). The added edge is used at most once, in
/// either direction, so three candidate routes cover every shortest path.
double brute_pair_distance(const MetricPath& path, CandidateEdge e, Index u, Index v);

/// alpha, beta, gamma, delta straight from their max-over-vertices
/// definitions. O(m^2) for m = j - i + 1.
DiagnosticProfile brute_profile(const MetricPath& path, CandidateEdge e);

/// max over all vertex pairs of brute_pair_distance. O(n^2).
double brute_diameter(const MetricPath& path, CandidateEdge e);

/// Diameter of the explicit graph P + e via Floyd-Warshall. O(n^3), sums edge
/// lengths directly instead of using prefix sums.
double floyd_warshall_diameter(const MetricPath& path, CandidateEdge e);

struct BruteSolution {
  double lambda_star = 0.0;
  CandidateEdge edge;
};

/// min over all 1 <= i <= j <= n of brute_profile(i,j).diameter, first pair in
/// lexicographic order on ties. Throws std::length_error when n > cap.
BruteSolution brute_solve(const MetricPath& path, Index cap = kDefaultCap);

}  // namespace doap::oracle
