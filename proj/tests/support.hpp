#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "doap/instances.hpp"
#include "doap/metric_path.hpp"

namespace doap::testing {

// v1=(0,0), v2=(1,0), v3=(1,1), v4=(0,1)
inline MetricPath square4() {
  Eigen::MatrixXd pts(2, 4);
  pts << 0, 1, 1, 0,
         0, 0, 1, 1;
  return MetricPath::from_points(pts);
}

// Points 0, 1, ..., n-1 on a line (n = 5 by default).
inline MetricPath collinear(Index n = 5, double spacing = 1.0) {
  Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(1, n);
  for (Index k = 0; k < n; ++k) pts(0, k) = spacing * static_cast<double>(k);
  return MetricPath::from_points(pts);
}

inline MetricPath two_points(double gap) {
  Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(1, 2);
  pts(0, 1) = gap;
  return MetricPath::from_points(pts);
}

inline MetricPath single_vertex() { return MetricPath::from_points(Eigen::MatrixXd::Zero(2, 1)); }

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

struct Sample {
  GeneratorSpec spec;
  MetricPath path;
};

inline constexpr GeneratorKind kAllKinds[] = {GeneratorKind::EuclideanUniform, GeneratorKind::RandomMetric,
                                              GeneratorKind::Clustered, GeneratorKind::ConvexPolygon,
                                              GeneratorKind::Collinear};

// Mixed-kind corpus, n in [n_min, n_max]. Kinds rotate; euclidean_uniform
// also rotates through dimensions 1 to 3.
inline std::vector<Sample> corpus(int count, Index n_min, Index n_max, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) {
    GeneratorSpec spec;
    spec.kind = kAllKinds[static_cast<std::size_t>(t) % std::size(kAllKinds)];
    spec.n = n_min + static_cast<Index>(rng.next() % static_cast<std::uint64_t>(n_max - n_min + 1));
    spec.dim = spec.kind == GeneratorKind::EuclideanUniform ? 1 + static_cast<Index>((t / 5) % 3) : 2;
    spec.seed = rng.next();
    if (spec.kind == GeneratorKind::ConvexPolygon || spec.kind == GeneratorKind::Collinear) spec.params["jitter"] = 0.5;
    out.push_back({spec, generate(spec)});
  }
  return out;
}

}  // namespace doap::testing
