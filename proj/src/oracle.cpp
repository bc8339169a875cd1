#include "doap/oracle.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace doap::oracle {

namespace {

double along(const MetricPath& p, Index u, Index v) { return u <= v ? p.dp(u, v) : p.dp(v, u); }

}  // namespace

double brute_pair_distance(const MetricPath& path, CandidateEdge e, Index u, Index v) {
  check_edge(path, e);
  if (u > v) std::swap(u, v);
  if (u < 1 || v > path.size()) throw std::invalid_argument("vertex index out of range");
  const double direct = along(path, u, v);
  // A loop or a copy of a path edge leaves G(i,j) = P. Routing over it would
  // only round differently from the path itself.
  if (e.j <= e.i + 1) return direct;
  const double w = path.d(e.i, e.j);
  const double via_i_first = (along(path, u, e.i) + w) + along(path, e.j, v);
  const double via_j_first = (along(path, u, e.j) + w) + along(path, e.i, v);
  return std::min({direct, via_i_first, via_j_first});
}

DiagnosticProfile brute_profile(const MetricPath& path, CandidateEdge e) {
  check_edge(path, e);
  const Index n = path.size();
  const auto [i, j] = e;
  const double w = path.d(i, j);
  DiagnosticProfile out;
  for (Index k = i; k <= j; ++k) {
    out.alpha = std::max(out.alpha, brute_pair_distance(path, e, 1, k));
    out.beta = std::max(out.beta, brute_pair_distance(path, e, k, n));
    for (Index l = k; l <= j; ++l) {
      const double around = (path.dp(i, k) + w) + path.dp(l, j);
      out.gamma = std::max(out.gamma, std::min(path.dp(k, l), around));
    }
  }
  out.delta = brute_pair_distance(path, e, 1, n);
  out.eta = std::max({out.alpha, out.beta, out.delta});
  out.diameter = std::max(out.gamma, out.eta);
  return out;
}

double brute_diameter(const MetricPath& path, CandidateEdge e) {
  check_edge(path, e);
  double best = 0.0;
  for (Index u = 1; u <= path.size(); ++u)
    for (Index v = u; v <= path.size(); ++v) best = std::max(best, brute_pair_distance(path, e, u, v));
  return best;
}

double floyd_warshall_diameter(const MetricPath& path, CandidateEdge e) {
  check_edge(path, e);
  const Index n = path.size();
  const double inf = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, inf);
  for (Index v = 0; v < n; ++v) d(v, v) = 0.0;
  auto link = [&](Index a, Index b, double w) {
    d(a, b) = std::min(d(a, b), w);
    d(b, a) = std::min(d(b, a), w);
  };
  for (Index v = 1; v < n; ++v) link(v - 1, v, path.d(v, v + 1));
  if (e.i != e.j) link(e.i - 1, e.j - 1, path.d(e.i, e.j));
  for (Index k = 0; k < n; ++k)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) d(a, b) = std::min(d(a, b), d(a, k) + d(k, b));
  return d.maxCoeff();
}

BruteSolution brute_solve(const MetricPath& path, Index cap) {
  const Index n = path.size();
  if (n > cap) {
    std::ostringstream msg;
    msg << "brute-force oracle refuses n = " << n << " above cap " << cap;
    throw std::length_error(msg.str());
  }
  BruteSolution best{std::numeric_limits<double>::infinity(), {1, 1}};
  for (Index i = 1; i <= n; ++i) {
    for (Index j = i; j <= n; ++j) {
      const double d = brute_profile(path, {i, j}).diameter;
      if (d < best.lambda_star) best = {d, {i, j}};
    }
  }
  return best;
}

}  // namespace doap::oracle
