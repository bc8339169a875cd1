#include "doap/metric_path.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace doap {

namespace {

void check_vertex(const MetricPath& path, Index v, const char* what) {
  if (v < 1 || v > path.size()) {
    std::ostringstream msg;
    msg << what << " index " << v << " outside [1, " << path.size() << "]";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

MetricPath::MetricPath(Kind kind, Eigen::MatrixXd source)
    : kind_(kind), n_(kind == Kind::Points ? source.cols() : source.rows()), source_(std::move(source)) {
  if (n_ < 1) throw std::invalid_argument("a path needs at least one vertex");
  prefix_.resize(n_);
  prefix_[0] = 0.0;
  for (Index k = 1; k < n_; ++k) prefix_[k] = prefix_[k - 1] + d(k, k + 1);
}

MetricPath MetricPath::from_points(Eigen::MatrixXd points) {
  if (points.cols() < 1) throw std::invalid_argument("a path needs at least one vertex");
  if (points.rows() < 1) throw std::invalid_argument("points need at least one coordinate");
  if (!points.allFinite()) throw std::invalid_argument("point coordinates must be finite");
  return MetricPath(Kind::Points, std::move(points));
}

MetricPath MetricPath::from_matrix(Eigen::MatrixXd matrix, bool check_triangle) {
  if (matrix.rows() < 1) throw std::invalid_argument("a path needs at least one vertex");
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("distance matrix must be square");
  const Index n = matrix.rows();
  for (Index r = 0; r < n; ++r) {
    if (matrix(r, r) != 0.0) {
      std::ostringstream msg;
      msg << "matrix[" << r << "][" << r << "] = " << matrix(r, r) << ", diagonal must be zero";
      throw std::invalid_argument(msg.str());
    }
    for (Index c = r + 1; c < n; ++c) {
      const double x = matrix(r, c);
      if (!std::isfinite(x) || x < 0.0) {
        std::ostringstream msg;
        msg << "matrix[" << r << "][" << c << "] = " << x << " is not a finite nonnegative distance";
        throw std::invalid_argument(msg.str());
      }
      if (x != matrix(c, r)) {
        std::ostringstream msg;
        msg << "matrix is not symmetric at [" << r << "][" << c << "]: " << x << " vs " << matrix(c, r);
        throw std::invalid_argument(msg.str());
      }
    }
  }
  MetricPath path(Kind::Matrix, std::move(matrix));
  if (check_triangle) {
    if (auto bad = path.triangle_violation(); !bad.empty()) throw std::invalid_argument(bad);
  }
  return path;
}

double MetricPath::dist(Index u, Index v) const {
  check_vertex(*this, u, "vertex");
  check_vertex(*this, v, "vertex");
  return d(u, v);
}

double MetricPath::path_dist(Index i, Index j) const {
  check_vertex(*this, i, "path");
  check_vertex(*this, j, "path");
  if (i > j) throw std::invalid_argument("path_dist requires i <= j");
  return dp(i, j);
}

std::string MetricPath::triangle_violation(double slack) const {
  for (Index i = 1; i <= n_; ++i) {
    for (Index j = i + 1; j <= n_; ++j) {
      const double direct = d(i, j);
      for (Index k = 1; k <= n_; ++k) {
        if (d(i, k) + d(k, j) + slack < direct) {
          std::ostringstream msg;
          msg << "triangle inequality violated: d(" << i << "," << k << ") + d(" << k << "," << j
              << ") < d(" << i << "," << j << ")";
          return msg.str();
        }
      }
    }
  }
  return {};
}

void check_edge(const MetricPath& path, CandidateEdge e) {
  check_vertex(path, e.i, "edge");
  check_vertex(path, e.j, "edge");
  if (e.i > e.j) throw std::invalid_argument("edge requires i <= j");
}

double delta(const MetricPath& path, CandidateEdge e) {
  check_edge(path, e);
  return detail::delta_unchecked(path, e.i, e.j);
}

// On [i,j] the distance from v_1 is min(up(k), down(k)) with up = d_P(1,k)
// non-decreasing and down = d_P(1,i) + w + d_P(k,j) non-increasing. With K the
// largest k where up(k) <= down(k), the maximum is max(up(K), down(K+1)).
double alpha(const MetricPath& path, CandidateEdge e, std::size_t* probes) {
  check_edge(path, e);
  const auto [i, j] = e;
  const double w = path.d(i, j);
  std::size_t count = 0;
  auto up = [&](Index k) { return path.a(k); };
  auto down = [&](Index k) { return detail::via_edge_from_start(path, i, j, w, k); };

  // up(i) <= down(i) always holds, so lo is a valid answer.
  Index lo = i, hi = j;
  while (lo < hi) {
    const Index mid = lo + (hi - lo + 1) / 2;
    ++count;
    if (up(mid) <= down(mid)) lo = mid;
    else hi = mid - 1;
  }
  double best = up(lo);
  ++count;
  if (lo < j) {
    best = std::max(best, down(lo + 1));
    ++count;
  }
  if (probes) *probes += count;
  return best;
}

double beta(const MetricPath& path, CandidateEdge e, std::size_t* probes) {
  check_edge(path, e);
  const auto [i, j] = e;
  const Index n = path.size();
  const double w = path.d(i, j);
  std::size_t count = 0;
  auto direct = [&](Index k) { return path.dp(k, n); };
  auto detour = [&](Index k) { return detail::via_edge_from_end(path, i, j, w, k); };

  // Smallest k with direct(k) <= detour(k); k = j always qualifies.
  Index lo = i, hi = j;
  while (lo < hi) {
    const Index mid = lo + (hi - lo) / 2;
    ++count;
    if (direct(mid) <= detour(mid)) hi = mid;
    else lo = mid + 1;
  }
  double best = direct(lo);
  ++count;
  if (lo > i) {
    best = std::max(best, detour(lo - 1));
    ++count;
  }
  if (probes) *probes += count;
  return best;
}

double cycle_detour(const MetricPath& path, CandidateEdge e, Index k, Index l) {
  check_edge(path, e);
  if (k > l || k < e.i || l > e.j) {
    std::ostringstream msg;
    msg << "cycle_detour needs " << e.i << " <= k <= l <= " << e.j << ", got k=" << k << ", l=" << l;
    throw std::invalid_argument(msg.str());
  }
  return (path.dp(e.i, k) + path.d(e.i, e.j)) + path.dp(l, e.j);
}

double cycle_length(const MetricPath& path, CandidateEdge e) {
  check_edge(path, e);
  return path.dp(e.i, e.j) + path.d(e.i, e.j);
}

}  // namespace doap
