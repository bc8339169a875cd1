#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace doap {

/// Vertex and matrix positions. Public positions are 1-based.
using Index = Eigen::Index;

/// The added edge e(v_i, v_j) with 1 <= i <= j <= n. i == j leaves the path unchanged.
struct CandidateEdge {
  Index i = 1;
  Index j = 1;

  friend bool operator==(const CandidateEdge&, const CandidateEdge&) = default;
};

/// The four diameter components of G(i,j) and their maxima.
struct DiagnosticProfile {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double diameter = 0.0;  // max of all four
  double eta = 0.0;       // max of alpha, beta, delta
};

/// A path v_1..v_n whose vertices live in a metric space, either as points
/// (Euclidean distances) or as an explicit distance matrix.
///
/// Holds the prefix sums A[k] = sum_{l<k} |v_l v_{l+1}| so that subpath
/// lengths are A[j] - A[i]. Immutable after construction.
class MetricPath {
 public:
  enum class Kind { Points, Matrix };

  /// One column per vertex; `points.cols()` is n.
  static MetricPath from_points(Eigen::MatrixXd points);

  /// Symmetric, nonnegative, zero diagonal. The O(n^3) triangle check is opt-in.
  static MetricPath from_matrix(Eigen::MatrixXd matrix, bool check_triangle = false);

  Index size() const noexcept { return n_; }
  Kind kind() const noexcept { return kind_; }
  Index dim() const noexcept { return kind_ == Kind::Points ? source_.rows() : 0; }

  /// Points (dim x n) or the distance matrix (n x n), depending on kind().
  const Eigen::MatrixXd& source() const noexcept { return source_; }
  const Eigen::VectorXd& prefix() const noexcept { return prefix_; }

  /// |v_u v_v|. Throws std::invalid_argument on an out-of-range index.
  double dist(Index u, Index v) const;

  /// d_P(i, j) = A[j] - A[i] for i <= j.
  double path_dist(Index i, Index j) const;

  /// d_P(1, n).
  double length() const noexcept { return prefix_[n_ - 1]; }

  // Unchecked 1-based accessors for hot loops.
  double d(Index u, Index v) const noexcept {
    if (kind_ == Kind::Matrix) return source_(u - 1, v - 1);
    return (source_.col(u - 1) - source_.col(v - 1)).norm();
  }
  double dp(Index i, Index j) const noexcept { return prefix_[j - 1] - prefix_[i - 1]; }
  double a(Index k) const noexcept { return prefix_[k - 1]; }

  /// Returns an empty string when the triangle inequality holds, otherwise a
  /// description of the first violating triple.
  std::string triangle_violation(double slack = 0.0) const;

 private:
  MetricPath(Kind kind, Eigen::MatrixXd source);

  Kind kind_;
  Index n_;
  Eigen::MatrixXd source_;
  Eigen::VectorXd prefix_;
};

/// Throws std::invalid_argument unless 1 <= e.i <= e.j <= n.
void check_edge(const MetricPath& path, CandidateEdge e);

// Diameter components of G(i,j).

/// Shortest v_1 -> v_n distance in G(i,j). O(1).
double delta(const MetricPath& path, CandidateEdge e);

/// max_{i<=k<=j} d_G(v_1, v_k). O(log n) by binary search on the unimodal profile.
/// When `probes` is non-null it is incremented once per evaluated position.
double alpha(const MetricPath& path, CandidateEdge e, std::size_t* probes = nullptr);

/// max_{i<=k<=j} d_G(v_k, v_n). O(log n), mirror of alpha.
double beta(const MetricPath& path, CandidateEdge e, std::size_t* probes = nullptr);

/// Length of the route from v_k to v_l through the added edge inside C(i,j),
/// for i <= k <= l <= j.
double cycle_detour(const MetricPath& path, CandidateEdge e, Index k, Index l);

/// |C(i,j)| = d_P(i,j) + |v_i v_j|.
double cycle_length(const MetricPath& path, CandidateEdge e);

namespace detail {

// Shared by the evaluators and the O(1) threshold tests so both see the same
// rounded values.

// d_P(1,i) + |v_i v_j| + d_P(k,j): reach v_k from v_1 over the added edge.
inline double via_edge_from_start(const MetricPath& p, Index i, Index j, double w, Index k) noexcept {
  return (p.a(i) + w) + p.dp(k, j);
}

// d_P(i,k) + |v_i v_j| + d_P(j,n): reach v_k from v_n over the added edge.
inline double via_edge_from_end(const MetricPath& p, Index i, Index j, double w, Index k) noexcept {
  return (p.dp(i, k) + w) + p.dp(j, p.size());
}

// An edge between neighbours duplicates a path edge, so G(i,i+1) is P. Summing
// around it would only add rounding below d_P(1,n).
inline double delta_unchecked(const MetricPath& p, Index i, Index j) noexcept {
  if (j <= i + 1) return p.length();
  const double shortcut = (p.a(i) + p.d(i, j)) + p.dp(j, p.size());
  return shortcut < p.length() ? shortcut : p.length();
}

}  // namespace detail

}  // namespace doap
