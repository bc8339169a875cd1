#include "doap/instances.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace doap {

namespace {

using nlohmann::json;

struct KindName {
  GeneratorKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {GeneratorKind::EuclideanUniform, "euclidean_uniform"},
    {GeneratorKind::Collinear, "collinear"},
    {GeneratorKind::ConvexPolygon, "convex_polygon"},
    {GeneratorKind::Clustered, "clustered"},
    {GeneratorKind::RandomMetric, "random_metric"},
};

class Params {
 public:
  Params(const GeneratorSpec& spec, std::set<std::string> allowed) : spec_(spec) {
    for (const auto& [key, value] : spec.params) {
      if (!allowed.contains(key))
        throw std::invalid_argument("unknown parameter '" + key + "' for " + std::string(to_string(spec.kind)));
      if (!std::isfinite(value)) throw std::invalid_argument("parameter '" + key + "' must be finite");
    }
  }

  double get(const std::string& key, double fallback) const {
    auto it = spec_.params.find(key);
    return it == spec_.params.end() ? fallback : it->second;
  }

 private:
  const GeneratorSpec& spec_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Coordinates built with cos/sin are rounded to a 2^-40 grid so that tiny libm
// differences do not change the instance.
double snap(double x) { return std::round(x * 0x1.0p40) * 0x1.0p-40; }

// Power of two 2^-30 times the binade of `unit`. Random coordinates and weights
// are floored onto this grid: on a line, distances and path sums then come out
// exact, and ties that the triangle inequality forces survive rounding.
double grid_step(double unit) {
  int top = 0;
  std::frexp(unit, &top);
  return std::ldexp(1.0, top - 30);
}

double on_grid(double x, double step) { return std::floor(x / step) * step; }

MetricPath euclidean_uniform(const GeneratorSpec& spec, SplitMix64& rng) {
  const Params p(spec, {"scale"});
  const double scale = p.get("scale", 1.0);
  require(scale > 0.0, "scale must be positive");
  const double step = grid_step(scale);
  Eigen::MatrixXd pts(spec.dim, spec.n);
  for (Index v = 0; v < spec.n; ++v)
    for (Index c = 0; c < spec.dim; ++c) pts(c, v) = on_grid(scale * rng.uniform(), step);
  return MetricPath::from_points(std::move(pts));
}

MetricPath collinear(const GeneratorSpec& spec, SplitMix64& rng) {
  const Params p(spec, {"spacing", "jitter"});
  const double spacing = p.get("spacing", 1.0);
  const double jitter = p.get("jitter", 0.0);
  require(spacing > 0.0, "spacing must be positive");
  require(jitter >= 0.0 && jitter < 1.0, "jitter must be in [0, 1)");
  const double step = grid_step(spacing);
  Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(spec.dim, spec.n);
  for (Index v = 1; v < spec.n; ++v) {
    const double gap =
        jitter == 0.0 ? spacing : on_grid(spacing * (1.0 + jitter * (2.0 * rng.uniform() - 1.0)), step);
    pts(0, v) = pts(0, v - 1) + gap;
  }
  return MetricPath::from_points(std::move(pts));
}

// Walks n-1 sides of length `side`, turning left between them. The turns add
// up to 2*pi*(n-2)/n, so the vertices are in convex position.
MetricPath convex_polygon(const GeneratorSpec& spec, SplitMix64& rng) {
  const Params p(spec, {"side", "jitter"});
  const double side = p.get("side", 1.0);
  const double jitter = p.get("jitter", 0.0);
  require(spec.dim == 2, "convex_polygon is two-dimensional");
  require(side > 0.0, "side must be positive");
  require(jitter >= 0.0 && jitter < 1.0, "jitter must be in [0, 1)");

  const double base = 2.0 * std::numbers::pi / static_cast<double>(spec.n);
  std::vector<double> turns(static_cast<std::size_t>(std::max<Index>(spec.n - 2, 0)), base);
  if (jitter > 0.0 && !turns.empty()) {
    double total = 0.0;
    for (double& t : turns) total += (t = base * (1.0 + jitter * (2.0 * rng.uniform() - 1.0)));
    const double scale = base * static_cast<double>(turns.size()) / total;
    for (double& t : turns) t *= scale;
  }

  Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(2, spec.n);
  double heading = 0.0, x = 0.0, y = 0.0;
  for (Index v = 1; v < spec.n; ++v) {
    x += side * std::cos(heading);
    y += side * std::sin(heading);
    pts(0, v) = snap(x);
    pts(1, v) = snap(y);
    if (v - 1 < static_cast<Index>(turns.size())) heading += turns[static_cast<std::size_t>(v - 1)];
  }
  return MetricPath::from_points(std::move(pts));
}

// Consecutive runs of vertices share a cluster; offsets use the Irwin-Hall
// sum of four uniforms so that only basic arithmetic is involved.
MetricPath clustered(const GeneratorSpec& spec, SplitMix64& rng) {
  const Params p(spec, {"scale", "clusters", "spread"});
  const double scale = p.get("scale", 1.0);
  const double spread = p.get("spread", 0.05);
  const double clusters_param = p.get("clusters", 4.0);
  require(scale > 0.0, "scale must be positive");
  require(spread >= 0.0, "spread must be nonnegative");
  require(clusters_param >= 1.0 && clusters_param == std::floor(clusters_param), "clusters must be a positive integer");
  const auto clusters = static_cast<Index>(clusters_param);

  const double step = grid_step(scale);
  Eigen::MatrixXd centers(spec.dim, clusters);
  for (Index k = 0; k < clusters; ++k)
    for (Index c = 0; c < spec.dim; ++c) centers(c, k) = scale * rng.uniform();

  Eigen::MatrixXd pts(spec.dim, spec.n);
  for (Index v = 0; v < spec.n; ++v) {
    const Index k = v * clusters / spec.n;
    for (Index c = 0; c < spec.dim; ++c) {
      const double bump = rng.uniform() + rng.uniform() + rng.uniform() + rng.uniform() - 2.0;
      pts(c, v) = on_grid(centers(c, k) + spread * bump, step);
    }
  }
  return MetricPath::from_points(std::move(pts));
}

// Weights sit on the grid of `high`, so the ties d(a,b) = d(a,k) + d(k,b)
// that shortest-path closure creates in bulk stay exact. Passes repeat until
// nothing changes.
MetricPath random_metric(const GeneratorSpec& spec, SplitMix64& rng) {
  const Params p(spec, {"low", "high"});
  const double low = p.get("low", 0.0);
  const double high = p.get("high", 1.0);
  require(low >= 0.0 && high > low, "random_metric needs 0 <= low < high");
  const Index n = spec.n;
  const double step = grid_step(high);
  const double floor_low = std::ceil(low / step) * step;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const double w = low + (high - low) * rng.uniform();
      d(a, b) = d(b, a) = std::max(floor_low, on_grid(w, step));
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (Index k = 0; k < n; ++k) {
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          const double through = d(a, k) + d(k, b);
          if (through < d(a, b)) {
            d(a, b) = through;
            changed = true;
          }
        }
      }
    }
  }
  return MetricPath::from_matrix(std::move(d));
}

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  throw InstanceError(field + ": " + what);
}

double number_at(const json& node, const std::string& field) {
  if (!node.is_number()) schema_error(field, "expected a number, found " + std::string(node.type_name()));
  const double x = node.get<double>();
  if (!std::isfinite(x)) schema_error(field, "value is not finite");
  return x;
}

}  // namespace

std::string_view to_string(GeneratorKind kind) noexcept {
  for (const auto& k : kKindNames)
    if (k.kind == kind) return k.name;
  return "unknown";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  for (const auto& k : kKindNames)
    if (k.name == name) return k.kind;
  throw std::invalid_argument("unknown generator kind '" + std::string(name) + "'");
}

MetricPath generate(const GeneratorSpec& spec) {
  require(spec.n >= 1, "generator needs n >= 1");
  require(spec.dim >= 1, "generator needs dim >= 1");
  SplitMix64 rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::EuclideanUniform: return euclidean_uniform(spec, rng);
    case GeneratorKind::Collinear: return collinear(spec, rng);
    case GeneratorKind::ConvexPolygon: return convex_polygon(spec, rng);
    case GeneratorKind::Clustered: return clustered(spec, rng);
    case GeneratorKind::RandomMetric: return random_metric(spec, rng);
  }
  throw std::invalid_argument("unknown generator kind");
}

json to_json(const MetricPath& path) {
  const Eigen::MatrixXd& src = path.source();
  if (path.kind() == MetricPath::Kind::Points) {
    json points = json::array();
    for (Index v = 0; v < src.cols(); ++v) {
      json row = json::array();
      for (Index c = 0; c < src.rows(); ++c) row.push_back(src(c, v));
      points.push_back(std::move(row));
    }
    return json{{"kind", "points"}, {"dim", src.rows()}, {"points", std::move(points)}};
  }
  json rows = json::array();
  for (Index r = 0; r < src.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < src.cols(); ++c) row.push_back(src(r, c));
    rows.push_back(std::move(row));
  }
  return json{{"kind", "matrix"}, {"matrix", std::move(rows)}};
}

MetricPath from_json(const json& doc, bool check_triangle) {
  if (!doc.is_object()) schema_error("$", "instance must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) schema_error("kind", "missing or not a string");
  const std::string kind = doc["kind"].get<std::string>();

  if (kind == "points") {
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) schema_error("dim", "missing or not an integer");
    const auto dim = doc["dim"].get<Index>();
    if (dim < 1) schema_error("dim", "must be at least 1");
    if (!doc.contains("points") || !doc["points"].is_array()) schema_error("points", "missing or not an array");
    const json& rows = doc["points"];
    if (rows.empty()) schema_error("points", "needs at least one point");
    Eigen::MatrixXd pts(dim, static_cast<Index>(rows.size()));
    for (std::size_t v = 0; v < rows.size(); ++v) {
      const std::string field = "points[" + std::to_string(v) + "]";
      if (!rows[v].is_array()) schema_error(field, "expected an array of coordinates");
      if (static_cast<Index>(rows[v].size()) != dim)
        schema_error(field, "has " + std::to_string(rows[v].size()) + " coordinates, dim is " + std::to_string(dim));
      for (Index c = 0; c < dim; ++c)
        pts(c, static_cast<Index>(v)) = number_at(rows[v][static_cast<std::size_t>(c)],
                                                  field + "[" + std::to_string(c) + "]");
    }
    return MetricPath::from_points(std::move(pts));
  }

  if (kind == "matrix") {
    if (!doc.contains("matrix") || !doc["matrix"].is_array()) schema_error("matrix", "missing or not an array");
    const json& rows = doc["matrix"];
    const auto n = static_cast<Index>(rows.size());
    if (n < 1) schema_error("matrix", "needs at least one row");
    Eigen::MatrixXd d(n, n);
    for (Index r = 0; r < n; ++r) {
      const std::string field = "matrix[" + std::to_string(r) + "]";
      const json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Index>(row.size()) != n)
        schema_error(field, "expected an array of " + std::to_string(n) + " numbers");
      for (Index c = 0; c < n; ++c)
        d(r, c) = number_at(row[static_cast<std::size_t>(c)], field + "[" + std::to_string(c) + "]");
    }
    try {
      return MetricPath::from_matrix(std::move(d), check_triangle);
    } catch (const std::invalid_argument& e) {
      schema_error("matrix", e.what());
    }
  }

  schema_error("kind", "expected \"points\" or \"matrix\", found \"" + kind + "\"");
}

std::string dump_instance(const MetricPath& path) { return to_json(path).dump() + "\n"; }

MetricPath parse_instance(std::string_view text, bool check_triangle) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(doc, check_triangle);
}

MetricPath read_instance(const std::filesystem::path& file, bool check_triangle) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InstanceError("cannot open instance file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str(), check_triangle);
  } catch (const InstanceError& e) {
    throw InstanceError(file.string() + ": " + e.what());
  }
}

void write_instance(const MetricPath& path, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw InstanceError("cannot write instance file " + file.string());
  out << dump_instance(path);
  if (!out) throw InstanceError("failed writing instance file " + file.string());
}

}  // namespace doap
