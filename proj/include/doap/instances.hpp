#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "doap/metric_path.hpp"

namespace doap {

/// SplitMix64. Part of the instance contract: the same seed yields the same
/// stream on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Top 53 bits scaled into [0, 1).
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class GeneratorKind { EuclideanUniform, Collinear, ConvexPolygon, Clustered, RandomMetric };

std::string_view to_string(GeneratorKind kind) noexcept;
/// Throws std::invalid_argument for unknown names.
GeneratorKind parse_generator_kind(std::string_view name);

/// Kind-specific params (defaults in parentheses):
///   euclidean_uniform  scale (1)
///   collinear          spacing (1), jitter (0)      gaps spacing * (1 + jitter * (2u - 1))
///   convex_polygon     side (1), jitter (0)         2-D only; jitter 0 gives the regular polygon
///   clustered          scale (1), clusters (4), spread (0.05)
///   random_metric      low (0), high (1)            metric closure of uniform weights
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::EuclideanUniform;
  Index n = 2;
  Index dim = 2;
  std::uint64_t seed = 0;
  std::map<std::string, double> params;
};

/// Throws std::invalid_argument on bad sizes or unknown/out-of-range params.
MetricPath generate(const GeneratorSpec& spec);

/// Load or schema failure, with the offending field in the message.
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const MetricPath& path);
MetricPath from_json(const nlohmann::json& doc, bool check_triangle = false);

/// Compact JSON text terminated by a newline.
std::string dump_instance(const MetricPath& path);
MetricPath parse_instance(std::string_view text, bool check_triangle = false);

MetricPath read_instance(const std::filesystem::path& file, bool check_triangle = false);
void write_instance(const MetricPath& path, const std::filesystem::path& file);

}  // namespace doap
