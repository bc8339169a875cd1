#include "doap/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "doap/decision.hpp"
#include "doap/instances.hpp"
#include "doap/optimize.hpp"
#include "doap/oracle.hpp"

namespace doap::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json edge_json(CandidateEdge e) { return json::array({e.i, e.j}); }

std::string edge_text(CandidateEdge e) {
  std::ostringstream s;
  s << "(" << e.i << ", " << e.j << ")";
  return s.str();
}

json instance_digest(const std::string& file, const MetricPath& path) {
  return json{{"file", file},
              {"n", path.size()},
              {"kind", path.kind() == MetricPath::Kind::Points ? "points" : "matrix"}};
}

Index oracle_cap() {
  if (const char* env = std::getenv("DOAP_ORACLE_CAP")) {
    char* end = nullptr;
    const long long cap = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1)
      throw std::invalid_argument(std::string("DOAP_ORACLE_CAP must be a positive integer, got '") + env + "'");
    return static_cast<Index>(cap);
  }
  return oracle::kDefaultCap;
}

bool agrees(double value, double reference) {
  return std::abs(value - reference) <= 1e-9 * std::max(1.0, std::abs(reference));
}

std::map<std::string, double> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, double> params;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("--param expects key=value, got '" + item + "'");
    std::size_t used = 0;
    const std::string value = item.substr(eq + 1);
    double x = 0.0;
    try {
      x = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw std::invalid_argument("--param value is not a number: '" + item + "'");
    params[item.substr(0, eq)] = x;
  }
  return params;
}

struct Options {
  // gen
  std::string kind = "euclidean_uniform";
  Index n = 10;
  Index dim = 2;
  std::uint64_t seed = 1;
  std::vector<std::string> params;
  std::string output;
  // instance commands
  std::string instance;
  double lambda = 0.0;
  bool check_triangle = false;
  bool json_mode = false;
  // verify / bench
  int trials = 100;
  Index n_max = 30;
  std::vector<Index> sizes{1024, 2048, 4096};
  int reps = 5;
};

int cmd_gen(const Options& o, std::ostream& out) {
  GeneratorSpec spec{parse_generator_kind(o.kind), o.n, o.dim, o.seed, parse_params(o.params)};
  const MetricPath path = generate(spec);
  if (o.output.empty()) {
    out << dump_instance(path);
    return Ok;
  }
  write_instance(path, o.output);
  if (o.json_mode) {
    out << json{{"command", "gen"}, {"instance", instance_digest(o.output, path)}, {"seed", o.seed}}.dump() << "\n";
  } else {
    out << "wrote " << to_string(spec.kind) << " instance with n = " << path.size() << " to " << o.output << "\n";
  }
  return Ok;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const MetricPath path = read_instance(o.instance, o.check_triangle);
  const auto start = Clock::now();
  DecisionCounters counters;
  const DecisionOutcome result = decide(path, o.lambda, Bound::Inclusive, &counters);
  const double wall = ms_since(start);
  if (o.json_mode) {
    json report{{"command", "decide"},
                {"instance", instance_digest(o.instance, path)},
                {"result", {{"lambda", o.lambda}, {"feasible", result.feasible()}}},
                {"stats", {{"threshold_tests", counters.threshold_tests}, {"gamma_tests", counters.gamma_tests}}},
                {"wall_ms", wall}};
    report["result"]["witness"] = result.witness ? edge_json(*result.witness) : json(nullptr);
    out << report.dump() << "\n";
  } else {
    out << "lambda " << o.lambda << " is " << (result.feasible() ? "feasible" : "infeasible");
    if (result.witness) out << ", witness edge " << edge_text(*result.witness);
    out << "\n";
  }
  return result.feasible() ? Ok : Infeasible;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const MetricPath path = read_instance(o.instance, o.check_triangle);
  const auto start = Clock::now();
  const SolveResult r = solve(path);
  const double wall = ms_since(start);
  if (o.json_mode) {
    json result{{"lambda_star", r.lambda_star},     {"edge", edge_json(r.edge)},   {"lambda_alpha", r.lambda_alpha},
                {"lambda_beta", r.lambda_beta},     {"lambda_delta", r.lambda_delta}, {"lambda_1", r.lambda_1}};
    result["lambda_p"] = r.lambda_p ? json(*r.lambda_p) : json(nullptr);
    result["lambda_prime"] = r.lambda_prime ? json(*r.lambda_prime) : json(nullptr);
    json report{{"command", "solve"},
                {"instance", instance_digest(o.instance, path)},
                {"result", std::move(result)},
                {"stats",
                 {{"decision_calls", r.stats.decision_calls},
                  {"matrix_evaluations", r.stats.matrix_evaluations},
                  {"stage_calls",
                   {{"alpha", r.stats.alpha_calls},
                    {"beta", r.stats.beta_calls},
                    {"delta", r.stats.delta_calls},
                    {"path", r.stats.path_calls},
                    {"candidates", r.stats.candidate_calls}}}}},
                {"wall_ms", wall}};
    out << report.dump() << "\n";
  } else {
    out << std::setprecision(17) << "optimal diameter " << r.lambda_star << " with edge " << edge_text(r.edge) << "\n"
        << "decision calls " << r.stats.decision_calls << ", matrix evaluations " << r.stats.matrix_evaluations
        << ", " << std::setprecision(4) << wall << " ms\n";
  }
  return Ok;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const MetricPath path = read_instance(o.instance, o.check_triangle);
  const auto start = Clock::now();
  const auto r = oracle::brute_solve(path, oracle_cap());
  const double wall = ms_since(start);
  if (o.json_mode) {
    out << json{{"command", "oracle"},
                {"instance", instance_digest(o.instance, path)},
                {"result", {{"lambda_star", r.lambda_star}, {"edge", edge_json(r.edge)}}},
                {"wall_ms", wall}}
               .dump()
        << "\n";
  } else {
    out << std::setprecision(17) << "brute-force optimal diameter " << r.lambda_star << " with edge "
        << edge_text(r.edge) << "\n";
  }
  return Ok;
}

constexpr GeneratorKind kVerifyKinds[] = {GeneratorKind::EuclideanUniform, GeneratorKind::RandomMetric,
                                          GeneratorKind::Clustered, GeneratorKind::ConvexPolygon,
                                          GeneratorKind::Collinear};

GeneratorSpec verify_spec(int trial, Index n_max, SplitMix64& rng) {
  GeneratorSpec spec;
  spec.kind = kVerifyKinds[static_cast<std::size_t>(trial) % std::size(kVerifyKinds)];
  spec.n = 2 + static_cast<Index>(rng.next() % static_cast<std::uint64_t>(n_max - 1));
  spec.dim = spec.kind == GeneratorKind::EuclideanUniform ? 1 + static_cast<Index>(rng.next() % 3) : 2;
  spec.seed = rng.next();
  if (spec.kind == GeneratorKind::ConvexPolygon || spec.kind == GeneratorKind::Collinear) spec.params["jitter"] = 0.5;
  return spec;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.n_max < 2) throw std::invalid_argument("--n-max must be at least 2");
  if (o.n_max > oracle_cap()) throw std::invalid_argument("--n-max exceeds the oracle cap");
  SplitMix64 rng(o.seed);
  out << "trial,kind,n,seed,solve_lambda,oracle_lambda,edge_diameter,agree\n" << std::setprecision(17);
  int failures = 0;
  for (int t = 0; t < o.trials; ++t) {
    const GeneratorSpec spec = verify_spec(t, o.n_max, rng);
    const MetricPath path = generate(spec);
    const SolveResult fast = solve(path);
    const auto brute = oracle::brute_solve(path, oracle_cap());
    const double edge_d = oracle::brute_profile(path, fast.edge).diameter;
    const bool ok = agrees(fast.lambda_star, brute.lambda_star) && agrees(edge_d, fast.lambda_star);
    failures += ok ? 0 : 1;
    out << t << "," << to_string(spec.kind) << "," << spec.n << "," << spec.seed << "," << fast.lambda_star << ","
        << brute.lambda_star << "," << edge_d << "," << (ok ? 1 : 0) << "\n";
  }
  return failures == 0 ? Ok : Infeasible;
}

int cmd_bench(const Options& o, std::ostream& out) {
  if (o.reps < 1) throw std::invalid_argument("--reps must be positive");
  out << "size,time_ms,decision_calls,evals\n";
  for (Index size : o.sizes) {
    if (size < 1) throw std::invalid_argument("bench sizes must be positive");
    std::vector<double> times;
    std::size_t calls = 0, evals = 0;
    for (int rep = 0; rep < o.reps; ++rep) {
      GeneratorSpec spec{parse_generator_kind(o.kind), size, o.dim, o.seed + static_cast<std::uint64_t>(rep),
                         parse_params(o.params)};
      const MetricPath path = generate(spec);
      const SolveResult r = solve(path);
      times.push_back(std::chrono::duration<double, std::milli>(r.stats.elapsed).count());
      calls = std::max(calls, r.stats.decision_calls);
      evals = std::max(evals, r.stats.matrix_evaluations);
    }
    std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
    out << size << "," << times[times.size() / 2] << "," << calls << "," << evals << "\n";
  }
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-edge diameter-optimal augmentation of metric paths"};
  app.require_subcommand(1, 1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a seeded instance file");
  gen->add_option("--kind", o.kind, "euclidean_uniform | collinear | convex_polygon | clustered | random_metric");
  gen->add_option("--n", o.n, "Vertex count")->check(CLI::PositiveNumber);
  gen->add_option("--dim", o.dim, "Dimension of point kinds")->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "Generator seed");
  gen->add_option("--param", o.params, "Kind-specific parameter key=value (repeatable)");
  gen->add_option("-o,--output", o.output, "Output file (default: stdout)");
  gen->add_flag("--json", o.json_mode, "Machine-readable report");

  auto* dec = app.add_subcommand("decide", "Is some single added edge able to bring the diameter to <= lambda?");
  dec->add_option("instance", o.instance, "Instance JSON file")->required();
  dec->add_option("--lambda", o.lambda, "Threshold")->required();

  auto* sol = app.add_subcommand("solve", "Minimum diameter and an optimal edge");
  sol->add_option("instance", o.instance, "Instance JSON file")->required();

  auto* orc = app.add_subcommand("oracle", "Brute-force minimum diameter (refuses n above DOAP_ORACLE_CAP)");
  orc->add_option("instance", o.instance, "Instance JSON file")->required();

  for (auto* sub : {dec, sol, orc}) {
    sub->add_flag("--json", o.json_mode, "Machine-readable report");
    sub->add_flag("--check-triangle", o.check_triangle, "Validate the triangle inequality of matrix instances");
  }

  auto* ver = app.add_subcommand("verify", "Compare solve against the oracle on random instances (CSV)");
  ver->add_option("--trials", o.trials, "Number of instances")->check(CLI::NonNegativeNumber);
  ver->add_option("--n-max", o.n_max, "Largest vertex count");
  ver->add_option("--seed", o.seed, "Corpus seed");

  auto* ben = app.add_subcommand("bench", "Median solve time per size (CSV)");
  ben->add_option("--sizes", o.sizes, "Vertex counts")->delimiter(',');
  ben->add_option("--reps", o.reps, "Repetitions per size");
  ben->add_option("--kind", o.kind, "Generator kind");
  ben->add_option("--dim", o.dim, "Dimension")->check(CLI::PositiveNumber);
  ben->add_option("--seed", o.seed, "Base seed");
  ben->add_option("--param", o.params, "Generator parameter key=value (repeatable)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Error;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (dec->parsed()) return cmd_decide(o, out);
    if (sol->parsed()) return cmd_solve(o, out);
    if (orc->parsed()) return cmd_oracle(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (ben->parsed()) return cmd_bench(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Error;
  }
  return Error;
}

}  // namespace doap::cli
