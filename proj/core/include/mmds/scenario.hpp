#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mmds/cost.hpp"
#include "mmds/demand_model.hpp"
#include "mmds/generator.hpp"
#include "mmds/solve_result.hpp"
#include "mmds/topology_io.hpp"

namespace mmds {

enum class SolverKind { kOmds, kMmdea, kEmmdea, kHmmdea, kOracle, kOracleExtended };

const char* to_string(SolverKind kind);
SolverKind parse_solver(const std::string& name);

// Everything needed to reproduce one experiment; echoed into every CSV row.
struct ScenarioConfig {
  std::string name = "custom";
  // Exactly one topology source: a file, or a generator spec.
  std::optional<std::string> topology_path;
  TopologyFormat topology_format = TopologyFormat::kGml;
  std::optional<TopologySpec> generated;  // seed field ignored; derived per sample
  bool largest_component = false;

  int views = 12;
  int d = 5;
  std::size_t clients = 60;
  DemandDistribution distribution{};
  std::vector<SolverKind> solvers{SolverKind::kOmds, SolverKind::kMmdea};
  PhiMode phi = PhiMode::kExact;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
  bool timing = false;   // runtime_ms is left empty unless set

  // Fixed instance (used by the fig1 preset); bypasses placement and sampling.
  std::optional<std::string> demand_path;
  std::optional<std::string> server_label;
};

struct MetricsRow {
  std::string sample;  // index, or "mean"
  std::uint64_t sample_seed = 0;
  SolverKind solver = SolverKind::kOmds;
  std::string status = "ok";
  double total_bandwidth = 0;
  double evaluated_bandwidth = 0;
  double two_view_fraction = 0;
  double transmitted_count = 0;
  std::optional<double> runtime_ms;
  std::string transmitted;  // space-separated, per-sample rows only
  std::size_t tree_arcs = 0;
  std::string server;
};

// Runs one solver. Phi mode applies to mmdea and emmdea only.
SolveResult solve(SolverKind kind, const ShortestPathTree& tree, const DemandMap& demand, QualityConstraint d,
                  PhiMode phi = PhiMode::kExact);

// Per-sample seed: splitmix64(master + sample index).
std::uint64_t sample_seed(std::uint64_t master, std::size_t sample);

// Runs every sample (in parallel) and returns rows in sample order followed by
// one mean row per solver. Guard refusals become error rows.
std::vector<MetricsRow> run_scenario(const ScenarioConfig& config);

std::vector<std::string> csv_header();
void write_csv(std::ostream& out, const ScenarioConfig& config, const std::vector<MetricsRow>& rows);

// Named presets: fig1, kentucky, large, scenario2 ... Throws std::invalid_argument.
ScenarioConfig preset(const std::string& name, const std::string& data_dir);

}  // namespace mmds
