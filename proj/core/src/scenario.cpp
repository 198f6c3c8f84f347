#include "mmds/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "mmds/csv.hpp"
#include "mmds/emmdea.hpp"
#include "mmds/errors.hpp"
#include "mmds/hmmdea.hpp"
#include "mmds/mmdea.hpp"
#include "mmds/oracle.hpp"
#include "mmds/tree.hpp"

namespace mmds {

const char* to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::kOmds: return "omds";
    case SolverKind::kMmdea: return "mmdea";
    case SolverKind::kEmmdea: return "emmdea";
    case SolverKind::kHmmdea: return "hmmdea";
    case SolverKind::kOracle: return "oracle";
    case SolverKind::kOracleExtended: return "oracle-ext";
  }
  return "unknown";
}

SolverKind parse_solver(const std::string& name) {
  for (auto k : {SolverKind::kOmds, SolverKind::kMmdea, SolverKind::kEmmdea, SolverKind::kHmmdea, SolverKind::kOracle,
                 SolverKind::kOracleExtended})
    if (name == to_string(k)) return k;
  throw std::invalid_argument("unknown solver '" + name + "'");
}

std::uint64_t sample_seed(std::uint64_t master, std::size_t sample) { return splitmix64(master + sample); }

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string join_views(const std::vector<ViewId>& views) {
  std::string out;
  for (auto v : views) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v.index());
  }
  return out;
}

struct Instance {
  NetworkGraph graph;
  ShortestPathTree tree;
  DemandMap demand;
};

class InstanceSource {
 public:
  explicit InstanceSource(const ScenarioConfig& c) : config_(c) {
    if (c.topology_path) {
      TopologyOptions opts;
      opts.largest_component = c.largest_component;
      base_.emplace(load_topology(*c.topology_path, c.topology_format, opts));
      if (c.server_label) base_ = base_->with_server(base_->find(*c.server_label));
      if (c.demand_path) fixed_demand_.emplace(load_demand(*c.demand_path, *base_, c.views));
    } else if (!c.generated) {
      throw std::invalid_argument("scenario needs a topology file or a generator spec");
    } else if (c.demand_path) {
      throw std::invalid_argument("a demand file requires a topology file");
    }
  }

  Instance make(std::uint64_t seed) const {
    auto spec = config_.generated.value_or(TopologySpec{});
    spec.seed = splitmix64(seed + 1);
    NetworkGraph g = base_ ? *base_ : generate_topology(spec);
    if (fixed_demand_) {
      auto terms = fixed_demand_->terminals();
      auto tree = build_spt(g, terms);
      return {g, std::move(tree), *fixed_demand_};
    }
    if (!config_.server_label) {
      std::mt19937_64 rng(splitmix64(seed + 4));
      std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(g.node_count() - 1));
      g = g.with_server(pick(rng));
    }
    auto clients = place_clients(g, config_.clients, splitmix64(seed + 2));
    auto dist = config_.distribution;
    dist.views = config_.views;
    auto demand = sample_demand(dist, clients, splitmix64(seed + 3));
    auto tree = build_spt(g, clients);
    return {g, std::move(tree), std::move(demand)};
  }

  bool fixed() const { return fixed_demand_.has_value(); }

 private:
  const ScenarioConfig& config_;
  std::optional<NetworkGraph> base_;
  std::optional<DemandMap> fixed_demand_;
};

}  // namespace

SolveResult solve(SolverKind kind, const ShortestPathTree& tree, const DemandMap& demand, QualityConstraint d,
                  PhiMode phi) {
  switch (kind) {
    case SolverKind::kOmds: return omds(tree, demand);
    case SolverKind::kMmdea: return solve_general(tree, demand, d, {.phi = phi});
    case SolverKind::kEmmdea: return solve_extended(tree, demand, d, {.phi = phi});
    case SolverKind::kHmmdea: return h_solve(tree, demand, d).result;
    case SolverKind::kOracle: return brute_force_mmds(tree, demand, d);
    case SolverKind::kOracleExtended: return brute_force_emmds(tree, demand, d);
  }
  throw std::invalid_argument("unknown solver");
}

std::vector<MetricsRow> run_scenario(const ScenarioConfig& config) {
  const QualityConstraint d(config.d);
  InstanceSource source(config);
  const std::size_t samples = source.fixed() ? 1 : config.samples;
  std::vector<std::vector<MetricsRow>> per_sample(samples);

  auto work = [&](std::size_t i) {
    const auto seed = sample_seed(config.seed, i);
    std::vector<MetricsRow> rows;
    std::optional<Instance> inst;
    std::string setup_error;
    try {
      inst.emplace(source.make(seed));
    } catch (const std::exception& e) {
      setup_error = e.what();
    }
    for (auto kind : config.solvers) {
      MetricsRow row;
      row.sample = std::to_string(i);
      row.sample_seed = seed;
      row.solver = kind;
      if (!inst) {
        row.status = "error: " + setup_error;
        rows.push_back(row);
        continue;
      }
      row.tree_arcs = inst->tree.num_arcs();
      row.server = inst->graph.label(inst->graph.server());
      try {
        auto start = std::chrono::steady_clock::now();
        auto r = solve(kind, inst->tree, inst->demand, d, config.phi);
        auto stop = std::chrono::steady_clock::now();
        row.total_bandwidth = static_cast<double>(r.total.units());
        row.evaluated_bandwidth = static_cast<double>(r.evaluated.units());
        row.two_view_fraction = two_view_fraction(inst->demand, r.selection);
        row.transmitted_count = static_cast<double>(r.transmitted.size());
        row.transmitted = join_views(r.transmitted);
        if (config.timing) row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      } catch (const GuardExceeded& e) {
        row.status = std::string("guard: ") + e.what();
      } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
      }
      rows.push_back(std::move(row));
    }
    per_sample[i] = std::move(rows);
  };

  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, samples));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < samples;) work(i);
    });
  for (auto& t : pool) t.join();

  std::vector<MetricsRow> out;
  for (auto& rows : per_sample)
    for (auto& r : rows) out.push_back(r);

  for (auto kind : config.solvers) {
    MetricsRow mean;
    mean.sample = "mean";
    mean.solver = kind;
    std::size_t ok = 0, all = 0;
    double rt = 0;
    for (auto& r : out) {
      if (r.solver != kind || r.sample == "mean") continue;
      ++all;
      if (r.status != "ok") continue;
      ++ok;
      mean.total_bandwidth += r.total_bandwidth;
      mean.evaluated_bandwidth += r.evaluated_bandwidth;
      mean.two_view_fraction += r.two_view_fraction;
      mean.transmitted_count += r.transmitted_count;
      mean.tree_arcs += r.tree_arcs;
      if (r.runtime_ms) rt += *r.runtime_ms;
    }
    if (ok) {
      mean.total_bandwidth /= static_cast<double>(ok);
      mean.evaluated_bandwidth /= static_cast<double>(ok);
      mean.two_view_fraction /= static_cast<double>(ok);
      mean.transmitted_count /= static_cast<double>(ok);
      mean.tree_arcs /= ok;
      if (config.timing) mean.runtime_ms = rt / static_cast<double>(ok);
    }
    if (ok != all) mean.status = "partial " + std::to_string(ok) + "/" + std::to_string(all);
    out.push_back(mean);
  }
  return out;
}

std::vector<std::string> csv_header() {
  return {"scenario", "topology",  "views",         "d",           "clients",         "dist",
          "phi",      "samples",   "seed",          "sample",      "sample_seed",     "server",
          "tree_arcs", "solver",   "status",        "total_bandwidth", "evaluated_bandwidth",
          "two_view_fraction", "transmitted_count", "transmitted", "runtime_ms"};
}

void write_csv(std::ostream& out, const ScenarioConfig& config, const std::vector<MetricsRow>& rows) {
  std::string topo;
  if (config.topology_path)
    topo = *config.topology_path;
  else if (config.generated)
    topo = "gen:" + std::to_string(config.generated->nodes) + "," + std::to_string(config.generated->edges) + "," +
           to_string(config.generated->model);
  const bool fixed = config.demand_path.has_value();

  out << csv::join(csv_header()) << '\n';
  for (auto& r : rows) {
    std::vector<std::string> f{config.name,
                               topo,
                               std::to_string(config.views),
                               std::to_string(config.d),
                               fixed ? "file" : std::to_string(config.clients),
                               fixed ? "file" : config.distribution.name(),
                               to_string(config.phi),
                               std::to_string(fixed ? 1 : config.samples),
                               std::to_string(config.seed),
                               r.sample,
                               r.sample == "mean" ? "" : std::to_string(r.sample_seed),
                               r.server,
                               std::to_string(r.tree_arcs),
                               to_string(r.solver),
                               r.status,
                               fmt(r.total_bandwidth),
                               fmt(r.evaluated_bandwidth),
                               fmt(r.two_view_fraction),
                               fmt(r.transmitted_count),
                               r.transmitted,
                               r.runtime_ms ? fmt(*r.runtime_ms) : ""};
    out << csv::join(f) << '\n';
  }
}

ScenarioConfig preset(const std::string& name, const std::string& data_dir) {
  ScenarioConfig c;
  c.name = name;
  const std::string kentucky = data_dir + "/KentuckyDatalink.gml";
  if (name == "fig1") {
    c.topology_path = data_dir + "/fig1.edges";
    c.topology_format = TopologyFormat::kEdgeList;
    c.demand_path = data_dir + "/fig1.demand";
    c.server_label = "s";
    c.views = 8;
    c.d = 4;
    c.samples = 1;
    c.solvers = {SolverKind::kOmds, SolverKind::kMmdea};
  } else if (name == "kentucky" || name == "scenario2" || name == "scenario4" || name == "scenario5") {
    c.topology_path = kentucky;
    c.topology_format = TopologyFormat::kGml;
    c.largest_component = true;
  } else if (name == "large") {
    c.generated = TopologySpec{10000, 20576, 0};
  } else {
    throw std::invalid_argument("unknown preset '" + name + "' (fig1, kentucky, large, scenario2, scenario4, scenario5)");
  }
  return c;
}

}  // namespace mmds
