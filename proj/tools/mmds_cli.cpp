#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mmds/errors.hpp"
#include "mmds/scenario.hpp"

using namespace mmds;

namespace {

constexpr int kExitGuard = 2;

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

// "N,E" or "N,E,MODEL".
TopologySpec parse_gen(const std::string& text) {
  auto parts = split_list(text, ',');
  if (parts.size() != 2 && parts.size() != 3) throw CLI::ValidationError("--gen", "expected N,E or N,E,pa|geo");
  TopologySpec spec;
  spec.nodes = std::stoul(parts[0]);
  spec.edges = std::stoul(parts[1]);
  if (parts.size() == 3) spec.model = parse_topology_model(parts[2]);
  return spec;
}

struct SolveArgs {
  std::string topology;
  std::string format = "gml";
  std::string demand;
  std::string server;
  int views = 12;
  int d = 5;
  std::string solver = "mmdea";
  std::string phi = "exact";
  bool largest_component = false;
};

int run_solve(const SolveArgs& a) {
  auto graph = load_topology(a.topology, parse_topology_format(a.format), {.largest_component = a.largest_component});
  if (!a.server.empty()) graph = graph.with_server(graph.find(a.server));
  auto demand = load_demand(a.demand, graph, a.views);
  auto terms = demand.terminals();
  auto tree = build_spt(graph, terms);
  const QualityConstraint d(a.d);
  const auto kind = parse_solver(a.solver);
  const auto r = solve(kind, tree, demand, d, parse_phi_mode(a.phi));
  const auto check = evaluate_cost(tree, demand, r.selection, d);

  std::cout << "solver        " << to_string(kind) << '\n';
  std::cout << "server        " << graph.label(graph.server()) << '\n';
  std::cout << "tree arcs     " << tree.num_arcs() << '\n';
  std::cout << "total         " << r.total << '\n';
  std::cout << "evaluated     " << check << (check == r.total ? "" : "  (differs from solver value)") << '\n';
  std::cout << "transmitted  ";
  for (auto v : r.transmitted) std::cout << ' ' << v;
  std::cout << '\n';
  for (const auto& [v, p] : r.selection.assignments()) {
    std::cout << "  view " << v << " <- ";
    if (p.direct())
      std::cout << "direct\n";
    else
      std::cout << '(' << p.left << ", " << p.right << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-view multicast delivery selection"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance given a topology and a demand file");
  solve_cmd->add_option("--topology", sa.topology, "Topology file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--format", sa.format, "gml or edges")->check(CLI::IsMember({"gml", "edges"}));
  solve_cmd->add_option("--demand", sa.demand, "Demand file: '<terminal> <view>' per line")
      ->required()
      ->check(CLI::ExistingFile);
  solve_cmd->add_option("--server", sa.server, "Server node label (default: first node)");
  solve_cmd->add_option("--views", sa.views, "Number of views K")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--d", sa.d, "Quality constraint D")->check(CLI::Range(2, 64));
  solve_cmd->add_option("--solver", sa.solver, "omds, mmdea, emmdea, hmmdea, oracle or oracle-ext");
  solve_cmd->add_option("--phi", sa.phi, "literal, exact or per-view");
  solve_cmd->add_flag("--largest-component", sa.largest_component, "Keep only the largest component");

  auto* run_cmd = app.add_subcommand("run", "Run a sampled scenario and write CSV");
  std::string preset_name, data_dir = MMDS_DEFAULT_DATA_DIR, topology, format = "gml", gen, dist = "uniform",
                           solvers, phi = "exact", out, demand_path, server;
  int views = 12, d = 5;
  std::size_t clients = 60, samples = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool timing = false, largest = false;
  run_cmd->add_option("--preset", preset_name, "fig1, kentucky, large, scenario2, scenario4 or scenario5");
  run_cmd->add_option("--data-dir", data_dir, "Directory holding preset data files");
  auto* topo_opt = run_cmd->add_option("--topology", topology, "Topology file");
  auto* fmt_opt = run_cmd->add_option("--format", format, "gml or edges")->check(CLI::IsMember({"gml", "edges"}));
  auto* gen_opt = run_cmd->add_option("--gen", gen, "Generate N,E[,pa|geo] per sample instead of a file");
  topo_opt->excludes(gen_opt);
  auto* views_opt = run_cmd->add_option("--views", views, "Number of views K")->check(CLI::PositiveNumber);
  auto* clients_opt = run_cmd->add_option("--clients", clients, "Clients per sample");
  auto* dist_opt = run_cmd->add_option("--dist", dist, "uniform, gaussian:VAR or zipf:S[:identity]");
  auto* d_opt = run_cmd->add_option("--d", d, "Quality constraint D")->check(CLI::Range(2, 64));
  auto* solver_opt = run_cmd->add_option("--solver", solvers, "Comma-separated solvers");
  auto* phi_opt = run_cmd->add_option("--phi", phi, "literal, exact or per-view");
  auto* samples_opt = run_cmd->add_option("--samples", samples, "Samples")->check(CLI::PositiveNumber);
  auto* seed_opt = run_cmd->add_option("--seed", seed, "Master seed");
  run_cmd->add_option("--out", out, "CSV output path (default: stdout)");
  run_cmd->add_flag("--timing", timing, "Fill the runtime_ms column");
  run_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
  auto* largest_opt = run_cmd->add_flag("--largest-component", largest, "Keep only the largest component");
  auto* demand_opt = run_cmd->add_option("--demand", demand_path, "Fixed demand file (single sample)");
  auto* server_opt = run_cmd->add_option("--server", server, "Fixed server label (default: random per sample)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(sa);

    ScenarioConfig c;
    if (!preset_name.empty()) c = preset(preset_name, data_dir);
    if (topo_opt->count()) {
      c.topology_path = topology;
      c.generated.reset();
    }
    if (fmt_opt->count()) c.topology_format = parse_topology_format(format);
    if (gen_opt->count()) {
      c.generated = parse_gen(gen);
      c.topology_path.reset();
    }
    if (views_opt->count()) c.views = views;
    if (clients_opt->count()) c.clients = clients;
    if (d_opt->count()) c.d = d;
    if (phi_opt->count()) c.phi = parse_phi_mode(phi);
    if (samples_opt->count()) c.samples = samples;
    if (seed_opt->count()) c.seed = seed;
    if (largest_opt->count()) c.largest_component = true;
    if (demand_opt->count()) c.demand_path = demand_path;
    if (server_opt->count()) c.server_label = server;
    if (solver_opt->count()) {
      c.solvers.clear();
      for (const auto& s : split_list(solvers, ',')) c.solvers.push_back(parse_solver(s));
    }
    if (dist_opt->count() || views_opt->count()) {
      auto text = dist_opt->count() ? dist : c.distribution.name();
      c.distribution = DemandDistribution::parse(text, c.views);
    }
    c.threads = threads;
    c.timing = timing;

    const auto rows = run_scenario(c);
    if (out.empty()) {
      write_csv(std::cout, c, rows);
    } else {
      std::ofstream f(out);
      if (!f) throw std::runtime_error("cannot write " + out);
      write_csv(f, c, rows);
    }
    for (const auto& r : rows)
      if (r.status.rfind("error", 0) == 0) std::cerr << "sample " << r.sample << ": " << r.status << '\n';
    return 0;
  } catch (const GuardExceeded& e) {
    std::cerr << "mmds: refused: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "mmds: " << e.what() << '\n';
    return 1;
  }
}
