#pragma once

#include <cstdint>
#include <string>

#include "mmds/graph.hpp"

namespace mmds {

enum class TopologyModel {
  // Preferential-attachment spanning tree plus degree-proportional extra
  // edges. Short, hub-dominated paths, like an AS-level map.
  kPreferential,
  // Euclidean minimum spanning tree of uniform points in the unit square
  // plus the shortest remaining links. Long chains, like a regional fiber
  // network.
  kGeometric,
};

const char* to_string(TopologyModel model);
TopologyModel parse_topology_model(const std::string& name);

struct TopologySpec {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::uint64_t seed = 0;
  TopologyModel model = TopologyModel::kPreferential;
};

// Connected random graph with exactly spec.nodes nodes and spec.edges edges.
// Deterministic per seed. Throws std::invalid_argument when the counts are
// infeasible.
NetworkGraph generate_topology(const TopologySpec& spec);

}  // namespace mmds
