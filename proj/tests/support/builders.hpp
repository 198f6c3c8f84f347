#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mmds/demand.hpp"
#include "mmds/graph.hpp"
#include "mmds/tree.hpp"

namespace mmds::fixtures {

struct Fixture {
  NetworkGraph graph;
  ShortestPathTree tree;
  DemandMap demand;
};

// Tree given as parent[i] (parent[0] ignored, node 0 is the server) and the
// desired view of each terminal node.
inline Fixture make_fixture(const std::vector<int>& parent, const std::map<NodeId, int>& views, int K) {
  std::vector<std::string> labels;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    labels.push_back(std::to_string(i));
    if (i) edges.emplace_back(static_cast<NodeId>(parent[i]), static_cast<NodeId>(i));
  }
  NetworkGraph g(labels, edges);
  std::map<NodeId, ViewId> demand;
  std::vector<NodeId> terms;
  for (auto [t, v] : views) {
    demand[t] = ViewId(v);
    terms.push_back(t);
  }
  auto tree = build_spt(g, terms);
  return {std::move(g), std::move(tree), DemandMap(K, std::move(demand))};
}

// Path s - 1 - 2 - ... - n.
inline std::vector<int> chain(int n) {
  std::vector<int> p(n + 1);
  for (int i = 1; i <= n; ++i) p[i] = i - 1;
  return p;
}

}  // namespace mmds::fixtures
