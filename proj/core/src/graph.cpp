#include "mmds/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "mmds/errors.hpp"
#include "mmds/view.hpp"

namespace mmds {

QualityConstraint::QualityConstraint(int d) : d_(d) {
  if (d < 2) throw ValidationError("quality constraint D must be >= 2, got " + std::to_string(d));
}

NetworkGraph::NetworkGraph(std::vector<std::string> labels, const std::vector<std::pair<NodeId, NodeId>>& edges,
                           NodeId server)
    : labels_(std::move(labels)), adjacency_(labels_.size()), server_(server) {
  const auto n = labels_.size();
  if (n == 0) throw ValidationError("graph has no nodes");
  if (server >= n) throw ValidationError("server " + std::to_string(server) + " is not a node");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("self-loop at node " + labels_[u]);
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    edge_count_ += adj.size();
  }
  edge_count_ /= 2;
}

std::vector<std::pair<NodeId, NodeId>> NetworkGraph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u)
    for (NodeId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

NodeId NetworkGraph::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("no node labelled '" + label + "'");
  return static_cast<NodeId>(it - labels_.begin());
}

NetworkGraph NetworkGraph::with_server(NodeId server) const {
  if (server >= node_count()) throw ValidationError("server " + std::to_string(server) + " is not a node");
  NetworkGraph g = *this;
  g.server_ = server;
  return g;
}

bool NetworkGraph::is_connected() const {
  auto dist = bfs_distances(*this, server_);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<std::vector<NodeId>> connected_components(std::size_t node_count,
                                                      const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<NodeId> root(node_count);
  std::iota(root.begin(), root.end(), NodeId{0});
  auto find = [&](NodeId x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (auto [u, v] : edges) {
    auto a = find(u), b = find(v);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<NodeId>> by_root(node_count);
  for (NodeId x = 0; x < node_count; ++x) by_root[find(x)].push_back(x);
  std::vector<std::vector<NodeId>> out;
  for (auto& c : by_root)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

std::vector<int> bfs_distances(const NetworkGraph& graph, NodeId source) {
  std::vector<int> dist(graph.node_count(), -1);
  std::queue<NodeId> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto v : graph.neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

}  // namespace mmds
