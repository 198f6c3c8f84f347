#include "mmds/tree.hpp"

#include <algorithm>

#include "mmds/errors.hpp"

namespace mmds {

ShortestPathTree ShortestPathTree::from_parents(const NetworkGraph& graph, const std::vector<int>& parent,
                                                std::span<const NodeId> terminals) {
  const auto n = graph.node_count();
  if (parent.size() != n) throw ValidationError("parent vector size does not match the graph");
  const NodeId root = graph.server();

  std::vector<char> keep(n, 0), is_term(n, 0);
  keep[root] = 1;
  for (NodeId t : terminals) {
    if (t >= n) throw ValidationError("terminal " + std::to_string(t) + " is not a node");
    is_term[t] = 1;
    std::size_t steps = 0;
    for (NodeId x = t; !keep[x]; x = static_cast<NodeId>(parent[x])) {
      if (parent[x] < 0 || static_cast<std::size_t>(parent[x]) >= n || ++steps > n)
        throw ValidationError("terminal " + graph.label(t) + " is unreachable from the server");
      keep[x] = 1;
    }
  }

  // Depth by walking to the root; breadth-first order puts parents first.
  std::vector<int> gdepth(n, -1);
  gdepth[root] = 0;
  std::vector<NodeId> members;
  for (NodeId x = 0; x < n; ++x)
    if (keep[x]) members.push_back(x);
  auto depth_of = [&](NodeId x) {
    std::vector<NodeId> stack;
    while (gdepth[x] < 0) {
      stack.push_back(x);
      x = static_cast<NodeId>(parent[x]);
    }
    int d = gdepth[x];
    while (!stack.empty()) {
      gdepth[stack.back()] = ++d;
      stack.pop_back();
    }
  };
  for (auto x : members) depth_of(x);
  std::stable_sort(members.begin(), members.end(), [&](NodeId a, NodeId b) { return gdepth[a] < gdepth[b]; });

  ShortestPathTree t;
  std::vector<int> tidx(n, -1);
  for (std::size_t i = 0; i < members.size(); ++i) tidx[members[i]] = static_cast<int>(i);
  t.parent_.resize(members.size());
  t.children_.resize(members.size());
  t.depth_.resize(members.size());
  t.terminal_flag_.assign(members.size(), false);
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto g = members[i];
    t.graph_node_.push_back(g);
    t.labels_.push_back(graph.label(g));
    t.depth_[i] = gdepth[g];
    t.parent_[i] = i == 0 ? -1 : tidx[parent[g]];
    if (i) t.children_[t.parent_[i]].push_back(static_cast<int>(i));
    t.index_.emplace_back(g, static_cast<int>(i));
    if (is_term[g]) t.terminal_flag_[i] = true;
  }
  std::sort(t.index_.begin(), t.index_.end());
  for (NodeId g = 0; g < n; ++g)
    if (is_term[g]) t.terminals_.push_back(tidx[g]);
  for (auto i = static_cast<int>(members.size()) - 1; i >= 0; --i) t.postorder_.push_back(i);
  return t;
}

int ShortestPathTree::index_of(NodeId n) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), std::pair<NodeId, int>{n, -1});
  if (it == index_.end() || it->first != n) return -1;
  return it->second;
}

std::vector<int> ShortestPathTree::path_arcs(int i) const {
  std::vector<int> arcs;
  for (; i > 0; i = parent_[i]) arcs.push_back(i);
  std::reverse(arcs.begin(), arcs.end());
  return arcs;
}

std::vector<std::pair<NodeId, NodeId>> ShortestPathTree::arc_set() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (std::size_t i = 1; i < parent_.size(); ++i) out.emplace_back(graph_node_[parent_[i]], graph_node_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

ShortestPathTree build_spt(const NetworkGraph& graph, std::span<const NodeId> terminals) {
  auto dist = bfs_distances(graph, graph.server());
  std::vector<int> parent(graph.node_count(), -1);
  for (NodeId x = 0; x < graph.node_count(); ++x) {
    if (x == graph.server() || dist[x] < 0) continue;
    for (auto y : graph.neighbors(x))  // sorted: first hit is the smallest id
      if (dist[y] == dist[x] - 1) {
        parent[x] = static_cast<int>(y);
        break;
      }
  }
  for (auto t : terminals) {
    if (t >= graph.node_count()) throw ValidationError("terminal " + std::to_string(t) + " is not a node");
    if (dist[t] < 0) throw ValidationError("terminal " + graph.label(t) + " is unreachable from the server");
  }
  return ShortestPathTree::from_parents(graph, parent, terminals);
}

}  // namespace mmds
