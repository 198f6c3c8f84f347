#pragma once

#include <span>
#include <string>
#include <vector>

#include "mmds/graph.hpp"

namespace mmds {

// Rooted shortest-path multicast tree T=(V,A,s) restricted to the union of the
// root-to-terminal paths.
//
// Tree nodes are re-indexed 0..size()-1 with the root at 0 and every parent
// indexed before its children. An arc is identified by its child node, so
// arcs are 1..size()-1 and num_arcs() == size()-1. Terminals may be interior
// nodes; non-terminal leaves never survive construction.
class ShortestPathTree {
 public:
  // Builds from an explicit parent relation over graph nodes. `parent` maps
  // every non-root member to its parent; members not on a root-to-terminal
  // path are pruned.
  static ShortestPathTree from_parents(const NetworkGraph& graph, const std::vector<int>& parent,
                                       std::span<const NodeId> terminals);

  std::size_t size() const { return parent_.size(); }
  std::size_t num_arcs() const { return parent_.empty() ? 0 : parent_.size() - 1; }

  int parent(int i) const { return parent_[i]; }
  const std::vector<int>& children(int i) const { return children_[i]; }
  int depth(int i) const { return depth_[i]; }
  // Children before parents; the root is last.
  const std::vector<int>& postorder() const { return postorder_; }

  NodeId graph_node(int i) const { return graph_node_[i]; }
  const std::string& label(int i) const { return labels_[i]; }
  // Tree index of a graph node, or -1.
  int index_of(NodeId n) const;

  NodeId root_node() const { return graph_node_[0]; }
  // Tree indices of the terminals, ordered by graph node id.
  const std::vector<int>& terminals() const { return terminals_; }
  bool is_terminal(int i) const { return terminal_flag_[i]; }

  // Arcs (child indices) of the root-to-node path, root side first.
  std::vector<int> path_arcs(int i) const;

  // Directed arcs as (parent graph node, child graph node), sorted.
  std::vector<std::pair<NodeId, NodeId>> arc_set() const;

 private:
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
  std::vector<int> postorder_;
  std::vector<NodeId> graph_node_;
  std::vector<std::string> labels_;
  std::vector<int> terminals_;
  std::vector<bool> terminal_flag_;
  std::vector<std::pair<NodeId, int>> index_;  // sorted (graph node, tree index)
};

// Breadth-first shortest-path tree rooted at the graph's server. Among
// equal-distance candidate parents the smallest node id wins. Throws
// ValidationError naming any terminal that is unreachable or invalid.
ShortestPathTree build_spt(const NetworkGraph& graph, std::span<const NodeId> terminals);

}  // namespace mmds
