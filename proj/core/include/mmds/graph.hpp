#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mmds {

using NodeId = std::uint32_t;

// Undirected, unit-length network topology with a designated video server.
//
// Node identifiers are dense indices 0..n-1. They order nodes for every
// deterministic tie-break; labels carry the identifiers used in input files.
// Construction rejects self-loops and collapses parallel edges. Connectivity
// is enforced by the loaders and generators (see topology_io.hpp), not here,
// so that build_spt can report unreachable terminals.
class NetworkGraph {
 public:
  NetworkGraph(std::vector<std::string> labels, const std::vector<std::pair<NodeId, NodeId>>& edges,
               NodeId server = 0);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  NodeId server() const { return server_; }

  const std::vector<NodeId>& neighbors(NodeId n) const { return adjacency_[n]; }
  const std::string& label(NodeId n) const { return labels_[n]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  // Node whose label equals `label`; throws std::out_of_range if absent.
  NodeId find(const std::string& label) const;

  NetworkGraph with_server(NodeId server) const;
  bool is_connected() const;

  friend bool operator==(const NetworkGraph&, const NetworkGraph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
  NodeId server_ = 0;
};

// Connected components as sorted node lists, ordered by their smallest node.
std::vector<std::vector<NodeId>> connected_components(std::size_t node_count,
                                                      const std::vector<std::pair<NodeId, NodeId>>& edges);

// Breadth-first hop distances from `source`; unreachable nodes get -1.
std::vector<int> bfs_distances(const NetworkGraph& graph, NodeId source);

}  // namespace mmds
