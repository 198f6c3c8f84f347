#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mmds/demand.hpp"
#include "mmds/graph.hpp"

namespace mmds {

enum class TopologyFormat { kGml, kEdgeList };

TopologyFormat parse_topology_format(const std::string& name);

struct TopologyOptions {
  // Keep the largest connected component of a disconnected input instead of failing.
  bool largest_component = false;
};

// Reads a topology. GML: node [ id .. label .. ] and edge [ source .. target .. ],
// other keys ignored. Edge list: one whitespace-separated pair per line, '#'
// starts a comment. Duplicate edges are collapsed and self-loops dropped, both
// with a warning. Throws ParseError (with line number) on malformed input.
NetworkGraph parse_topology(std::istream& in, TopologyFormat format, const TopologyOptions& options = {},
                            std::vector<std::string>* warnings = nullptr);
NetworkGraph load_topology(const std::string& path, TopologyFormat format, const TopologyOptions& options = {},
                           std::vector<std::string>* warnings = nullptr);

void write_topology(std::ostream& out, const NetworkGraph& graph, TopologyFormat format);

// Demand file: one "terminal-label view" pair per line, '#' comments.
DemandMap parse_demand(std::istream& in, const NetworkGraph& graph, int universe_size);
DemandMap load_demand(const std::string& path, const NetworkGraph& graph, int universe_size);
void write_demand(std::ostream& out, const NetworkGraph& graph, const DemandMap& demand);

}  // namespace mmds
