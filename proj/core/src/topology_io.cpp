#include "mmds/topology_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include "mmds/errors.hpp"

namespace mmds {

TopologyFormat parse_topology_format(const std::string& name) {
  if (name == "gml") return TopologyFormat::kGml;
  if (name == "edges" || name == "edgelist") return TopologyFormat::kEdgeList;
  throw std::invalid_argument("unknown topology format '" + name + "' (expected gml or edges)");
}

namespace {

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  long long x;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  return ec == std::errc() && p == s.data() + s.size();
}

// Numeric labels sort numerically, anything else lexicographically.
bool label_less(const std::string& a, const std::string& b) {
  bool na = is_integer(a), nb = is_integer(b);
  if (na && nb) return std::stoll(a) < std::stoll(b);
  if (na != nb) return na;
  return a < b;
}

struct RawGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::size_t> edge_lines;
};

NetworkGraph finish(RawGraph raw, const TopologyOptions& options, std::vector<std::string>* warnings) {
  auto warn = [&](std::string msg) {
    if (warnings) warnings->push_back(std::move(msg));
  };
  std::set<std::pair<NodeId, NodeId>> unique;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    auto [u, v] = raw.edges[i];
    const auto line = raw.edge_lines[i];
    if (u == v) {
      warn("line " + std::to_string(line) + ": self-loop at " + raw.labels[u] + " dropped");
      continue;
    }
    auto key = std::minmax(u, v);
    if (!unique.insert(key).second) {
      warn("line " + std::to_string(line) + ": duplicate edge " + raw.labels[u] + "-" + raw.labels[v] + " collapsed");
      continue;
    }
    edges.push_back(key);
  }
  if (raw.labels.empty()) throw ParseError("topology has no nodes", 0);

  auto components = connected_components(raw.labels.size(), edges);
  if (components.size() > 1) {
    if (!options.largest_component)
      throw ValidationError("topology is disconnected (" + std::to_string(components.size()) +
                            " components); enable largest-component extraction to continue");
    auto largest = std::max_element(components.begin(), components.end(),
                                    [](auto& a, auto& b) { return a.size() < b.size(); });
    warn("topology is disconnected; keeping the largest component (" + std::to_string(largest->size()) + " of " +
         std::to_string(raw.labels.size()) + " nodes)");
    std::vector<long> remap(raw.labels.size(), -1);
    std::vector<std::string> labels;
    for (auto x : *largest) {
      remap[x] = static_cast<long>(labels.size());
      labels.push_back(raw.labels[x]);
    }
    std::vector<std::pair<NodeId, NodeId>> kept;
    for (auto [u, v] : edges)
      if (remap[u] >= 0 && remap[v] >= 0) kept.emplace_back(static_cast<NodeId>(remap[u]), static_cast<NodeId>(remap[v]));
    return NetworkGraph(std::move(labels), kept);
  }
  return NetworkGraph(std::move(raw.labels), edges);
}

// Minimal GML reader: a tree of key/value pairs where values are numbers,
// quoted strings or bracketed lists.
struct GmlValue {
  std::string scalar;
  std::vector<std::pair<std::string, std::unique_ptr<GmlValue>>> list;
  bool is_list = false;
  std::size_t line = 0;

  const GmlValue* get(const std::string& key) const {
    for (auto& [k, v] : list)
      if (k == key) return v.get();
    return nullptr;
  }
};

class GmlLexer {
 public:
  explicit GmlLexer(std::istream& in) : in_(in) {}

  // Returns false at end of input.
  bool next(std::string& tok, bool& quoted) {
    quoted = false;
    int c;
    while (true) {
      c = in_.get();
      if (c == EOF) return false;
      if (c == '\n') {
        ++line_;
        continue;
      }
      if (std::isspace(c)) continue;
      if (c == '#') {
        while ((c = in_.get()) != EOF && c != '\n') {}
        if (c == '\n') ++line_;
        continue;
      }
      break;
    }
    tok.clear();
    if (c == '[' || c == ']') {
      tok = static_cast<char>(c);
      return true;
    }
    if (c == '"') {
      quoted = true;
      const auto start = line_;
      while ((c = in_.get()) != EOF && c != '"') {
        if (c == '\n') ++line_;
        tok += static_cast<char>(c);
      }
      if (c == EOF) throw ParseError("unterminated string", start);
      return true;
    }
    tok += static_cast<char>(c);
    while ((c = in_.peek()) != EOF && !std::isspace(c) && c != '[' && c != ']' && c != '"') tok += static_cast<char>(in_.get());
    return true;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 1;
};

std::unique_ptr<GmlValue> parse_gml_list(GmlLexer& lex, bool top) {
  auto node = std::make_unique<GmlValue>();
  node->is_list = true;
  node->line = lex.line();
  std::string tok;
  bool quoted;
  while (true) {
    if (!lex.next(tok, quoted)) {
      if (top) return node;
      throw ParseError("unexpected end of input inside a list", lex.line());
    }
    if (!quoted && tok == "]") {
      if (top) throw ParseError("unbalanced ']'", lex.line());
      return node;
    }
    if (quoted || tok == "[") throw ParseError("expected a key, got '" + tok + "'", lex.line());
    if (!std::isalpha(static_cast<unsigned char>(tok[0])) && tok[0] != '_')
      throw ParseError("invalid key '" + tok + "'", lex.line());
    std::string key = tok;
    const auto key_line = lex.line();
    if (!lex.next(tok, quoted)) throw ParseError("key '" + key + "' has no value", key_line);
    std::unique_ptr<GmlValue> value;
    if (!quoted && tok == "[") {
      value = parse_gml_list(lex, false);
    } else if (!quoted && tok == "]") {
      throw ParseError("key '" + key + "' has no value", lex.line());
    } else {
      value = std::make_unique<GmlValue>();
      value->scalar = tok;
    }
    value->line = key_line;
    node->list.emplace_back(std::move(key), std::move(value));
  }
}

NetworkGraph parse_gml(std::istream& in, const TopologyOptions& options, std::vector<std::string>* warnings) {
  GmlLexer lex(in);
  auto root = parse_gml_list(lex, true);
  const GmlValue* graph = root->get("graph");
  if (!graph || !graph->is_list) throw ParseError("no 'graph [ ... ]' block", 0);

  struct RawNode {
    long long id;
    std::string label;
    std::size_t line;
  };
  std::vector<RawNode> nodes;
  std::vector<std::tuple<long long, long long, std::size_t>> edges;
  auto int_of = [](const GmlValue* v, const char* what, std::size_t line) {
    if (!v || v->is_list || !is_integer(v->scalar)) throw ParseError(std::string("missing or non-integer ") + what, line);
    return std::stoll(v->scalar);
  };
  for (auto& [k, v] : graph->list) {
    if (k == "node") {
      if (!v->is_list) throw ParseError("node must be a list", v->line);
      auto id = int_of(v->get("id"), "node id", v->line);
      auto* label = v->get("label");
      nodes.push_back({id, label && !label->is_list ? label->scalar : std::string{}, v->line});
    } else if (k == "edge") {
      if (!v->is_list) throw ParseError("edge must be a list", v->line);
      edges.emplace_back(int_of(v->get("source"), "edge source", v->line),
                         int_of(v->get("target"), "edge target", v->line), v->line);
    }
  }

  std::sort(nodes.begin(), nodes.end(), [](auto& a, auto& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (nodes[i].id == nodes[i - 1].id) throw ParseError("duplicate node id " + std::to_string(nodes[i].id), nodes[i].line);

  // Labels identify nodes in demand files, so they must be unique; otherwise ids are used.
  std::set<std::string> distinct;
  bool usable = true;
  for (auto& n : nodes) usable = usable && !n.label.empty() && distinct.insert(n.label).second;
  if (!usable && warnings && !nodes.empty()) warnings->push_back("node labels missing or not unique; using node ids");

  RawGraph raw;
  std::map<long long, NodeId> index;
  for (auto& n : nodes) {
    index[n.id] = static_cast<NodeId>(raw.labels.size());
    raw.labels.push_back(usable ? n.label : std::to_string(n.id));
  }
  for (auto [s, t, line] : edges) {
    auto a = index.find(s), b = index.find(t);
    if (a == index.end() || b == index.end()) throw ParseError("edge references an unknown node", line);
    raw.edges.emplace_back(a->second, b->second);
    raw.edge_lines.push_back(line);
  }
  return finish(std::move(raw), options, warnings);
}

NetworkGraph parse_edge_list(std::istream& in, const TopologyOptions& options, std::vector<std::string>* warnings) {
  std::vector<std::tuple<std::string, std::string, std::size_t>> pairs;
  std::set<std::string, decltype(&label_less)> labels(&label_less);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ss(line);
    std::string a, b, extra;
    if (!(ss >> a)) continue;
    if (!(ss >> b)) throw ParseError("expected two node labels", no);
    if (ss >> extra) throw ParseError("unexpected token '" + extra + "'", no);
    labels.insert(a);
    labels.insert(b);
    pairs.emplace_back(a, b, no);
  }
  RawGraph raw;
  raw.labels.assign(labels.begin(), labels.end());
  std::map<std::string, NodeId> index;
  for (NodeId i = 0; i < raw.labels.size(); ++i) index[raw.labels[i]] = i;
  for (auto& [a, b, n] : pairs) {
    raw.edges.emplace_back(index[a], index[b]);
    raw.edge_lines.push_back(n);
  }
  return finish(std::move(raw), options, warnings);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

}  // namespace

NetworkGraph parse_topology(std::istream& in, TopologyFormat format, const TopologyOptions& options,
                            std::vector<std::string>* warnings) {
  return format == TopologyFormat::kGml ? parse_gml(in, options, warnings) : parse_edge_list(in, options, warnings);
}

NetworkGraph load_topology(const std::string& path, TopologyFormat format, const TopologyOptions& options,
                           std::vector<std::string>* warnings) {
  auto in = open(path);
  return parse_topology(in, format, options, warnings);
}

void write_topology(std::ostream& out, const NetworkGraph& graph, TopologyFormat format) {
  if (format == TopologyFormat::kEdgeList) {
    for (auto [u, v] : graph.edges()) out << graph.label(u) << ' ' << graph.label(v) << '\n';
    return;
  }
  out << "graph [\n";
  for (NodeId i = 0; i < graph.node_count(); ++i)
    out << "  node [\n    id " << i << "\n    label \"" << graph.label(i) << "\"\n  ]\n";
  for (auto [u, v] : graph.edges()) out << "  edge [\n    source " << u << "\n    target " << v << "\n  ]\n";
  out << "]\n";
}

DemandMap parse_demand(std::istream& in, const NetworkGraph& graph, int universe_size) {
  std::map<NodeId, ViewId> demand;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ss(line);
    std::string terminal, view, extra;
    if (!(ss >> terminal)) continue;
    if (!(ss >> view) || !is_integer(view)) throw ParseError("expected '<terminal> <view>'", no);
    if (ss >> extra) throw ParseError("unexpected token '" + extra + "'", no);
    NodeId node;
    try {
      node = graph.find(terminal);
    } catch (const std::out_of_range&) {
      throw ParseError("unknown terminal '" + terminal + "'", no);
    }
    const int v = std::stoi(view);
    if (v < 1 || v > universe_size)
      throw ParseError("view " + view + " outside 1.." + std::to_string(universe_size), no);
    if (!demand.emplace(node, ViewId(v)).second) throw ParseError("terminal '" + terminal + "' listed twice", no);
  }
  return DemandMap(universe_size, std::move(demand));
}

DemandMap load_demand(const std::string& path, const NetworkGraph& graph, int universe_size) {
  auto in = open(path);
  return parse_demand(in, graph, universe_size);
}

void write_demand(std::ostream& out, const NetworkGraph& graph, const DemandMap& demand) {
  for (auto& [t, v] : demand.demand()) out << graph.label(t) << ' ' << v << '\n';
}

}  // namespace mmds
