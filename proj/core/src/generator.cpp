#include "mmds/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace mmds {

namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (NodeId x = 0; x < n; ++x) labels[x] = std::to_string(x);
  return labels;
}

NetworkGraph geometric(const TopologySpec& spec) {
  const auto n = spec.nodes;
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = unit(rng);
    y[i] = unit(rng);
  }
  auto dist2 = [&](std::size_t a, std::size_t b) {
    const double dx = x[a] - x[b], dy = y[a] - y[b];
    return dx * dx + dy * dy;
  };

  // Prim on the complete Euclidean graph.
  std::set<std::pair<NodeId, NodeId>> edges;
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<NodeId> from(n, 0);
  std::vector<bool> done(n, false);
  best[0] = 0;
  for (std::size_t it = 0; it < n; ++it) {
    std::size_t v = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && (v == n || best[i] < best[v])) v = i;
    done[v] = true;
    if (it) edges.emplace(std::min<NodeId>(v, from[v]), std::max<NodeId>(v, from[v]));
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && dist2(v, i) < best[i]) {
        best[i] = dist2(v, i);
        from[i] = static_cast<NodeId>(v);
      }
  }

  // Shortest missing links among each node's k nearest neighbours; k grows
  // until enough candidates exist.
  for (std::size_t k = 8; edges.size() < spec.edges; k *= 2) {
    std::vector<std::tuple<double, NodeId, NodeId>> cand;
    std::vector<NodeId> order(n);
    for (NodeId a = 0; a < n; ++a) {
      std::iota(order.begin(), order.end(), NodeId{0});
      const auto take = std::min(k + 1, n);
      std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                        [&](NodeId p, NodeId q) { return dist2(a, p) < dist2(a, q) || (dist2(a, p) == dist2(a, q) && p < q); });
      for (std::size_t j = 0; j < take; ++j) {
        const NodeId b = order[j];
        if (b == a) continue;
        auto e = std::make_pair(std::min(a, b), std::max(a, b));
        if (!edges.count(e)) cand.emplace_back(dist2(a, b), e.first, e.second);
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (auto& [d, a, b] : cand) {
      if (edges.size() >= spec.edges) break;
      edges.emplace(a, b);
    }
    if (k >= n) break;
  }
  return NetworkGraph(numeric_labels(n), {edges.begin(), edges.end()});
}

}  // namespace

const char* to_string(TopologyModel model) {
  return model == TopologyModel::kGeometric ? "geo" : "pa";
}

TopologyModel parse_topology_model(const std::string& name) {
  if (name == "pa") return TopologyModel::kPreferential;
  if (name == "geo") return TopologyModel::kGeometric;
  throw std::invalid_argument("unknown topology model '" + name + "' (expected pa or geo)");
}

NetworkGraph generate_topology(const TopologySpec& spec) {
  const auto n = spec.nodes;
  if (n < 1) throw std::invalid_argument("topology needs at least one node");
  if (spec.edges + 1 < n) throw std::invalid_argument("a connected graph on N nodes needs at least N-1 edges");
  if (spec.edges > n * (n - 1) / 2) throw std::invalid_argument("more edges than node pairs");
  if (spec.model == TopologyModel::kGeometric) return geometric(spec);

  std::mt19937_64 rng(spec.seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::set<std::pair<NodeId, NodeId>> have;
  // Each node appears once per incident edge plus once for itself, so a
  // uniform pick from `ends` is degree-proportional with smoothing.
  std::vector<NodeId> ends;
  ends.reserve(2 * spec.edges + n);
  auto add = [&](NodeId u, NodeId v) {
    edges.emplace_back(std::min(u, v), std::max(u, v));
    have.insert(edges.back());
    ends.push_back(u);
    ends.push_back(v);
  };

  if (n > 0) ends.push_back(0);
  for (NodeId x = 1; x < n; ++x) {
    std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 1);
    add(x, ends[pick(rng)]);
    ends.push_back(x);
  }

  std::size_t attempts = 0;
  const std::size_t limit = 64 * (spec.edges + 1);
  while (edges.size() < spec.edges && attempts++ < limit) {
    std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 1);
    NodeId u = ends[pick(rng)], v = ends[pick(rng)];
    if (u == v || have.count({std::min(u, v), std::max(u, v)})) continue;
    add(u, v);
  }
  if (edges.size() < spec.edges) {
    // Dense request: fall back to a shuffled scan of the missing pairs.
    std::vector<std::pair<NodeId, NodeId>> missing;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (!have.count({u, v})) missing.emplace_back(u, v);
    std::shuffle(missing.begin(), missing.end(), rng);
    for (std::size_t i = 0; edges.size() < spec.edges; ++i) add(missing[i].first, missing[i].second);
  }

  return NetworkGraph(numeric_labels(n), edges);
}

}  // namespace mmds
