#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mmds/demand.hpp"
#include "mmds/graph.hpp"

namespace mmds {

enum class DistributionKind { kUniform, kGaussian, kZipf };

// How Zipf preference ranks map onto view indices.
enum class ZipfMapping {
  kCenterOut,  // rank 1 -> ceil(K/2), then ceil(K/2)+1, ceil(K/2)-1, ...
  kIdentity,   // rank r -> view r
};

struct DemandDistribution {
  DistributionKind kind = DistributionKind::kUniform;
  int views = 12;
  double variance = 4.0;  // gaussian; the mean is 0.5 K
  double exponent = 2.0;  // zipf
  ZipfMapping mapping = ZipfMapping::kCenterOut;

  // "uniform", "gaussian:VAR", "zipf:S"
  static DemandDistribution parse(const std::string& text, int views);
  std::string name() const;
};

// Zipf pmf over ranks 1..K: r^-s / sum_n n^-s.
std::vector<double> zipf_pmf(int views, double exponent);

// View reached by Zipf rank r (1-based).
ViewId zipf_rank_to_view(int rank, int views, ZipfMapping mapping);

// Rounds to the nearest integer and clamps into 1..K.
ViewId gaussian_to_view(double raw, int views);

// Probability of each view 1..K (index 0 unused) after discretization.
std::vector<double> view_probabilities(const DemandDistribution& dist);

// Independent draw per terminal; deterministic per seed.
DemandMap sample_demand(const DemandDistribution& dist, std::span<const NodeId> terminals, std::uint64_t seed);

// `count` distinct nodes drawn uniformly from the non-server nodes, ascending.
std::vector<NodeId> place_clients(const NetworkGraph& graph, std::size_t count, std::uint64_t seed);

// SplitMix64 step; used to derive independent seeds from a master seed.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace mmds
