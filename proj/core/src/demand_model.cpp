#include "mmds/demand_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mmds {

namespace {

double parse_number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double x;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !std::isfinite(x)) throw std::invalid_argument("invalid " + what + " '" + s + "'");
  return x;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

DemandDistribution DemandDistribution::parse(const std::string& text, int views) {
  if (views < 1) throw std::invalid_argument("view count must be positive");
  DemandDistribution d;
  d.views = views;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.empty()) throw std::invalid_argument("empty distribution");
  if (parts[0] == "uniform" && parts.size() == 1) {
    d.kind = DistributionKind::kUniform;
  } else if (parts[0] == "gaussian" && parts.size() == 2) {
    d.kind = DistributionKind::kGaussian;
    d.variance = parse_number(parts[1], "variance");
    if (d.variance <= 0) throw std::invalid_argument("gaussian variance must be positive");
  } else if (parts[0] == "zipf" && (parts.size() == 2 || parts.size() == 3)) {
    d.kind = DistributionKind::kZipf;
    d.exponent = parse_number(parts[1], "exponent");
    if (d.exponent < 0) throw std::invalid_argument("zipf exponent must be non-negative");
    if (parts.size() == 3) {
      if (parts[2] == "identity")
        d.mapping = ZipfMapping::kIdentity;
      else if (parts[2] == "center")
        d.mapping = ZipfMapping::kCenterOut;
      else
        throw std::invalid_argument("unknown zipf mapping '" + parts[2] + "'");
    }
  } else {
    throw std::invalid_argument("unknown distribution '" + text + "' (expected uniform, gaussian:VAR or zipf:S)");
  }
  return d;
}

std::string DemandDistribution::name() const {
  std::ostringstream os;
  switch (kind) {
    case DistributionKind::kUniform: os << "uniform"; break;
    case DistributionKind::kGaussian: os << "gaussian:" << variance; break;
    case DistributionKind::kZipf:
      os << "zipf:" << exponent;
      if (mapping == ZipfMapping::kIdentity) os << ":identity";
      break;
  }
  return os.str();
}

std::vector<double> zipf_pmf(int views, double exponent) {
  std::vector<double> p(views);
  double norm = 0;
  for (int n = 1; n <= views; ++n) norm += std::pow(n, -exponent);
  for (int l = 1; l <= views; ++l) p[l - 1] = std::pow(l, -exponent) / norm;
  return p;
}

ViewId zipf_rank_to_view(int rank, int views, ZipfMapping mapping) {
  if (rank < 1 || rank > views) throw std::out_of_range("zipf rank outside 1..K");
  if (mapping == ZipfMapping::kIdentity) return ViewId(rank);
  const int center = (views + 1) / 2;
  const int step = rank / 2;
  return ViewId(rank % 2 == 0 ? center + step : center - step);
}

ViewId gaussian_to_view(double raw, int views) {
  auto v = static_cast<long long>(std::llround(raw));
  return ViewId(static_cast<int>(std::clamp<long long>(v, 1, views)));
}

std::vector<double> view_probabilities(const DemandDistribution& dist) {
  const int K = dist.views;
  std::vector<double> p(static_cast<std::size_t>(K) + 1, 0.0);
  switch (dist.kind) {
    case DistributionKind::kUniform:
      for (int v = 1; v <= K; ++v) p[v] = 1.0 / K;
      break;
    case DistributionKind::kGaussian: {
      const double mean = 0.5 * K, sd = std::sqrt(dist.variance);
      for (int v = 1; v <= K; ++v) {
        double hi = v == K ? 1.0 : normal_cdf((v + 0.5 - mean) / sd);
        double lo = v == 1 ? 0.0 : normal_cdf((v - 0.5 - mean) / sd);
        p[v] = hi - lo;
      }
      break;
    }
    case DistributionKind::kZipf: {
      auto pmf = zipf_pmf(K, dist.exponent);
      for (int r = 1; r <= K; ++r) p[zipf_rank_to_view(r, K, dist.mapping).index()] += pmf[r - 1];
      break;
    }
  }
  return p;
}

DemandMap sample_demand(const DemandDistribution& dist, std::span<const NodeId> terminals, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<NodeId, ViewId> demand;
  const int K = dist.views;
  std::uniform_int_distribution<int> uniform(1, K);
  std::normal_distribution<double> normal(0.5 * K, std::sqrt(dist.variance));
  auto pmf = dist.kind == DistributionKind::kZipf ? zipf_pmf(K, dist.exponent) : std::vector<double>{};
  std::discrete_distribution<int> zipf(pmf.begin(), pmf.end());

  std::vector<NodeId> sorted(terminals.begin(), terminals.end());
  std::sort(sorted.begin(), sorted.end());
  for (auto t : sorted) {
    ViewId v;
    switch (dist.kind) {
      case DistributionKind::kUniform: v = ViewId(uniform(rng)); break;
      case DistributionKind::kGaussian: v = gaussian_to_view(normal(rng), K); break;
      case DistributionKind::kZipf: v = zipf_rank_to_view(zipf(rng) + 1, K, dist.mapping); break;
    }
    demand[t] = v;
  }
  return DemandMap(K, std::move(demand));
}

std::vector<NodeId> place_clients(const NetworkGraph& graph, std::size_t count, std::uint64_t seed) {
  std::vector<NodeId> pool;
  for (NodeId x = 0; x < graph.node_count(); ++x)
    if (x != graph.server()) pool.push_back(x);
  if (count > pool.size())
    throw std::invalid_argument("cannot place " + std::to_string(count) + " clients on " +
                                std::to_string(pool.size()) + " non-server nodes");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace mmds
