#include "mmds/selection.hpp"

#include "mmds/solve_result.hpp"

#include <set>
#include <sstream>

namespace mmds {

ViewSelection ViewSelection::identity(const DemandMap& demand, SelectionMode mode) {
  ViewSelection theta(mode);
  for (auto v : demand.desired_views()) theta.assign_direct(v);
  return theta;
}

std::optional<SourcePair> ViewSelection::find(ViewId v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) return std::nullopt;
  return it->second;
}

void ViewSelection::merge(const ViewSelection& other) {
  for (auto& [v, p] : other.assignment_) assignment_[v] = p;
}

std::vector<ViewId> ViewSelection::transmitted() const {
  std::set<ViewId> out;
  for (auto& [v, p] : assignment_) {
    out.insert(p.left);
    out.insert(p.right);
  }
  return {out.begin(), out.end()};
}

std::string to_string(const ViewSelection& theta) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto& [v, p] : theta.assignments()) {
    if (!first) os << ", ";
    first = false;
    os << v << "->(" << p.left << ',' << p.right << ')';
  }
  os << '}';
  return os.str();
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kMissing: return "missing";
    case ViolationKind::kNotDesired: return "not-desired";
    case ViolationKind::kOutOfRange: return "out-of-range";
    case ViolationKind::kNotEnclosing: return "not-enclosing";
    case ViolationKind::kIndirectSingle: return "indirect-single";
    case ViolationKind::kQualityExceeded: return "quality-exceeded";
    case ViolationKind::kSourceSynthesized: return "source-synthesized";
    case ViolationKind::kCrossing: return "crossing";
  }
  return "unknown";
}

std::vector<Violation> validate_selection(const ViewSelection& theta, const DemandMap& demand, QualityConstraint d) {
  std::vector<Violation> out;
  auto add = [&](ViolationKind k, ViewId v, std::string detail) { out.push_back({k, v, std::move(detail)}); };
  auto pair_str = [](SourcePair p) {
    std::ostringstream os;
    os << '(' << p.left << ',' << p.right << ')';
    return os.str();
  };

  for (auto v : demand.desired_views())
    if (!theta.find(v)) add(ViolationKind::kMissing, v, "no assignment");

  const int K = demand.universe_size();
  for (auto& [v, p] : theta.assignments()) {
    if (!demand.is_desired(v)) add(ViolationKind::kNotDesired, v, "view is not requested by any terminal");
    if (p.left.index() < 1 || p.right.index() > K || p.right.index() < 1 || p.left.index() > K)
      add(ViolationKind::kOutOfRange, v, pair_str(p) + " outside 1.." + std::to_string(K));
    if (!(p.left <= v && v <= p.right)) add(ViolationKind::kNotEnclosing, v, pair_str(p) + " does not enclose it");
    if (p.direct() && p.left != v) add(ViolationKind::kIndirectSingle, v, pair_str(p) + " sends a different view");
    if (p.width() > d.value())
      add(ViolationKind::kQualityExceeded, v, pair_str(p) + " wider than D=" + std::to_string(d.value()));
    if (!p.direct()) {
      for (auto src : {p.left, p.right}) {
        auto s = theta.find(src);
        if (s && !s->direct())
          add(ViolationKind::kSourceSynthesized, v, "source " + std::to_string(src.index()) + " is itself synthesized");
      }
    }
  }

  if (!theta.crossing_allowed()) {
    auto sent = theta.transmitted();
    for (auto& [v, p] : theta.assignments()) {
      if (p.direct()) continue;
      for (auto w : sent)
        if (p.left < w && w < p.right)
          add(ViolationKind::kCrossing, v,
              "transmitted view " + std::to_string(w.index()) + " inside " + pair_str(p));
    }
  }
  return out;
}

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << "view " << violations[i].view << ": " << to_string(violations[i].kind) << " (" << violations[i].detail
       << ')';
  }
  return os.str();
}

double two_view_fraction(const DemandMap& demand, const ViewSelection& theta) {
  if (demand.terminal_count() == 0) return 0.0;
  std::size_t two = 0;
  for (auto& [t, v] : demand.demand()) {
    auto p = theta.find(v);
    if (p && !p->direct()) ++two;
  }
  return static_cast<double>(two) / static_cast<double>(demand.terminal_count());
}

}  // namespace mmds
