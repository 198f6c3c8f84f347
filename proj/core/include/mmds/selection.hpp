#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmds/demand.hpp"
#include "mmds/view.hpp"

namespace mmds {

// Source pair for one desired view. left == right means direct delivery.
struct SourcePair {
  ViewId left;
  ViewId right;

  bool direct() const { return left == right; }
  int width() const { return right - left; }
  friend bool operator==(const SourcePair&, const SourcePair&) = default;
};

enum class SelectionMode {
  kNonCrossing,      // MMDS: synthesis intervals may not contain transmitted views
  kCrossingAllowed,  // E-MMDS
};

// View-selection function theta over the desired views.
class ViewSelection {
 public:
  explicit ViewSelection(SelectionMode mode = SelectionMode::kNonCrossing) : mode_(mode) {}

  // theta(v) = (v, v) for every desired view.
  static ViewSelection identity(const DemandMap& demand, SelectionMode mode = SelectionMode::kNonCrossing);

  SelectionMode mode() const { return mode_; }
  bool crossing_allowed() const { return mode_ == SelectionMode::kCrossingAllowed; }

  void assign(ViewId v, SourcePair pair) { assignment_[v] = pair; }
  void assign_direct(ViewId v) { assignment_[v] = SourcePair{v, v}; }
  void erase(ViewId v) { assignment_.erase(v); }
  std::optional<SourcePair> find(ViewId v) const;
  // Throws std::out_of_range when v is unassigned.
  const SourcePair& at(ViewId v) const { return assignment_.at(v); }
  const std::map<ViewId, SourcePair>& assignments() const { return assignment_; }
  std::size_t size() const { return assignment_.size(); }

  // Adds every assignment of `other`, overwriting on conflict.
  void merge(const ViewSelection& other);

  // Views sent from the server: the union of all source pairs, ascending.
  std::vector<ViewId> transmitted() const;

  friend bool operator==(const ViewSelection&, const ViewSelection&) = default;

 private:
  SelectionMode mode_;
  std::map<ViewId, SourcePair> assignment_;
};

std::string to_string(const ViewSelection& theta);

enum class ViolationKind {
  kMissing,             // desired view without an assignment
  kNotDesired,          // assignment for a view nobody requested
  kOutOfRange,          // source outside 1..K
  kNotEnclosing,        // left <= v <= right fails
  kIndirectSingle,      // left == right but not v
  kQualityExceeded,     // right - left > D
  kSourceSynthesized,   // a desired source is itself synthesized
  kCrossing,            // a transmitted view lies strictly inside a synthesis interval
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  ViewId view;
  std::string detail;
};

// All violated validity conditions; empty iff theta is valid in its mode.
std::vector<Violation> validate_selection(const ViewSelection& theta, const DemandMap& demand, QualityConstraint d);

std::string describe(const std::vector<Violation>& violations);

}  // namespace mmds
