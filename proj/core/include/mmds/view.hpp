#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>

namespace mmds {

/// One camera view of a multi-view video. Views are the consecutive integers 1..K.
class ViewId {
 public:
  constexpr ViewId() = default;
  constexpr explicit ViewId(int index) : index_(index) {}

  constexpr int index() const { return index_; }

  friend constexpr auto operator<=>(ViewId, ViewId) = default;
  friend constexpr ViewId operator+(ViewId v, int offset) { return ViewId(v.index_ + offset); }
  friend constexpr ViewId operator-(ViewId v, int offset) { return ViewId(v.index_ - offset); }
  friend constexpr int operator-(ViewId a, ViewId b) { return a.index_ - b.index_; }

  friend std::ostream& operator<<(std::ostream& os, ViewId v) { return os << v.index_; }

 private:
  int index_ = 0;
};

/// DIBR quality constraint: a synthesized view may use sources at most D views apart.
class QualityConstraint {
 public:
  explicit QualityConstraint(int d);
  int value() const { return d_; }

 private:
  int d_;
};

}  // namespace mmds

template <>
struct std::hash<mmds::ViewId> {
  std::size_t operator()(mmds::ViewId v) const noexcept { return std::hash<int>{}(v.index()); }
};
