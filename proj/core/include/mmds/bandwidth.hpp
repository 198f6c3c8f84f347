#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace mmds {

// Total bandwidth in (arc, view) units, with an absorbing INFEASIBLE value.
class Bandwidth {
 public:
  constexpr Bandwidth() = default;
  constexpr explicit Bandwidth(std::uint64_t units) : units_(units) {}

  static constexpr Bandwidth infeasible() { return Bandwidth(kInfeasible); }

  constexpr bool feasible() const { return units_ != kInfeasible; }
  constexpr std::uint64_t units() const { return units_; }

  friend constexpr Bandwidth operator+(Bandwidth a, Bandwidth b) {
    if (!a.feasible() || !b.feasible()) return infeasible();
    return Bandwidth(a.units_ + b.units_);
  }
  constexpr Bandwidth& operator+=(Bandwidth b) { return *this = *this + b; }

  friend constexpr auto operator<=>(Bandwidth, Bandwidth) = default;

  friend std::ostream& operator<<(std::ostream& os, Bandwidth b) {
    if (!b.feasible()) return os << "INFEASIBLE";
    return os << b.units_;
  }

 private:
  static constexpr std::uint64_t kInfeasible = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t units_ = 0;
};

}  // namespace mmds
