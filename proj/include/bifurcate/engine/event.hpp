#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace bifurcate::engine {

enum class EventKind : std::uint8_t { Pair, Triple, NonPair };

/// A comparison value together with the objects that generated it.
struct CriticalEvent {
  double value = 0.0;
  EventKind kind = EventKind::NonPair;
  std::array<std::uint32_t, 3> ids{0, 0, 0};

  static CriticalEvent pair(double value, std::size_t i, std::size_t j) {
    return {value, EventKind::Pair, {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 0}};
  }
  static CriticalEvent triple(double value, std::size_t i, std::size_t j, std::size_t k) {
    return {value, EventKind::Triple,
            {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)}};
  }
  static CriticalEvent non_pair(double value) { return {value, EventKind::NonPair, {0, 0, 0}}; }

  std::string describe() const;
};

enum class Strictness : std::uint8_t {
  AtMost,  // value <= r
  Below,   // value < r
};

/// Question a simulation asks about its hidden parameter r.
struct Comparison {
  CriticalEvent event;
  Strictness strictness = Strictness::AtMost;
};

bool holds_at(const Comparison& cmp, double r);

/// Smallest double t with: comparison holds at r  <=>  r >= t.
double threshold(const Comparison& cmp);

}  // namespace bifurcate::engine
