#pragma once

#include <cstdint>
#include <string>

#include "bifurcate/error.hpp"

namespace bifurcate::oracle {

inline constexpr std::uint64_t kMaxPairs = 1'000'000;
inline constexpr std::size_t kMaxExhaustiveMatching = 12;
inline constexpr std::size_t kMaxFrechetLength = 60;

/// The instance exceeds an oracle size cap.
class OracleRefusal : public InputError {
 public:
  using InputError::InputError;
};

inline void require_cap(std::uint64_t value, std::uint64_t cap, const std::string& what) {
  if (value > cap) {
    throw OracleRefusal("oracle refused: " + what + " = " + std::to_string(value) + " exceeds cap " +
                        std::to_string(cap));
  }
}

/// Smallest index in [0, size) whose value satisfies an increasing predicate,
/// or size if none does.
template <class Pred>
std::size_t first_true(std::size_t size, Pred&& pred) {
  std::size_t lo = 0, hi = size;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) hi = mid; else lo = mid + 1;
  }
  return lo;
}

}  // namespace bifurcate::oracle
