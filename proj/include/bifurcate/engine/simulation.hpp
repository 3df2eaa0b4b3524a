#pragma once

#include <cstdint>
#include <memory>
#include <variant>

#include "bifurcate/engine/event.hpp"

namespace bifurcate::engine {

struct NeedCompare {
  Comparison comparison;
};

struct Done {
  bool accept = false;
};

using Step = std::variant<NeedCompare, Done>;

/// A decision procedure that reaches its parameter only through comparisons.
/// After step() yields NeedCompare, answer() must be called before the next
/// step(). Once Done is returned, further steps keep returning it.
class Simulation {
 public:
  virtual ~Simulation() = default;
  virtual Step step() = 0;
  virtual void answer(bool holds) = 0;
  virtual std::unique_ptr<Simulation> clone() const = 0;
};

template <class Derived>
class CopyableSimulation : public Simulation {
 public:
  std::unique_ptr<Simulation> clone() const override {
    return std::make_unique<Derived>(static_cast<const Derived&>(*this));
  }
};

struct ConcreteRun {
  bool accept = false;
  std::uint64_t comparisons = 0;
};

/// Drives a simulation to completion with a known parameter value.
ConcreteRun run_concrete(Simulation& sim, double r);

}  // namespace bifurcate::engine
