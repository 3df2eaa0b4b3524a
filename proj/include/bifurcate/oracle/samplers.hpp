#pragma once

#include "bifurcate/geom/planar.hpp"
#include "bifurcate/oracle/oracle.hpp"

namespace bifurcate::oracle {

/// Random disk pairs; the predicate is "the expanded disks intersect".
PredicateSampler disk_predicate_sampler(geom::ExpansionMode mode);

/// Random segment pairs, a share of them parallel (never meeting).
PredicateSampler segment_predicate_sampler(geom::ExpansionMode mode);

/// Random point pairs in R^dim; the predicate is "distance <= r".
PredicateSampler distance_predicate_sampler(std::size_t dim);

/// Random terrain and base pair; the predicate is "tips at height r see
/// each other".
PredicateSampler visibility_predicate_sampler();

/// Wraps a sampler and negates its predicate (for harness self-checks).
PredicateSampler negated(PredicateSampler sampler);

}  // namespace bifurcate::oracle
