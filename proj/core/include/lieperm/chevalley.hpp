#pragma once

#include "lieperm/invariant.hpp"
#include "lieperm/polymap.hpp"

namespace lieperm::exppoly {

struct GenerationLimits {
  /// Cap on the number of dominant weights the reduction may enumerate.
  size_t max_dominant_weights = 200'000;
};

/// Writes a Weyl-invariant exponential sum as a polynomial with rational
/// coefficients in the n fundamental orbit sums (greedy reduction along the
/// dominance order, highest weight first).
///
/// Throws std::invalid_argument if f is not Weyl-invariant (message names a
/// violating orbit) and BudgetError if the dominant slice exceeds the limit.
PolyQ express_in_fundamentals(const WeightInvariant& f, const GenerationLimits& lim = {});

/// The degree-k multiplication map of the given type: component j is
/// orbit_sum(k * omega_j) expressed in the fundamental orbit sums.  All
/// coefficients are integers (computed in checked int64, falling back to
/// arbitrary precision on overflow).  Requires k >= 1.
PolyMap compute_P(const rootsys::LieType& t, int k, const GenerationLimits& lim = {});

}  // namespace lieperm::exppoly
