#pragma once

#include <cstdint>

namespace toricap::props {

// One randomized invariant family.  `checked` counts individual comparisons,
// `failures` the ones that did not hold; a clean run has failures == 0.
struct GroupResult {
    long long checked = 0;
    long long failures = 0;
};

// Weight expansions exhaust the area: sum of squared weights == 2 * area for
// concave regions, == a * b for ellipsoid expansions.
GroupResult property_conservation(std::uint64_t seed);

// Region inclusion forces capacity inequalities, index by index.
GroupResult property_inclusion(std::uint64_t seed);

// Every quantity is 1-homogeneous: scaling the domain scales the values and
// leaves feasibility verdicts unchanged.
GroupResult property_scaling(std::uint64_t seed);

// Independent formulations agree: both capacity engines and the multiple
// formula on ellipsoids, triangle weight expansions against the
// ellipsoid-specific expansion, and the capacity-sequence obstruction against
// the exact packing decider.
GroupResult property_agreement(std::uint64_t seed);

}  // namespace toricap::props
