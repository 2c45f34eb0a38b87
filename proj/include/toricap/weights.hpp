#pragma once

#include <string>
#include <vector>

#include "toricap/domains.hpp"
#include "toricap/geometry.hpp"

namespace toricap {

// One peel step: `peeled` is the corner-triangle size removed from `region`
// (shown in canonical corner position); `path` locates the step in the
// recursion tree — "" for the root, then 'L' (component along the x-axis)
// and 'U' (component along the y-axis) per split.
struct ExpansionNode {
    std::string path;
    Rational peeled;
    Polygon2D region;
};

struct WeightSequence {
    std::vector<Rational> weights;      // sorted descending, all positive
    std::vector<ExpansionNode> source;  // peel order
    Rational sum_squares() const;
};

// Recursive corner-triangle expansion of a concave region into ball weights:
// peel the largest triangle T(w) = {x+y <= w} that fits, split the closed
// remainder into its component along each axis, move each component's corner
// to the origin by a unimodular affine map, and recurse.  The multiset of
// peeled sizes satisfies sum w_j^2 = 2*area exactly.  Raises ComputeError
// with the residual area if more than max_steps peels would be needed.
WeightSequence weights_concave(const ToricRegion2D& region, int max_steps = 10000);

// Independent oracle for triangles: the Euclidean-algorithm expansion of
// T(a,b), batching floor(b/a) copies of a per step.  Agrees with
// weights_concave(T(a,b)) as a multiset.
WeightSequence weights_ellipsoid(const Rational& a, const Rational& b);

}  // namespace toricap
