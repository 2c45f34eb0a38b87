#pragma once

#include <string>
#include <vector>

#include "toricap/geometry.hpp"

namespace toricap {

// Moment image of the ellipsoid E(a_1,...,a_n); finite positive axes only.
struct EllipsoidSpec {
    std::vector<Rational> axes;
    explicit EllipsoidSpec(std::vector<Rational> axes_in);
};

// Moment image of the polydisk P(a_1,...,a_n).
struct PolydiskSpec {
    std::vector<Rational> axes;
    explicit PolydiskSpec(std::vector<Rational> axes_in);
};

struct RegionFlags {
    bool monotone = false;
    bool concave = false;
    bool convex = false;
};

// Moment-image region in the first quadrant: a polygon with vertices
// (0,0), (a,0), ..., (0,b) whose positive boundary is the vertex chain from
// (a,0) to (0,b); every intermediate chain vertex is strictly positive.
class ToricRegion2D {
public:
    explicit ToricRegion2D(Polygon2D region);
    static ToricRegion2D from_chain(std::vector<Vec2> chain);

    const Polygon2D& polygon() const { return region_; }
    // Positive-boundary chain, closed: first vertex (a,0), last vertex (0,b).
    const std::vector<Vec2>& chain() const { return chain_; }
    Rational a() const { return chain_.front().x; }
    Rational b() const { return chain_.back().y; }
    const RegionFlags& flags() const { return flags_; }
    Rational area() const;

private:
    Polygon2D region_;
    std::vector<Vec2> chain_;
    RegionFlags flags_;
};

ToricRegion2D make_veps(const Rational& eps);  // quadrilateral (0,0),(1,0),(eps,eps),(0,1); 0 < eps < 1/2
ToricRegion2D make_triangle(const Rational& a, const Rational& b);   // T(a,b), the moment image of E(a,b)
ToricRegion2D make_rectangle(const Rational& a, const Rational& b);  // moment image of P(a,b)

// monotone: every positive-boundary edge has dx <= 0 and dy >= 0.
// concave: the complement of the region in the quadrant is convex.
// convex: the reflection of the region to all four quadrants is convex,
// tested literally via the convex hull of the reflected vertex set.
RegionFlags classify(const Polygon2D& region);

struct AxisData {
    Rational a, b;  // axis intercepts
    Rational w;     // max of x+y over the positive boundary: X_region fits in B(w), minimally
};
AxisData axis_data(const ToricRegion2D& region);

// min of <v, x> over the closed positive-boundary chain.
Rational boundary_min(const ToricRegion2D& region, const Vec2& v);

// Largest / smallest y among chain points with first coordinate x
// (vertical edges contribute both endpoints).  Requires 0 <= x <= a.
Rational eval_upper(const std::vector<Vec2>& chain, const Rational& x);
Rational eval_lower(const std::vector<Vec2>& chain, const Rational& x);

// Exact inclusion of monotone regions, decided by comparing the boundary
// envelopes at every vertex abscissa of either chain.  Non-monotone operands
// are rejected: their regions are not graphs over the axis.
bool region_contains(const ToricRegion2D& inner, const ToricRegion2D& outer);

bool region_contains_point(const ToricRegion2D& region, const Vec2& p);

// 2-d moment region of an ellipsoid (n must be 2) or a ball, for use as a
// region_contains operand.
ToricRegion2D moment_region(const EllipsoidSpec& e);
ToricRegion2D ball_region(const Rational& r);  // B(r) = E(r,r)

}  // namespace toricap
