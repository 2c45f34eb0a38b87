#pragma once

#include <vector>

#include "toricap/rational.hpp"

namespace toricap {

struct Vec2 {
    Rational x, y;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(const Rational& s, const Vec2& p) { return {s * p.x, s * p.y}; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// n-dimensional point or lattice covector with exact entries.
using VecN = std::vector<Rational>;

Rational dot(const VecN& a, const VecN& b);  // dimension mismatch -> InputError

// Simple polygon in the closed first quadrant.  Construction canonicalizes:
// counterclockwise orientation, collinear chain vertices dropped, vertex list
// rotated to start at the lexicographically smallest vertex.  Degenerate or
// self-intersecting input is rejected, so equality of canonical vertex lists
// is equality of regions.
class Polygon2D {
public:
    explicit Polygon2D(std::vector<Vec2> vertices);
    const std::vector<Vec2>& vertices() const { return vs_; }
    std::size_t size() const { return vs_.size(); }
    friend bool operator==(const Polygon2D&, const Polygon2D&) = default;

private:
    std::vector<Vec2> vs_;
};

Rational polygon_area(const Polygon2D& p);

// x -> A x + t with A an integer matrix of determinant exactly 1.
struct UnimodularAffine2D {
    BigInt a, b, c, d;  // matrix rows (a b; c d)
    Vec2 t;
    UnimodularAffine2D(BigInt a, BigInt b, BigInt c, BigInt d, Vec2 t);
    Vec2 apply(const Vec2& p) const;
};

Polygon2D affine_image(const Polygon2D& p, const UnimodularAffine2D& map);

// max over the vertices of <v, x>; exact because a linear functional on a
// compact convex region peaks at a vertex.
Rational support_max(const std::vector<VecN>& vertices, const VecN& v);
Rational support_max(const Polygon2D& p, const Vec2& v);

// min of <v, x> over the vertices of a polyline (positive-boundary chains).
Rational chain_min(const std::vector<Vec2>& chain, const Vec2& v);

// Counterclockwise convex hull with collinear points dropped.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

// Clip a convex ccw polygon to the half-plane {p : dot(normal, p) >= 0}.
std::vector<Vec2> clip_half_plane(const std::vector<Vec2>& poly, const Vec2& normal);

}  // namespace toricap
