#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricap/domains.hpp"
#include "toricap/geometry.hpp"
#include "toricap/rational.hpp"

namespace toricap {

enum class OuterWitness { Polydisk, Ball };

// The common value of every 2-normalized capacity on a convex 4-d toric
// domain: min(2a, w), where a is the smaller axis intercept and w the largest
// value of x + y on the positive boundary.  The result carries inclusion
// witnesses pinning the value from both sides.
struct C2Result {
    Rational value;  // min(2a, w)
    Rational a;      // smaller axis intercept
    Rational w;      // max of x + y over the positive boundary
    // Lower bound: E(a, w) has second normalized value equal to `value`; it
    // embeds through the quadrilateral below.
    EllipsoidSpec inner;
    // Convex hull of (0,0), the two axis intercepts, and a boundary vertex
    // attaining w; verified to be contained in the region.
    Polygon2D inner_quadrilateral;
    // Upper bound: the region is contained in the binding outer model —
    // P(a, b) when 2a <= w, otherwise B(w).
    OuterWitness outer_kind;
    std::vector<Rational> outer_axes;  // {a, b} for the polydisk, {w} for the ball
};

// Exact second normalized value of a convex 4-d toric domain.  Regions that
// are merely monotone are rejected: the min(2a, w) formula fails on some
// non-convex monotone domains, so the convex flag is a hard precondition.
C2Result c2_convex_4d(const ToricRegion2D& region);

// Second normalized value of a polydisk: 2 * min(axes), any dimension.
// With two factors the value is certified by explicit inner/outer regions
// (see c2_convex_4d); with three or more factors it rests on the general
// polydisk theorem, not on a constructed embedding.
Rational c2_polydisk(const std::vector<Rational>& axes);

// Everything the V_eps family reveals about second normalized capacities.
// c2_min and c2_max agree exactly when eps >= 2/9; below the threshold the
// report carries an exact rational certificate r with 3*eps < r and
// r^2 < 2*eps, so every capacity value min(4*eps, r) <= c <= (unknown)
// strictly exceeds c2_min on the max side.
struct VepsReport {
    Rational eps;
    Rational c2_min;
    Rational c2_max_lower;
    std::optional<Rational> c2_max_upper;  // empty below the threshold: no upper bound is known
    std::optional<Rational> certificate;   // the rational r, only below the threshold
    bool equal = false;                    // c2_min == c2_max, decided exactly
    std::string regime;                    // "[1/3,1/2)", "[2/9,1/3)" or "(0,2/9)"
};

VepsReport veps_analysis(const Rational& eps);  // requires 0 < eps < 1/2

// Certificate that k-normalized capacities cannot all agree on polydisks:
// proven whenever k^n > k * n! (k >= 2), by the two-case comparison of N_k
// against the volume bound recorded in `chain`.
struct GapCertificate {
    long long k = 0;
    long long n = 0;
    bool theorem_applies = false;      // k >= max(n, 3): the stated range of the gap theorem
    bool inequality_violated = false;  // k^n > k * n!, exact integer comparison
    bool gap_proven = false;           // inequality_violated and k >= 2
    std::vector<std::string> chain;    // textual record of the case analysis
};

GapCertificate polydisk_gap(long long k, long long n);  // requires k >= 1, n >= 2

// Exact threshold n!/(2n-1)^n below which the V_eps gap persists in dimension
// 2n; n = 2 recovers 2/9.
Rational highdim_veps_threshold(int n);  // requires n >= 2
bool gap_below(const Rational& eps, int n);

}  // namespace toricap
