#pragma once

#include <vector>

#include "toricap/domains.hpp"
#include "toricap/geometry.hpp"

namespace toricap {

// Nondecreasing capacity sequence c_0 = 0 <= c_1 <= ... <= c_K.
struct CapacitySequence {
    std::vector<Rational> values;  // size K+1
    int horizon() const { return static_cast<int>(values.size()) - 1; }
};

// k-th smallest element, with multiplicity, of {m * a_i : i = 1..n, m >= 1}.
Rational n_k(const std::vector<Rational>& axes, int k);

// Combinatorial capacities of toric domains:
//   convex:  min over v in Z^n_{>=0}, sum v_i = k,     of max_{x in region} <v,x>
//   concave: max over v in Z^n_{>0},  sum v_i = k+n-1, of min_{x in chain}  <v,x>
// Both formulas are validated once per process against ellipsoid, cube and
// staircase anchor values before first use; a mismatch raises ComputeError
// from every call thereafter.
Rational ch_convex(const ToricRegion2D& region, int k);
Rational ch_convex(const std::vector<VecN>& convex_region_vertices, int k);
Rational ch_concave(const ToricRegion2D& region, int k);

Rational volume(const EllipsoidSpec& e);   // (prod a_i) / n!
Rational volume(const PolydiskSpec& p);    // prod a_i
Rational volume(const ToricRegion2D& r);   // polygon area

// ECH capacity sequences up to index K.
CapacitySequence ech_sequence(const Rational& ball, int K);
CapacitySequence ech_sequence(const Rational& a, const Rational& b, int K);  // ellipsoid E(a,b)
CapacitySequence ech_sequence(const std::vector<Rational>& ball_radii, int K);  // disjoint union

// Max-plus convolution: C_k = max_{i+j=k} (A_i + B_j).
CapacitySequence max_plus_convolve(const CapacitySequence& a, const CapacitySequence& b);

}  // namespace toricap
