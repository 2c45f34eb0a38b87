#include "toricap/bounds.hpp"

#include <string>
#include <utility>
#include <vector>

#include "toricap/capacities.hpp"
#include "toricap/errors.hpp"
#include "toricap/packing.hpp"

namespace toricap {

namespace {

// These checks certify theorem-level facts the surrounding code relies on;
// a failure means the library is internally inconsistent, not that the input
// was bad.
void require(bool ok, const std::string& what) {
    if (!ok) throw ComputeError("internal cross-check failed: " + what);
}

BigInt factorial(long long n) {
    BigInt f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt integer_pow(const BigInt& base, long long exp) {
    BigInt p = 1;
    for (long long i = 0; i < exp; ++i) p *= base;
    return p;
}

}  // namespace

C2Result c2_convex_4d(const ToricRegion2D& region) {
    if (!region.flags().convex) {
        throw InputError(
            "c2_convex_4d: the region must be convex; merely monotone (or concave) "
            "regions are rejected because min(2a, w) can fail on them");
    }
    const AxisData ad = axis_data(region);
    const Rational a = min(ad.a, ad.b);
    const Rational value = min(2 * a, ad.w);

    // Boundary vertex attaining w = max(x + y); ties resolved to the first.
    Vec2 peak = region.chain().front();
    for (const Vec2& c : region.chain()) {
        if (c.x + c.y > peak.x + peak.y) peak = c;
    }

    Polygon2D quad(convex_hull({Vec2{0, 0}, Vec2{ad.a, 0}, peak, Vec2{0, ad.b}}));
    require(region_contains(ToricRegion2D(quad), region),
            "c2 inner quadrilateral is not contained in the region");

    EllipsoidSpec inner({a, ad.w});
    require(n_k(inner.axes, 2) == value, "c2 inner ellipsoid does not realize min(2a, w)");
    require(ch_convex(region, 2) == value, "c2 disagrees with the direct capacity computation");

    const bool polydisk_binding = 2 * a <= ad.w;
    const ToricRegion2D outer =
        polydisk_binding ? make_rectangle(ad.a, ad.b) : ball_region(ad.w);
    require(region_contains(region, outer), "region is not contained in the c2 outer witness");

    return {value,
            a,
            ad.w,
            std::move(inner),
            std::move(quad),
            polydisk_binding ? OuterWitness::Polydisk : OuterWitness::Ball,
            polydisk_binding ? std::vector<Rational>{ad.a, ad.b} : std::vector<Rational>{ad.w}};
}

Rational c2_polydisk(const std::vector<Rational>& axes) {
    if (axes.empty()) throw InputError("c2_polydisk: axes must be nonempty");
    Rational m = axes.front();
    for (const Rational& x : axes) {
        if (x.sign() <= 0) throw InputError("c2_polydisk: axes must be positive");
        m = min(m, x);
    }
    return 2 * m;
}

VepsReport veps_analysis(const Rational& eps) {
    const ToricRegion2D region = make_veps(eps);  // validates 0 < eps < 1/2

    VepsReport rep;
    rep.eps = eps;
    rep.c2_min = ch_concave(region, 2);

    if (eps >= Rational(1, 3)) {
        rep.regime = "[1/3,1/2)";
        require(rep.c2_min == 1, "V_eps capacity is not 1 on [1/3,1/2)");
        require(region_contains(make_triangle(Rational(1, 2), 1), region),
                "E(1/2,1) region is not inside V_eps");
        require(region_contains(region, ball_region(1)), "V_eps region is not inside B(1)");
        require(n_k({Rational(1, 2), 1}, 2) == 1 && n_k({1, 1}, 2) == 1,
                "sandwich ellipsoids do not both give 1");
        rep.c2_max_lower = 1;
        rep.c2_max_upper = Rational(1);
        rep.equal = true;
        return rep;
    }

    const Rational v = 3 * eps;
    require(rep.c2_min == v, "V_eps capacity is not 3*eps below 1/3");

    if (eps >= Rational(2, 9)) {
        rep.regime = "[2/9,1/3)";
        require(embed_concave_into_ball(region, v).verdict == Verdict::Feasible,
                "V_eps does not embed into B(3*eps) at or above the threshold");
        require(region_contains(make_triangle(3 * eps / 2, v), region),
                "E(3*eps/2, 3*eps) region is not inside V_eps");
        require(n_k({3 * eps / 2, v}, 2) == v, "inner ellipsoid does not give 3*eps");
        rep.c2_max_lower = v;
        rep.c2_max_upper = v;
        rep.equal = true;
        return rep;
    }

    rep.regime = "(0,2/9)";
    // Exact rational r with 3*eps < r and r^2 < 2*eps.  Such r exists because
    // 9*eps^2 < 2*eps below the threshold; halve the gap to 3*eps until the
    // square drops below 2*eps.
    Rational upper = 1;
    Rational r = (v + upper) / 2;
    while (!(r * r < 2 * eps)) {
        upper = r;
        r = (v + upper) / 2;
    }
    require(r > v, "gap certificate does not exceed 3*eps");
    rep.certificate = r;
    rep.c2_max_lower = min(4 * eps, r);
    rep.c2_max_upper = std::nullopt;
    rep.equal = false;
    require(rep.c2_max_lower > rep.c2_min, "certified max bound does not exceed the min value");
    return rep;
}

GapCertificate polydisk_gap(long long k, long long n) {
    if (k < 1) throw InputError("polydisk_gap: k must be >= 1");
    if (n < 2) throw InputError("polydisk_gap: n must be >= 2");

    GapCertificate cert;
    cert.k = k;
    cert.n = n;

    const BigInt lhs = integer_pow(BigInt(k), n);
    const BigInt rhs = BigInt(k) * factorial(n);
    cert.inequality_violated = lhs > rhs;
    cert.theorem_applies = k >= std::max(n, 3LL);
    cert.gap_proven = cert.inequality_violated && k >= 2;

    const std::string kn = lhs.str(), kf = rhs.str();
    if (cert.inequality_violated) {
        cert.chain.push_back("k^n = " + kn + " > k*n! = " + kf +
                             ": the normalized volume comparison fails");
    } else {
        cert.chain.push_back("k^n = " + kn + " <= k*n! = " + kf +
                             ": the normalized volume comparison holds");
    }
    cert.chain.push_back(cert.theorem_applies
                             ? "k >= max(n,3): within the stated range of the polydisk gap theorem"
                             : "k < max(n,3): outside the stated range; the volume comparison "
                               "alone decides");
    if (cert.gap_proven) {
        cert.chain.push_back(
            "case a2 <= (k-1)*a1: N_k(a1,...,an) <= (k-1)*a1 < k*a1, so a capacity pinned to "
            "N_k stays below k*a1");
        cert.chain.push_back(
            "case a2 > (k-1)*a1: N_k(a1,...,an) = k*a1, and a common value k*a1 forces "
            "k^n <= k*n! through the volume of the inscribed ellipsoid");
        cert.chain.push_back(
            "conclusion: k-normalized capacities cannot all agree on polydisks; gap proven");
    } else if (k < 2) {
        cert.chain.push_back("conclusion: k = 1 proves nothing here; no gap certified");
    } else {
        cert.chain.push_back("conclusion: the volume comparison is satisfied; no gap certified");
    }
    return cert;
}

Rational highdim_veps_threshold(int n) {
    if (n < 2) throw InputError("highdim_veps_threshold: n must be >= 2");
    return Rational(factorial(n), integer_pow(BigInt(2 * n - 1), n));
}

bool gap_below(const Rational& eps, int n) { return eps < highdim_veps_threshold(n); }

}  // namespace toricap
