#include "toricap/domains.hpp"

#include <algorithm>
#include <utility>

#include "toricap/errors.hpp"

namespace toricap {

namespace {

void check_axes(const std::vector<Rational>& axes, const char* what) {
    if (axes.empty()) throw InputError(std::string(what) + ": axes must be nonempty");
    for (const Rational& a : axes) {
        if (a.sign() <= 0) throw InputError(std::string(what) + ": axes must be positive");
    }
}

// The positive-boundary chain of a moment-image polygon.  Canonical vertex
// order starts at the lexicographic minimum, which must be the origin; the
// counterclockwise successor is the x-intercept and the predecessor the
// y-intercept.
std::vector<Vec2> extract_chain(const Polygon2D& region) {
    const std::vector<Vec2>& vs = region.vertices();
    const Vec2 origin{0, 0};
    if (!(vs.front() == origin)) {
        throw InputError("moment region must contain the origin as a vertex");
    }
    if (!vs[1].y.is_zero() || vs[1].x.sign() <= 0) {
        throw InputError("moment region must have an edge along the positive x-axis");
    }
    if (!vs.back().x.is_zero() || vs.back().y.sign() <= 0) {
        throw InputError("moment region must have an edge along the positive y-axis");
    }
    std::vector<Vec2> chain(vs.begin() + 1, vs.end());
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
        if (chain[i].x.sign() <= 0 || chain[i].y.sign() <= 0) {
            throw InputError("positive boundary must stay in the open quadrant between the intercepts");
        }
    }
    return chain;
}

bool chain_is_monotone(const std::vector<Vec2>& chain) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const Vec2 e = chain[i + 1] - chain[i];
        if (e.x.sign() > 0 || e.y.sign() < 0) return false;
    }
    return true;
}

// Complement-of-the-region convexity: along the chain all turns are clockwise.
bool chain_is_concave(const std::vector<Vec2>& chain) {
    if (!chain_is_monotone(chain)) return false;
    for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
        const Vec2 e1 = chain[i + 1] - chain[i];
        const Vec2 e2 = chain[i + 2] - chain[i + 1];
        if (cross(e1, e2).sign() > 0) return false;
    }
    return true;
}

// Upper/lower envelope and inclusion, on raw monotone chains.  Inclusion of
// monotone regions {0 <= x <= a, 0 <= y <= EvalUpper(x)} is equivalent to
// comparing a-intercepts plus both envelope one-sided limits at every vertex
// abscissa: the envelopes are affine between those events, so endpoint-limit
// comparisons control the whole interval.  The left limit at an event is
// eval_upper, the right limit eval_lower.
Rational chain_eval(const std::vector<Vec2>& chain, const Rational& x, bool upper) {
    if (x.sign() < 0 || x > chain.front().x) throw InputError("eval: x outside [0, a]");
    bool found = false;
    Rational best;
    auto consider = [&](const Rational& y) {
        if (!found) {
            best = y;
            found = true;
        } else if (upper ? (y > best) : (y < best)) {
            best = y;
        }
    };
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const Vec2& p = chain[i];
        const Vec2& q = chain[i + 1];
        const Rational hi = max(p.x, q.x), lo = min(p.x, q.x);
        if (x > hi || x < lo) continue;
        if (p.x == q.x) {
            consider(p.y);
            consider(q.y);
        } else {
            consider(p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x));
        }
    }
    if (!found) throw InputError("eval: x not covered by chain");
    return best;
}

bool chain_contains(const std::vector<Vec2>& inner, const std::vector<Vec2>& outer) {
    const Rational a_in = inner.front().x;
    if (a_in > outer.front().x) return false;
    std::vector<Rational> events;
    for (const Vec2& v : inner) events.push_back(v.x);
    for (const Vec2& v : outer) {
        if (v.x <= a_in) events.push_back(v.x);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    for (const Rational& x : events) {
        if (chain_eval(inner, x, true) > chain_eval(outer, x, true)) return false;
        if (chain_eval(inner, x, false) > chain_eval(outer, x, false)) return false;
    }
    return true;
}

bool chain_is_convex_domain(const std::vector<Vec2>& region_chain,
                            const std::vector<Vec2>& polygon_vertices) {
    // Literal test of the definition: the four-quadrant reflection of the
    // region is convex iff the quadrant clip of the reflected vertices' hull
    // adds nothing to the region.
    if (!chain_is_monotone(region_chain)) return false;
    std::vector<Vec2> pts;
    pts.reserve(polygon_vertices.size() * 4);
    for (const Vec2& v : polygon_vertices) {
        pts.push_back({v.x, v.y});
        pts.push_back({-v.x, v.y});
        pts.push_back({v.x, -v.y});
        pts.push_back({-v.x, -v.y});
    }
    std::vector<Vec2> hull = convex_hull(std::move(pts));
    hull = clip_half_plane(hull, {1, 0});
    hull = clip_half_plane(hull, {0, 1});
    const std::vector<Vec2> hull_chain = extract_chain(Polygon2D(std::move(hull)));
    // A centrally and axis-symmetric convex set has a monotone quadrant
    // boundary, so the envelope comparison applies.
    return chain_contains(hull_chain, region_chain);
}

RegionFlags classify_impl(const Polygon2D& region, const std::vector<Vec2>& chain) {
    RegionFlags f;
    f.monotone = chain_is_monotone(chain);
    f.concave = f.monotone && chain_is_concave(chain);
    f.convex = f.monotone && chain_is_convex_domain(chain, region.vertices());
    return f;
}

}  // namespace

EllipsoidSpec::EllipsoidSpec(std::vector<Rational> axes_in) : axes(std::move(axes_in)) {
    check_axes(axes, "ellipsoid");
}

PolydiskSpec::PolydiskSpec(std::vector<Rational> axes_in) : axes(std::move(axes_in)) {
    check_axes(axes, "polydisk");
}

ToricRegion2D::ToricRegion2D(Polygon2D region)
    : region_(std::move(region)), chain_(extract_chain(region_)), flags_(classify_impl(region_, chain_)) {}

ToricRegion2D ToricRegion2D::from_chain(std::vector<Vec2> chain) {
    std::vector<Vec2> vs;
    vs.reserve(chain.size() + 1);
    vs.push_back({0, 0});
    vs.insert(vs.end(), chain.begin(), chain.end());
    return ToricRegion2D(Polygon2D(std::move(vs)));
}

Rational ToricRegion2D::area() const { return polygon_area(region_); }

ToricRegion2D make_veps(const Rational& eps) {
    if (eps.sign() <= 0 || eps >= Rational(1, 2)) {
        throw InputError("eps must lie in (0, 1/2), got " + eps.str());
    }
    return ToricRegion2D::from_chain({{1, 0}, {eps, eps}, {0, 1}});
}

ToricRegion2D make_triangle(const Rational& a, const Rational& b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw InputError("triangle intercepts must be positive");
    return ToricRegion2D::from_chain({{a, 0}, {0, b}});
}

ToricRegion2D make_rectangle(const Rational& a, const Rational& b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw InputError("rectangle sides must be positive");
    return ToricRegion2D::from_chain({{a, 0}, {a, b}, {0, b}});
}

RegionFlags classify(const Polygon2D& region) {
    return classify_impl(region, extract_chain(region));
}

AxisData axis_data(const ToricRegion2D& region) {
    AxisData d{region.a(), region.b(), 0};
    for (const Vec2& v : region.chain()) d.w = max(d.w, v.x + v.y);
    return d;
}

Rational boundary_min(const ToricRegion2D& region, const Vec2& v) {
    return chain_min(region.chain(), v);
}

Rational eval_upper(const std::vector<Vec2>& chain, const Rational& x) {
    return chain_eval(chain, x, true);
}

Rational eval_lower(const std::vector<Vec2>& chain, const Rational& x) {
    return chain_eval(chain, x, false);
}

bool region_contains(const ToricRegion2D& inner, const ToricRegion2D& outer) {
    if (!inner.flags().monotone || !outer.flags().monotone) {
        throw InputError("region_contains requires monotone regions");
    }
    return chain_contains(inner.chain(), outer.chain());
}

bool region_contains_point(const ToricRegion2D& region, const Vec2& p) {
    if (p.x.sign() < 0 || p.y.sign() < 0) return false;
    if (p.x > region.a()) return false;
    if (!region.flags().monotone) throw InputError("region_contains_point requires a monotone region");
    return p.y <= eval_upper(region.chain(), p.x);
}

ToricRegion2D moment_region(const EllipsoidSpec& e) {
    if (e.axes.size() != 2) {
        throw InputError("moment_region: only 2-d ellipsoids have polygonal moment images");
    }
    return make_triangle(e.axes[0], e.axes[1]);
}

ToricRegion2D ball_region(const Rational& r) { return make_triangle(r, r); }

}  // namespace toricap
