#include "toricap/geometry.hpp"

#include <algorithm>

#include "toricap/errors.hpp"

namespace toricap {

namespace {

int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    return cross(b - a, c - a).sign();
}

// Assumes p collinear with ab.
bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
    return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) &&
           min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

bool segments_touch(const Vec2& p1, const Vec2& p2, const Vec2& p3, const Vec2& p4) {
    const int d1 = orient(p3, p4, p1);
    const int d2 = orient(p3, p4, p2);
    const int d3 = orient(p1, p2, p3);
    const int d4 = orient(p1, p2, p4);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return true;
    }
    if (d1 == 0 && on_segment(p3, p4, p1)) return true;
    if (d2 == 0 && on_segment(p3, p4, p2)) return true;
    if (d3 == 0 && on_segment(p1, p2, p3)) return true;
    if (d4 == 0 && on_segment(p1, p2, p4)) return true;
    return false;
}

Rational twice_signed_area(const std::vector<Vec2>& vs) {
    Rational s = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        s += cross(vs[i], vs[(i + 1) % vs.size()]);
    }
    return s;
}

}  // namespace

Rational dot(const VecN& a, const VecN& b) {
    if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Polygon2D::Polygon2D(std::vector<Vec2> vertices) {
    if (vertices.size() < 3) throw InputError("polygon needs at least 3 vertices");
    for (const Vec2& v : vertices) {
        if (v.x.sign() < 0 || v.y.sign() < 0) {
            throw InputError("polygon vertex outside the first quadrant");
        }
    }

    std::vector<Vec2> vs;
    for (const Vec2& v : vertices) {
        if (vs.empty() || !(v == vs.back())) vs.push_back(v);
    }
    while (vs.size() > 1 && vs.front() == vs.back()) vs.pop_back();
    if (vs.size() < 3) throw InputError("polygon degenerate after duplicate removal");

    const Rational area2 = twice_signed_area(vs);
    if (area2.is_zero()) throw InputError("polygon has zero area");
    if (area2.sign() < 0) std::reverse(vs.begin(), vs.end());

    // Remove straight-through vertices; a 180-degree reversal is a spike, not
    // a vertex to drop, so it is rejected.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < vs.size() && vs.size() > 3; ++i) {
            const Vec2& prev = vs[(i + vs.size() - 1) % vs.size()];
            const Vec2 e1 = vs[i] - prev;
            const Vec2 e2 = vs[(i + 1) % vs.size()] - vs[i];
            if (cross(e1, e2).is_zero()) {
                if (dot(e1, e2).sign() <= 0) throw InputError("polygon has a spike");
                vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_touch(vs[i], vs[(i + 1) % n], vs[j], vs[(j + 1) % n])) {
                throw InputError("polygon boundary self-intersects");
            }
        }
    }

    const auto lex_less = [](const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    };
    const auto first = std::min_element(vs.begin(), vs.end(), lex_less);
    std::rotate(vs.begin(), first, vs.end());
    vs_ = std::move(vs);
}

Rational polygon_area(const Polygon2D& p) {
    return twice_signed_area(p.vertices()) / Rational(2);
}

UnimodularAffine2D::UnimodularAffine2D(BigInt a_, BigInt b_, BigInt c_, BigInt d_, Vec2 t_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), t(std::move(t_)) {
    if (a * d - b * c != 1) throw InputError("matrix determinant must be 1");
}

Vec2 UnimodularAffine2D::apply(const Vec2& p) const {
    return {Rational(a) * p.x + Rational(b) * p.y + t.x,
            Rational(c) * p.x + Rational(d) * p.y + t.y};
}

Polygon2D affine_image(const Polygon2D& p, const UnimodularAffine2D& map) {
    std::vector<Vec2> vs;
    vs.reserve(p.size());
    for (const Vec2& v : p.vertices()) vs.push_back(map.apply(v));
    return Polygon2D(std::move(vs));
}

Rational support_max(const std::vector<VecN>& vertices, const VecN& v) {
    if (vertices.empty()) throw InputError("support_max: empty vertex list");
    Rational best = dot(vertices.front(), v);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        best = max(best, dot(vertices[i], v));
    }
    return best;
}

Rational support_max(const Polygon2D& p, const Vec2& v) {
    Rational best = dot(p.vertices().front(), v);
    for (const Vec2& q : p.vertices()) best = max(best, dot(q, v));
    return best;
}

Rational chain_min(const std::vector<Vec2>& chain, const Vec2& v) {
    if (chain.empty()) throw InputError("chain_min: empty chain");
    Rational best = dot(chain.front(), v);
    for (const Vec2& q : chain) best = min(best, dot(q, v));
    return best;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> points) {
    const auto lex_less = [](const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    };
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) return points;

    const auto build = [](auto begin, auto end) {
        std::vector<Vec2> h;
        for (auto it = begin; it != end; ++it) {
            while (h.size() >= 2 &&
                   cross(h[h.size() - 1] - h[h.size() - 2], *it - h[h.size() - 2]).sign() <= 0) {
                h.pop_back();
            }
            h.push_back(*it);
        }
        return h;
    };
    std::vector<Vec2> lower = build(points.begin(), points.end());
    std::vector<Vec2> upper = build(points.rbegin(), points.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

std::vector<Vec2> clip_half_plane(const std::vector<Vec2>& poly, const Vec2& normal) {
    std::vector<Vec2> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& cur = poly[i];
        const Vec2& nxt = poly[(i + 1) % n];
        const Rational dc = dot(normal, cur);
        const Rational dn = dot(normal, nxt);
        if (dc.sign() >= 0) out.push_back(cur);
        if ((dc.sign() > 0 && dn.sign() < 0) || (dc.sign() < 0 && dn.sign() > 0)) {
            const Rational t = dc / (dc - dn);
            out.push_back(cur + t * (nxt - cur));
        }
    }
    return out;
}

}  // namespace toricap
