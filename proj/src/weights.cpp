#include "toricap/weights.hpp"

#include <algorithm>

#include "toricap/errors.hpp"

namespace toricap {

namespace {

struct PendingNode {
    ToricRegion2D region;
    std::string path;
};

}  // namespace

Rational WeightSequence::sum_squares() const {
    Rational s = 0;
    for (const Rational& w : weights) s += w * w;
    return s;
}

WeightSequence weights_concave(const ToricRegion2D& region, int max_steps) {
    if (max_steps < 1) throw InputError("weights_concave: max_steps must be >= 1");
    if (!region.flags().concave) throw InputError("weights_concave: region is not concave");

    WeightSequence out;
    std::vector<PendingNode> pending;
    pending.push_back({region, ""});
    int steps = 0;
    while (!pending.empty()) {
        if (steps >= max_steps) {
            Rational residual = 0;
            for (const PendingNode& n : pending) residual += n.region.area();
            throw ComputeError("weight expansion did not terminate within " +
                               std::to_string(max_steps) + " steps; residual area " +
                               residual.str());
        }
        const PendingNode node = std::move(pending.back());
        pending.pop_back();
        ++steps;

        const std::vector<Vec2>& c = node.region.chain();
        const std::size_t last = c.size() - 1;
        // Largest inscribed corner triangle: T(w) fits below a monotone chain
        // exactly when w <= x+y at every chain vertex.
        Rational w = c[0].x + c[0].y;
        for (const Vec2& v : c) w = min(w, v.x + v.y);
        std::size_t i0 = 0, i1 = last;
        while (c[i0].x + c[i0].y != w) ++i0;
        while (c[i1].x + c[i1].y != w) --i1;
        for (std::size_t j = i0; j <= i1; ++j) {
            if (c[j].x + c[j].y != w) {
                throw ComputeError("weight expansion invariant violated: "
                                   "the minimum of x+y is not attained on a contiguous run");
            }
        }

        out.weights.push_back(w);
        out.source.push_back({node.path, w, node.region.polygon()});

        // Component along the y-axis: chain part from the end of the minimum
        // run to (0,b), translated by (0,-w) and sheared (x,y) -> (x, x+y).
        if (i1 < last) {
            std::vector<Vec2> up;
            up.reserve(last - i1 + 1);
            for (std::size_t j = i1; j <= last; ++j) {
                up.push_back({c[j].x, c[j].x + c[j].y - w});
            }
            ToricRegion2D child = ToricRegion2D::from_chain(std::move(up));
            if (!child.flags().concave) {
                throw ComputeError("weight expansion produced a non-concave remainder");
            }
            pending.push_back({std::move(child), node.path + "U"});
        }
        // Component along the x-axis: chain part from (a,0) to the start of
        // the minimum run, translated by (-w,0) and sheared (x,y) -> (x+y, y).
        if (i0 > 0) {
            std::vector<Vec2> low;
            low.reserve(i0 + 1);
            for (std::size_t j = 0; j <= i0; ++j) {
                low.push_back({c[j].x + c[j].y - w, c[j].y});
            }
            ToricRegion2D child = ToricRegion2D::from_chain(std::move(low));
            if (!child.flags().concave) {
                throw ComputeError("weight expansion produced a non-concave remainder");
            }
            pending.push_back({std::move(child), node.path + "L"});
        }
    }

    std::sort(out.weights.begin(), out.weights.end(), [](const Rational& x, const Rational& y) { return y < x; });
    return out;
}

WeightSequence weights_ellipsoid(const Rational& a, const Rational& b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw InputError("weights_ellipsoid: axes must be positive");
    WeightSequence out;
    Rational x = min(a, b), y = max(a, b);
    int step = 0;
    while (!x.is_zero()) {
        const BigInt m = (y / x).floor();
        Rational rest = y;
        for (BigInt j = 0; j < m; ++j) {
            out.weights.push_back(x);
            out.source.push_back({"s" + std::to_string(step++), x,
                                  make_triangle(x, rest).polygon()});
            rest -= x;
        }
        // The remainder y mod x is strictly smaller than x, so the pair stays ordered.
        y = x;
        x = rest;
    }
    std::sort(out.weights.begin(), out.weights.end(), [](const Rational& u, const Rational& v) { return v < u; });
    return out;
}

}  // namespace toricap
