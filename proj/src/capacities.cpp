#include "toricap/capacities.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <utility>

#include "toricap/errors.hpp"

namespace toricap {

namespace {

Rational ch_convex_region_impl(const ToricRegion2D& region, int k) {
    bool first = true;
    Rational best;
    for (int i = 0; i <= k; ++i) {
        const Rational value = support_max(region.polygon(), Vec2{i, k - i});
        if (first || value < best) {
            best = value;
            first = false;
        }
    }
    return best;
}

void for_each_composition(int total, VecN& v, std::size_t pos, const auto& fn) {
    if (pos + 1 == v.size()) {
        v[pos] = total;
        fn(v);
        return;
    }
    for (int i = 0; i <= total; ++i) {
        v[pos] = i;
        for_each_composition(total - i, v, pos + 1, fn);
    }
}

Rational ch_convex_vertices_impl(const std::vector<VecN>& vertices, int k) {
    const std::size_t n = vertices.front().size();
    bool first = true;
    Rational best;
    VecN v(n);
    for_each_composition(k, v, 0, [&](const VecN& vec) {
        const Rational value = support_max(vertices, vec);
        if (first || value < best) {
            best = value;
            first = false;
        }
    });
    return best;
}

Rational ch_concave_impl(const ToricRegion2D& region, int k) {
    // v = (i, k+1-i) with both entries >= 1.
    bool first = true;
    Rational best;
    for (int i = 1; i <= k; ++i) {
        const Rational value = boundary_min(region, Vec2{i, k + 1 - i});
        if (first || value > best) {
            best = value;
            first = false;
        }
    }
    return best;
}

// The min-max formulas above are imported results.  Before first use they
// must reproduce known anchor values: agreement of both engines with N_k on
// ellipsoid triangles, c_k = k on cubes, and c_2 = 3*eps on the staircase
// quadrilaterals.  A failure poisons every subsequent call.
std::once_flag g_gate_flag;
bool g_gate_ok = false;
std::string g_gate_message;

void require(bool ok, const std::string& what) {
    if (!ok) throw ComputeError("capacity formula self-test failed: " + what);
}

void run_gate_checks() {
    const std::vector<std::pair<Rational, Rational>> ellipsoids = {
        {1, 1}, {1, 2}, {2, 3}, {1, Rational(5, 2)}, {Rational(3, 7), Rational(10, 7)}};
    for (const auto& [a, b] : ellipsoids) {
        const ToricRegion2D t = make_triangle(a, b);
        for (int k = 1; k <= 8; ++k) {
            const Rational expected = n_k({a, b}, k);
            require(ch_convex_region_impl(t, k) == expected,
                    "convex engine vs N_" + std::to_string(k) + " on E(" + a.str() + "," + b.str() + ")");
            require(ch_concave_impl(t, k) == expected,
                    "concave engine vs N_" + std::to_string(k) + " on E(" + a.str() + "," + b.str() + ")");
        }
    }

    const ToricRegion2D square = make_rectangle(1, 1);
    for (int k = 1; k <= 8; ++k) {
        require(ch_convex_region_impl(square, k) == Rational(k),
                "convex engine on the unit square, k = " + std::to_string(k));
    }
    std::vector<VecN> cube;
    for (int m = 0; m < 8; ++m) {
        cube.push_back({Rational((m >> 0) & 1), Rational((m >> 1) & 1), Rational((m >> 2) & 1)});
    }
    for (int k = 1; k <= 5; ++k) {
        require(ch_convex_vertices_impl(cube, k) == Rational(k),
                "convex engine on the unit 3-cube, k = " + std::to_string(k));
    }

    for (const Rational& eps : {Rational(1, 5), Rational(2, 9)}) {
        require(ch_concave_impl(make_veps(eps), 2) == 3 * eps,
                "concave engine on the staircase quadrilateral, eps = " + eps.str());
    }
}

void ensure_gate() {
    std::call_once(g_gate_flag, [] {
        try {
            run_gate_checks();
            g_gate_ok = true;
        } catch (const std::exception& e) {
            g_gate_ok = false;
            g_gate_message = e.what();
        }
    });
    if (!g_gate_ok) throw ComputeError(g_gate_message);
}

void check_sequence(const CapacitySequence& s) {
    if (s.values.empty() || !s.values.front().is_zero()) {
        throw ComputeError("capacity sequence must start at c_0 = 0");
    }
    for (std::size_t i = 0; i + 1 < s.values.size(); ++i) {
        if (s.values[i] > s.values[i + 1]) throw ComputeError("capacity sequence must be nondecreasing");
    }
}

BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= BigInt(i);
    return f;
}

}  // namespace

Rational n_k(const std::vector<Rational>& axes, int k) {
    if (axes.empty()) throw InputError("n_k: axes must be nonempty");
    if (k < 1) throw InputError("n_k: k must be >= 1");
    Rational least = axes.front();
    for (const Rational& a : axes) {
        if (a.sign() <= 0) throw InputError("n_k: axes must be positive");
        least = min(least, a);
    }
    // The k multiples of the smallest axis are already k elements <= k*min,
    // so the k-th smallest lies within this bound.
    const Rational bound = k * least;
    std::vector<Rational> values;
    for (const Rational& a : axes) {
        for (Rational m = a; m <= bound; m += a) values.push_back(m);
    }
    std::sort(values.begin(), values.end());
    return values[static_cast<std::size_t>(k - 1)];
}

Rational ch_convex(const ToricRegion2D& region, int k) {
    ensure_gate();
    if (k < 1) throw InputError("ch_convex: k must be >= 1");
    if (!region.flags().convex) {
        throw InputError("ch_convex: region is not a convex toric domain (for concave domains use ch_concave)");
    }
    return ch_convex_region_impl(region, k);
}

Rational ch_convex(const std::vector<VecN>& convex_region_vertices, int k) {
    ensure_gate();
    if (k < 1) throw InputError("ch_convex: k must be >= 1");
    if (convex_region_vertices.empty()) throw InputError("ch_convex: empty vertex list");
    const std::size_t n = convex_region_vertices.front().size();
    if (n < 2) throw InputError("ch_convex: vertices must have dimension >= 2");
    for (const VecN& v : convex_region_vertices) {
        if (v.size() != n) throw InputError("ch_convex: inconsistent vertex dimensions");
    }
    return ch_convex_vertices_impl(convex_region_vertices, k);
}

Rational ch_concave(const ToricRegion2D& region, int k) {
    ensure_gate();
    if (k < 1) throw InputError("ch_concave: k must be >= 1");
    if (!region.flags().concave) {
        throw InputError("ch_concave: region is not a concave toric domain");
    }
    return ch_concave_impl(region, k);
}

Rational volume(const EllipsoidSpec& e) {
    Rational prod = 1;
    for (const Rational& a : e.axes) prod *= a;
    return prod / Rational(factorial(e.axes.size()));
}

Rational volume(const PolydiskSpec& p) {
    Rational prod = 1;
    for (const Rational& a : p.axes) prod *= a;
    return prod;
}

Rational volume(const ToricRegion2D& r) { return r.area(); }

CapacitySequence ech_sequence(const Rational& ball, int K) {
    if (K < 0) throw InputError("ech_sequence: horizon must be >= 0");
    if (ball.sign() <= 0) throw InputError("ech_sequence: ball size must be positive");
    // c_k(B(a)) = a*d where d(d+1)/2 <= k < (d+1)(d+2)/2.
    CapacitySequence s;
    s.values.reserve(static_cast<std::size_t>(K) + 1);
    long long d = 0, next = 1;  // next = T(d+1)
    for (long long k = 0; k <= K; ++k) {
        if (k == next) {
            ++d;
            next += d + 1;
        }
        s.values.push_back(Rational(d) * ball);
    }
    check_sequence(s);
    return s;
}

CapacitySequence ech_sequence(const Rational& a, const Rational& b, int K) {
    if (K < 0) throw InputError("ech_sequence: horizon must be >= 0");
    if (a.sign() <= 0 || b.sign() <= 0) throw InputError("ech_sequence: ellipsoid axes must be positive");
    const Rational bound = K * min(a, b);
    std::vector<Rational> sums;
    for (Rational ma = 0; ma <= bound; ma += a) {
        for (Rational total = ma; total <= bound; total += b) sums.push_back(total);
    }
    std::sort(sums.begin(), sums.end());
    CapacitySequence s;
    s.values.assign(sums.begin(), sums.begin() + (K + 1));
    check_sequence(s);
    return s;
}

CapacitySequence ech_sequence(const std::vector<Rational>& ball_radii, int K) {
    if (ball_radii.empty()) throw InputError("ech_sequence: union must be nonempty");
    CapacitySequence acc = ech_sequence(ball_radii.front(), K);
    for (std::size_t i = 1; i < ball_radii.size(); ++i) {
        acc = max_plus_convolve(acc, ech_sequence(ball_radii[i], K));
    }
    return acc;
}

CapacitySequence max_plus_convolve(const CapacitySequence& a, const CapacitySequence& b) {
    const std::size_t K = std::min(a.values.size(), b.values.size());
    CapacitySequence c;
    c.values.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
        Rational best = a.values[k] + b.values[0];
        for (std::size_t i = 0; i <= k; ++i) {
            best = max(best, a.values[i] + b.values[k - i]);
        }
        c.values.push_back(best);
    }
    check_sequence(c);
    return c;
}

}  // namespace toricap
