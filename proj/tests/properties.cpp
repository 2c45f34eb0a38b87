#include "properties.hpp"

#include <random>
#include <vector>

#include "test_util.hpp"
#include "toricap/capacities.hpp"
#include "toricap/domains.hpp"
#include "toricap/packing.hpp"
#include "toricap/rational.hpp"
#include "toricap/weights.hpp"

namespace toricap::props {

namespace {

struct Tally {
    GroupResult r;
    void expect(bool ok) {
        ++r.checked;
        if (!ok) ++r.failures;
    }
};

std::vector<Rational> scaled(const std::vector<Rational>& v, const Rational& lambda) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const Rational& x : v) out.push_back(lambda * x);
    return out;
}

const std::vector<Rational>& eps_grid() {
    static const std::vector<Rational> grid{
        Rational(1, 6),  Rational(1, 5),   Rational(43, 200),
        Rational(2, 9),  Rational(23, 100), Rational(1, 4),
        Rational(3, 10), Rational(1, 3),   Rational(2, 5)};
    return grid;
}

}  // namespace

GroupResult property_conservation(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Tally t;

    for (int i = 0; i < 40; ++i) {
        const ToricRegion2D region = testutil::random_concave_region(rng);
        const WeightSequence ws = weights_concave(region);
        t.expect(ws.sum_squares() == 2 * region.area());
        bool positive_descending = true;
        for (std::size_t j = 0; j < ws.weights.size(); ++j) {
            if (ws.weights[j].sign() <= 0) positive_descending = false;
            if (j > 0 && ws.weights[j] > ws.weights[j - 1]) positive_descending = false;
        }
        t.expect(positive_descending);
    }

    for (const Rational& eps : eps_grid()) {
        t.expect(weights_concave(make_veps(eps)).sum_squares() == 2 * eps);
    }

    for (int i = 0; i < 50; ++i) {
        const Rational a = testutil::random_rational(rng);
        const Rational b = testutil::random_rational(rng);
        t.expect(weights_ellipsoid(a, b).sum_squares() == a * b);
    }
    return t.r;
}

GroupResult property_inclusion(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Tally t;

    for (int i = 0; i < 12; ++i) {
        const ToricRegion2D inner = testutil::random_concave_region(rng);
        const Rational lambda(testutil::pick(rng, 5, 12), 4);  // >= 5/4
        const ToricRegion2D outer = testutil::scale_region(inner, lambda);
        t.expect(region_contains(inner, outer));
        for (int k = 1; k <= 6; ++k) {
            t.expect(ch_concave(inner, k) <= ch_concave(outer, k));
        }
    }

    for (int i = 0; i < 12; ++i) {
        const ToricRegion2D inner = testutil::random_convex_region(rng);
        const ToricRegion2D outer = testutil::scale_region(inner, Rational(2));
        t.expect(region_contains(inner, outer));
        for (int k = 1; k <= 6; ++k) {
            t.expect(ch_convex(inner, k) <= ch_convex(outer, k));
        }
    }

    const std::vector<Rational>& grid = eps_grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i; j < grid.size(); ++j) {
            t.expect(region_contains(make_veps(grid[i]), make_veps(grid[j])));
            t.expect(ch_concave(make_veps(grid[i]), 2) <= ch_concave(make_veps(grid[j]), 2));
        }
    }

    for (int i = 0; i < 15; ++i) {
        const Rational a = testutil::random_rational(rng);
        const Rational b = testutil::random_rational(rng);
        const Rational bump(testutil::pick(rng, 1, 8), 3);
        for (int k = 1; k <= 8; ++k) {
            t.expect(n_k({a, b}, k) <= n_k({a + bump, b}, k));
            t.expect(n_k({a, b}, k) <= n_k({a, b + bump}, k));
        }
        const CapacitySequence small = ech_sequence(a, 25);
        const CapacitySequence big = ech_sequence(a + bump, 25);
        bool termwise = true;
        for (std::size_t k = 0; k < small.values.size(); ++k) {
            if (small.values[k] > big.values[k]) termwise = false;
        }
        t.expect(termwise);
    }
    return t.r;
}

GroupResult property_scaling(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::vector<Rational> lambdas{Rational(2), Rational(7, 2), Rational(1, 3)};
    Tally t;

    for (int i = 0; i < 10; ++i) {
        const ToricRegion2D region = testutil::random_concave_region(rng);
        for (const Rational& lambda : lambdas) {
            const ToricRegion2D big = testutil::scale_region(region, lambda);
            for (int k = 1; k <= 5; ++k) {
                t.expect(ch_concave(big, k) == lambda * ch_concave(region, k));
            }
            t.expect(testutil::same_multiset(weights_concave(big).weights,
                                             scaled(weights_concave(region).weights, lambda)));
        }
    }

    for (int i = 0; i < 10; ++i) {
        const ToricRegion2D region = testutil::random_convex_region(rng);
        for (const Rational& lambda : lambdas) {
            const ToricRegion2D big = testutil::scale_region(region, lambda);
            for (int k = 1; k <= 5; ++k) {
                t.expect(ch_convex(big, k) == lambda * ch_convex(region, k));
            }
        }
    }

    for (int i = 0; i < 15; ++i) {
        const Rational a = testutil::random_rational(rng);
        const Rational b = testutil::random_rational(rng);
        for (const Rational& lambda : lambdas) {
            for (int k = 1; k <= 8; ++k) {
                t.expect(n_k({lambda * a, lambda * b}, k) == lambda * n_k({a, b}, k));
            }
            const CapacitySequence base = ech_sequence(a, 20);
            const CapacitySequence stretched = ech_sequence(lambda * a, 20);
            bool termwise = true;
            for (std::size_t k = 0; k < base.values.size(); ++k) {
                if (stretched.values[k] != lambda * base.values[k]) termwise = false;
            }
            t.expect(termwise);
        }
    }

    for (int i = 0; i < 20; ++i) {
        const Rational mu(testutil::pick(rng, 1, 10), testutil::pick(rng, 1, 3));
        std::vector<Rational> ws;
        const long long count = testutil::pick(rng, 1, 6);
        for (long long j = 0; j < count; ++j) {
            ws.push_back(Rational(testutil::pick(rng, 1, 10), testutil::pick(rng, 1, 5)));
        }
        const Verdict base = cremona_feasible(PackingInstance(mu, ws)).verdict;
        for (const Rational& lambda : lambdas) {
            t.expect(cremona_feasible(PackingInstance(lambda * mu, scaled(ws, lambda))).verdict ==
                     base);
        }
    }
    return t.r;
}

GroupResult property_agreement(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Tally t;

    for (int i = 0; i < 25; ++i) {
        const Rational a = testutil::random_rational(rng);
        const Rational b = testutil::random_rational(rng);
        const ToricRegion2D tri = make_triangle(a, b);
        for (int k = 1; k <= 10; ++k) {
            const Rational value = n_k({a, b}, k);
            t.expect(ch_convex(tri, k) == value);
            t.expect(ch_concave(tri, k) == value);
        }
    }

    for (int i = 0; i < 50; ++i) {
        const Rational a = testutil::random_rational(rng);
        const Rational b = testutil::random_rational(rng);
        t.expect(testutil::same_multiset(weights_concave(make_triangle(a, b)).weights,
                                         weights_ellipsoid(a, b).weights));
    }

    for (int i = 0; i < 30; ++i) {
        const Rational mu(testutil::pick(rng, 2, 12), testutil::pick(rng, 1, 3));
        std::vector<Rational> ws;
        const long long count = testutil::pick(rng, 1, 6);
        for (long long j = 0; j < count; ++j) {
            ws.push_back(Rational(testutil::pick(rng, 1, 9), testutil::pick(rng, 1, 4)));
        }
        const PackingInstance inst(mu, ws);
        const Verdict exact = cremona_feasible(inst).verdict;
        const EchResult sequences = ech_feasible(inst, 150);
        // The sequence comparison is one-sided: an obstruction refutes
        // feasibility, silence proves nothing.
        if (sequences.verdict == Verdict::Infeasible) {
            t.expect(exact == Verdict::Infeasible);
        } else {
            t.expect(true);
        }
        if (exact == Verdict::Feasible) {
            t.expect(sequences.verdict == Verdict::Feasible);
        }
    }
    return t.r;
}

}  // namespace toricap::props
