#include "toricap/packing.hpp"

#include <algorithm>

#include "toricap/capacities.hpp"
#include "toricap/errors.hpp"

namespace toricap {

namespace {

bool desc(const Rational& x, const Rational& y) { return y < x; }

BigInt lcm_of_denominators(const PackingInstance& inst) {
    BigInt l = inst.mu.den();
    for (const Rational& w : inst.weights) l = boost::multiprecision::lcm(l, w.den());
    return l;
}

BigInt scaled_to_integer(const Rational& r, const BigInt& scale) {
    return r.num() * (scale / r.den());
}

void sort_and_drop_zeros(std::vector<BigInt>& w) {
    std::sort(w.begin(), w.end(), [](const BigInt& x, const BigInt& y) { return y < x; });
    while (!w.empty() && w.back() == 0) w.pop_back();
}

ReductionTrace finish(ReductionTrace trace, Verdict v, BigInt mu, std::vector<BigInt> w,
                      std::string reason) {
    trace.verdict = v;
    trace.terminal_mu = std::move(mu);
    trace.terminal = std::move(w);
    trace.reason = std::move(reason);
    return trace;
}

// Decide feasibility, mapping Inconclusive to an error: bisection cannot
// proceed on an undecided point.
bool decided_feasible(const PackingInstance& inst) {
    const ReductionTrace t = cremona_feasible(inst);
    if (t.verdict == Verdict::Inconclusive) {
        throw ComputeError("packing decision inconclusive at mu = " + inst.mu.str() + ": " + t.reason);
    }
    return t.verdict == Verdict::Feasible;
}

Rational bisect_min_radius(const std::vector<Rational>& weights, const Rational& lo_start,
                           const Rational& hi_start, const Rational& resolution) {
    const auto feasible = [&](const Rational& mu) {
        return decided_feasible(PackingInstance(mu, weights));
    };
    // If the volume lower bound itself is feasible it is the exact minimum.
    if (feasible(lo_start)) return lo_start;
    if (!feasible(hi_start)) {
        throw ComputeError("minimum-ball bracketing failed: upper bound " + hi_start.str() +
                           " is not feasible");
    }
    Rational lo = lo_start, hi = hi_start;
    while (hi - lo > resolution) {
        const Rational mid = (lo + hi) / Rational(2);
        (feasible(mid) ? hi : lo) = mid;
    }
    const Rational snapped = simplest_rational_in(lo, true, hi, false);
    return feasible(snapped) ? snapped : hi;
}

}  // namespace

PackingInstance::PackingInstance(Rational mu_in, std::vector<Rational> weights_in)
    : mu(std::move(mu_in)), weights(std::move(weights_in)) {
    if (mu.sign() <= 0) throw InputError("packing instance: target must be positive");
    if (weights.empty()) throw InputError("packing instance: weights must be nonempty");
    for (const Rational& w : weights) {
        if (w.sign() <= 0) throw InputError("packing instance: weights must be positive");
    }
    std::sort(weights.begin(), weights.end(), desc);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Feasible: return "feasible";
        case Verdict::Infeasible: return "infeasible";
        case Verdict::Inconclusive: return "inconclusive";
    }
    throw InputError("unknown verdict");
}

ReductionTrace cremona_feasible(const PackingInstance& inst, long long step_limit) {
    if (step_limit < 1) throw InputError("cremona_feasible: step limit must be >= 1");
    ReductionTrace trace;
    trace.scale = lcm_of_denominators(inst);
    BigInt mu = scaled_to_integer(inst.mu, trace.scale);
    std::vector<BigInt> w;
    w.reserve(inst.weights.size());
    for (const Rational& x : inst.weights) w.push_back(scaled_to_integer(x, trace.scale));

    for (;;) {
        sort_and_drop_zeros(w);
        if (mu < 0) {
            return finish(std::move(trace), Verdict::Infeasible, std::move(mu), std::move(w),
                          "target became negative");
        }
        if (!w.empty() && w.back() < 0) {
            return finish(std::move(trace), Verdict::Infeasible, std::move(mu), std::move(w),
                          "a weight became negative");
        }
        if (!w.empty() && w.front() > mu) {
            return finish(std::move(trace), Verdict::Infeasible, std::move(mu), std::move(w),
                          "largest weight exceeds the target");
        }
        while (w.size() < 3) w.push_back(0);
        const BigInt defect = mu - (w[0] + w[1] + w[2]);
        if (defect >= 0) {
            BigInt sum_sq = 0;
            for (const BigInt& x : w) sum_sq += x * x;
            const bool ok = sum_sq <= mu * mu;
            sort_and_drop_zeros(w);
            return finish(std::move(trace), ok ? Verdict::Feasible : Verdict::Infeasible,
                          std::move(mu), std::move(w),
                          ok ? "reduced vector satisfies the volume bound"
                             : "reduced vector violates the volume bound");
        }
        if (static_cast<long long>(trace.steps.size()) >= step_limit) {
            sort_and_drop_zeros(w);
            return finish(std::move(trace), Verdict::Inconclusive, std::move(mu), std::move(w),
                          "step limit of " + std::to_string(step_limit) + " moves exhausted");
        }
        ReductionStep step;
        step.mu_before = mu;
        step.before = w;
        step.defect = defect;
        mu += defect;
        for (int i = 0; i < 3; ++i) w[static_cast<std::size_t>(i)] += defect;
        step.mu_after = mu;
        step.after = w;
        trace.steps.push_back(std::move(step));
    }
}

EchResult ech_feasible(const PackingInstance& inst, int K) {
    if (K < 1) throw InputError("ech_feasible: horizon must be >= 1");
    const CapacitySequence source = ech_sequence(inst.weights, K);
    const CapacitySequence target = ech_sequence(inst.mu, K);
    for (int k = 1; k <= K; ++k) {
        const auto i = static_cast<std::size_t>(k);
        if (source.values[i] > target.values[i]) {
            return {Verdict::Infeasible, k, K};
        }
    }
    return {Verdict::Feasible, std::nullopt, K};
}

EmbedResult embed_concave_into_ball(const ToricRegion2D& region, const Rational& mu,
                                    int max_steps) {
    if (mu.sign() <= 0) throw InputError("embed_concave_into_ball: ball size must be positive");
    WeightSequence ws = weights_concave(region, max_steps);
    ReductionTrace trace = cremona_feasible(PackingInstance(mu, ws.weights));
    const Verdict v = trace.verdict;
    return {v, std::move(ws), std::move(trace)};
}

Rational min_ball(const ToricRegion2D& region, const Rational& resolution) {
    if (resolution.sign() <= 0) throw InputError("min_ball: resolution must be positive");
    const WeightSequence ws = weights_concave(region);
    // Feasibility requires mu^2 >= sum w_i^2; the enclosing ball B(w) always
    // admits the packing, giving the upper end of the bracket.
    return bisect_min_radius(ws.weights, floor_sqrt(ws.sum_squares()), axis_data(region).w,
                             resolution);
}

Rational min_packing_radius(const std::vector<Rational>& weights, const Rational& resolution) {
    if (resolution.sign() <= 0) throw InputError("min_packing_radius: resolution must be positive");
    if (weights.empty()) throw InputError("min_packing_radius: weights must be nonempty");
    Rational sum = 0, sum_sq = 0;
    for (const Rational& w : weights) {
        if (w.sign() <= 0) throw InputError("min_packing_radius: weights must be positive");
        sum += w;
        sum_sq += w * w;
    }
    return bisect_min_radius(weights, floor_sqrt(sum_sq), sum, resolution);
}

Rational floor_sqrt(const Rational& v) {
    if (v.sign() < 0) throw InputError("floor_sqrt: negative argument");
    const BigInt root = boost::multiprecision::sqrt(v.num() * v.den());
    return Rational(root, v.den());
}

Rational simplest_rational_in(const Rational& lo, bool lo_strict, const Rational& hi,
                              bool hi_strict) {
    if (lo > hi || (lo == hi && (lo_strict || hi_strict))) {
        throw InputError("simplest_rational_in: empty interval");
    }
    const BigInt n0 = lo_strict ? lo.floor() + 1 : lo.ceil();
    if (Rational(n0) < hi || (!hi_strict && Rational(n0) == hi)) return Rational(n0);

    // No integer qualifies, so hi <= floor(lo)+1 and the answer is m + 1/y.
    const BigInt m = lo.floor();
    const Rational frac = lo - Rational(m);
    if (frac.is_zero()) {
        // lo itself is the excluded integer m; pick the largest unit fraction
        // step that stays inside.
        const Rational gap = hi - Rational(m);
        const Rational inv = Rational(1) / gap;
        const BigInt t0 = hi_strict ? inv.floor() + 1 : inv.ceil();
        return Rational(m) + Rational(1) / Rational(t0);
    }
    // x in (lo, hi) <=> x = m + 1/y with y between the reciprocals of the
    // fractional parts; reciprocation reverses the bounds and keeps their
    // strictness.
    const Rational y = simplest_rational_in(Rational(1) / (hi - Rational(m)), hi_strict,
                                            Rational(1) / frac, lo_strict);
    return Rational(m) + Rational(1) / y;
}

}  // namespace toricap
