#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricap/domains.hpp"
#include "toricap/rational.hpp"
#include "toricap/weights.hpp"

namespace toricap {

// Pack disjoint open balls B(w_i) into the open ball B(mu)?
struct PackingInstance {
    Rational mu;
    std::vector<Rational> weights;  // stored sorted descending
    PackingInstance(Rational mu_in, std::vector<Rational> weights_in);
};

enum class Verdict { Feasible, Infeasible, Inconclusive };
std::string to_string(Verdict v);

struct ReductionStep {
    BigInt mu_before;
    std::vector<BigInt> before;  // sorted descending, zero-padded to length >= 3
    BigInt defect;
    BigInt mu_after;
    std::vector<BigInt> after;
};

// Replayable record of a defect-move reduction.  The instance is first
// scaled to integers: (mu, weights) * scale.
struct ReductionTrace {
    Verdict verdict = Verdict::Inconclusive;
    BigInt scale = 1;
    std::vector<ReductionStep> steps;
    BigInt terminal_mu = 0;
    std::vector<BigInt> terminal;  // vector state when the verdict was reached
    std::string reason;
};

// Exact decider.  Repeat: sort descending, drop zeros; negative entries or a
// weight above the target mean infeasible; with defect d = mu - (w1+w2+w3)
// (missing entries read as 0), d >= 0 means the vector is reduced and the
// verdict is the volume test sum w_i^2 <= mu^2; otherwise add d to mu and to
// the three largest weights and continue.  Each move lowers the integer
// target, so the loop terminates; the step limit still guards pathological
// instances and yields an explicit Inconclusive verdict, never a guess.
ReductionTrace cremona_feasible(const PackingInstance& inst, long long step_limit = 1'000'000);

// One-sided cross-check: compare capacity sequences up to index K.  Feasible
// here means only "no obstruction up to the horizon".
struct EchResult {
    Verdict verdict;
    std::optional<int> obstruction_k;
    int horizon;
};
EchResult ech_feasible(const PackingInstance& inst, int K = 200);

// Every concave region embeds into a ball exactly when its weight expansion
// packs into that ball.
struct EmbedResult {
    Verdict verdict;
    WeightSequence weights;
    ReductionTrace trace;
};
EmbedResult embed_concave_into_ball(const ToricRegion2D& region, const Rational& mu,
                                    int max_steps = 10000);

// Smallest feasible ball size, located by bisection to within `resolution`
// and snapped to the simplest rational in the final bracket (so exact
// small-denominator answers are returned exactly).  The bracket starts at
// the volume bound sqrt(sum w_i^2) from below and at the enclosing ball
// radius (respectively the weight sum) from above.
Rational min_ball(const ToricRegion2D& region, const Rational& resolution);
Rational min_packing_radius(const std::vector<Rational>& weights, const Rational& resolution);

// Rational lower bound for sqrt(v): the result r satisfies r^2 <= v, with
// equality exactly when v is the square of a rational.
Rational floor_sqrt(const Rational& v);

// The rational with the smallest denominator inside the interval
// (strictness per flag); among equals, the smallest such value.
Rational simplest_rational_in(const Rational& lo, bool lo_strict, const Rational& hi, bool hi_strict);

}  // namespace toricap
