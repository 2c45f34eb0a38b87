#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "toricap/domains.hpp"
#include "toricap/geometry.hpp"
#include "toricap/rational.hpp"

namespace toricap {

// Ordered so that emitted documents have a stable, insertion-defined key
// order: identical invocations must render byte-identical output.
using Json = nlohmann::ordered_json;

// Rationals travel as exact "p/q" strings (integers also accepted on input);
// floating-point JSON numbers are rejected to keep every value exact.
Rational rational_from_json(const Json& j);
std::vector<Rational> rationals_from_json(const Json& j);
Json rational_to_json(const Rational& r);

// A domain document: {"type": "ellipsoid"|"polydisk"|"polygon2d"|"veps", ...}
// with "axes" (rational array), "vertices" (pair array) or "eps" as the
// type demands.  Unknown types or keys are rejected.
struct ParsedDomain {
    enum class Kind { Ellipsoid, Polydisk, Polygon, Veps };
    Kind kind;
    std::vector<Rational> axes;           // ellipsoid / polydisk
    std::optional<Rational> eps;          // veps
    std::optional<ToricRegion2D> region;  // present whenever the moment image is 2-d
};

ParsedDomain parse_domain(const Json& j);

// The 2-d moment region, or InputError for domains with 3 or more factors.
const ToricRegion2D& domain_region(const ParsedDomain& d);

// Vertex list of the moment polytope in any dimension, for the convex
// capacity engine: simplex corners for ellipsoids, box corners for polydisks,
// polygon vertices otherwise.
std::vector<VecN> domain_vertices(const ParsedDomain& d);

}  // namespace toricap
