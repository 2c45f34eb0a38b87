#include "toricap/json_io.hpp"

#include <set>
#include <string>
#include <utility>

#include "toricap/errors.hpp"

namespace toricap {

namespace {

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed) {
    for (const auto& item : j.items()) {
        if (!allowed.count(item.key())) {
            throw InputError("domain document: unknown key \"" + item.key() + "\"");
        }
    }
}

const Json& required_key(const Json& j, const std::string& key) {
    const auto it = j.find(key);
    if (it == j.end()) throw InputError("domain document: missing key \"" + key + "\"");
    return *it;
}

}  // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) {
        throw InputError("rational values must be exact: write \"p/q\", not " + j.dump());
    }
    throw InputError("expected a rational (\"p/q\" string or integer), got " + j.dump());
}

std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const Json& item : j) out.push_back(rational_from_json(item));
    return out;
}

Json rational_to_json(const Rational& r) { return Json(r.str()); }

ParsedDomain parse_domain(const Json& j) {
    if (!j.is_object()) throw InputError("domain document must be a JSON object");
    const Json& type = required_key(j, "type");
    if (!type.is_string()) throw InputError("domain document: \"type\" must be a string");
    const std::string kind = type.get<std::string>();

    ParsedDomain d{ParsedDomain::Kind::Ellipsoid, {}, std::nullopt, std::nullopt};
    if (kind == "ellipsoid" || kind == "polydisk") {
        reject_unknown_keys(j, {"type", "axes"});
        d.kind = kind == "ellipsoid" ? ParsedDomain::Kind::Ellipsoid : ParsedDomain::Kind::Polydisk;
        d.axes = rationals_from_json(required_key(j, "axes"));
        if (d.kind == ParsedDomain::Kind::Ellipsoid) {
            EllipsoidSpec spec(d.axes);  // validates
            if (d.axes.size() == 2) d.region = moment_region(spec);
        } else {
            PolydiskSpec spec(d.axes);  // validates
            if (d.axes.size() == 2) d.region = make_rectangle(d.axes[0], d.axes[1]);
        }
        return d;
    }
    if (kind == "polygon2d") {
        reject_unknown_keys(j, {"type", "vertices"});
        const Json& vs = required_key(j, "vertices");
        if (!vs.is_array()) throw InputError("polygon2d: \"vertices\" must be an array of pairs");
        std::vector<Vec2> pts;
        pts.reserve(vs.size());
        for (const Json& v : vs) {
            if (!v.is_array() || v.size() != 2) {
                throw InputError("polygon2d: each vertex must be a pair [x, y]");
            }
            pts.push_back({rational_from_json(v[0]), rational_from_json(v[1])});
        }
        d.kind = ParsedDomain::Kind::Polygon;
        d.region = ToricRegion2D(Polygon2D(std::move(pts)));
        return d;
    }
    if (kind == "veps") {
        reject_unknown_keys(j, {"type", "eps"});
        d.kind = ParsedDomain::Kind::Veps;
        d.eps = rational_from_json(required_key(j, "eps"));
        d.region = make_veps(*d.eps);
        return d;
    }
    throw InputError("domain document: unknown type \"" + kind +
                     "\" (expected ellipsoid, polydisk, polygon2d or veps)");
}

const ToricRegion2D& domain_region(const ParsedDomain& d) {
    if (!d.region) {
        throw InputError("this operation needs a 2-d moment region; the domain has " +
                         std::to_string(d.axes.size()) + " factors");
    }
    return *d.region;
}

std::vector<VecN> domain_vertices(const ParsedDomain& d) {
    std::vector<VecN> out;
    if (d.kind == ParsedDomain::Kind::Ellipsoid) {
        const std::size_t n = d.axes.size();
        out.push_back(VecN(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            VecN v(n, Rational(0));
            v[i] = d.axes[i];
            out.push_back(std::move(v));
        }
        return out;
    }
    if (d.kind == ParsedDomain::Kind::Polydisk) {
        const std::size_t n = d.axes.size();
        if (n > 16) throw InputError("polydisk vertex enumeration limited to 16 factors");
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            VecN v(n, Rational(0));
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::size_t{1} << i)) v[i] = d.axes[i];
            }
            out.push_back(std::move(v));
        }
        return out;
    }
    for (const Vec2& p : domain_region(d).polygon().vertices()) out.push_back(VecN{p.x, p.y});
    return out;
}

}  // namespace toricap
