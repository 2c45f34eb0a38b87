#include "toricap/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toricap/bounds.hpp"
#include "toricap/capacities.hpp"
#include "toricap/domains.hpp"
#include "toricap/errors.hpp"
#include "toricap/json_io.hpp"
#include "toricap/packing.hpp"
#include "toricap/rational.hpp"
#include "toricap/weights.hpp"

namespace toricap {

namespace {

int fail(std::ostream& out, const std::string& type, const std::string& message, int code) {
    Json e;
    e["error"] = Json{{"type", type}, {"message", message}};
    out << e.dump() << "\n";
    return code;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<Rational> parse_axes(const std::string& csv) {
    std::vector<Rational> axes;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t comma = csv.find(',', pos);
        axes.push_back(Rational::parse(csv.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return axes;
}

void put_rat(Json& o, const std::string& key, const Rational& r, int decimals) {
    o[key] = r.str();
    if (decimals >= 0) o[key + "_decimal"] = to_decimal(r, decimals);
}

Json rationals_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const Rational& r : v) a.push_back(r.str());
    return a;
}

Json decimals_json(const std::vector<Rational>& v, int decimals) {
    Json a = Json::array();
    for (const Rational& r : v) a.push_back(to_decimal(r, decimals));
    return a;
}

Json bigints_json(const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const BigInt& x : v) a.push_back(x.str());
    return a;
}

Json vertices_json(const Polygon2D& p) {
    Json a = Json::array();
    for (const Vec2& v : p.vertices()) a.push_back(Json::array({v.x.str(), v.y.str()}));
    return a;
}

Json trace_json(const ReductionTrace& t) {
    Json o;
    o["verdict"] = to_string(t.verdict);
    o["scale"] = t.scale.str();
    Json steps = Json::array();
    for (const ReductionStep& s : t.steps) {
        Json so;
        so["mu_before"] = s.mu_before.str();
        so["before"] = bigints_json(s.before);
        so["defect"] = s.defect.str();
        so["mu_after"] = s.mu_after.str();
        so["after"] = bigints_json(s.after);
        steps.push_back(std::move(so));
    }
    o["steps"] = std::move(steps);
    o["terminal_mu"] = t.terminal_mu.str();
    o["terminal"] = bigints_json(t.terminal);
    o["reason"] = t.reason;
    return o;
}

Json veps_json(const VepsReport& rep, int decimals) {
    Json o = Json::object();
    o["equal"] = rep.equal;
    put_rat(o, "c2_min", rep.c2_min, decimals);
    if (rep.equal) put_rat(o, "c2_max", rep.c2_max_lower, decimals);
    put_rat(o, "eps", rep.eps, decimals);
    o["regime"] = rep.regime;
    put_rat(o, "c2_max_lower", rep.c2_max_lower, decimals);
    if (rep.c2_max_upper) put_rat(o, "c2_max_upper", *rep.c2_max_upper, decimals);
    if (rep.certificate) put_rat(o, "certificate", *rep.certificate, decimals);
    return o;
}

std::string csv_cell(const Rational& r, int decimals) {
    return decimals >= 0 ? to_decimal(r, decimals) : r.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return quoted;
}

struct Grid {
    Rational start, stop, step;
};

Grid parse_grid(const std::string& spec) {
    const std::size_t c1 = spec.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        spec.find(':', c2 + 1) != std::string::npos) {
        throw InputError("grid must be \"start:stop:step\" with rational entries");
    }
    Grid g{Rational::parse(spec.substr(0, c1)), Rational::parse(spec.substr(c1 + 1, c2 - c1 - 1)),
           Rational::parse(spec.substr(c2 + 1))};
    if (g.step.sign() <= 0) throw InputError("grid step must be positive");
    if (g.stop < g.start) throw InputError("grid stop must not be below start");
    if ((g.stop - g.start) / g.step > Rational(100000)) {
        throw InputError("grid has more than 100000 points");
    }
    return g;
}

ParsedDomain load_domain(const std::string& path) {
    return parse_domain(parse_json_text(read_file(path)));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact capacity computations for toric domains"};
    app.require_subcommand(1);

    std::string axes_csv, eps_str, mu_str, input_path, grid_spec, format = "csv";
    int k = 0, thr_n = 0, kmax = 200, expansion_steps = 10000, decimals = -1;
    long long gap_k = 0, gap_n = 0, cremona_steps = 1'000'000;
    bool want_trace = false;

    const std::string decimals_help = "append decimal renderings with this many places";

    CLI::App* nk = app.add_subcommand("nk", "k-th smallest multiple among the axes");
    nk->add_option("--axes", axes_csv, "comma-separated positive rationals, e.g. 1/2,1")->required();
    nk->add_option("--k", k, "index, k >= 1")->required();
    nk->add_option("--decimals", decimals, decimals_help);

    CLI::App* cap = app.add_subcommand("cap", "combinatorial capacity of a domain document");
    cap->add_option("--input", input_path, "domain JSON file")->required();
    cap->add_option("--k", k, "index, k >= 1")->required();
    cap->add_option("--decimals", decimals, decimals_help);

    CLI::App* c2 = app.add_subcommand("c2", "second normalized capacity value");
    c2->add_option("--input", input_path, "domain JSON file (convex 2-d region, or model domain)");
    c2->add_option("--axes", axes_csv, "polydisk axes, comma-separated");
    c2->add_option("--decimals", decimals, decimals_help);

    CLI::App* weights = app.add_subcommand("weights", "ball weights of a concave region");
    weights->add_option("--input", input_path, "domain JSON file")->required();
    weights->add_option("--max-steps", expansion_steps, "expansion step cap (default 10000)");
    weights->add_option("--decimals", decimals, decimals_help);

    CLI::App* pack = app.add_subcommand("pack", "decide a ball-packing instance");
    pack->add_option("--input", input_path,
                     "JSON file: {\"mu\":..., \"weights\":[...]} or {\"mu\":..., \"domain\":{...}}")
        ->required();
    pack->add_option("--max-steps", cremona_steps, "reduction move cap (default 1000000)");
    CLI::Option* pack_kmax =
        pack->add_option("--kmax", kmax, "also cross-check capacity sequences up to this index");
    pack->add_flag("--trace", want_trace, "include the replayable reduction trace");
    pack->add_option("--decimals", decimals, decimals_help);

    CLI::App* embed = app.add_subcommand("embed-ball", "embed a concave region into a ball");
    embed->add_option("--input", input_path, "domain JSON file")->required();
    embed->add_option("--mu", mu_str, "ball size, rational")->required();
    embed->add_option("--max-steps", expansion_steps, "expansion step cap (default 10000)");
    embed->add_flag("--trace", want_trace, "include the replayable reduction trace");
    embed->add_option("--decimals", decimals, decimals_help);

    CLI::App* veps = app.add_subcommand("veps", "second-capacity report for V_eps");
    veps->add_option("--eps", eps_str, "rational in (0, 1/2)")->required();
    veps->add_option("--decimals", decimals, decimals_help);

    CLI::App* scan = app.add_subcommand("scan-veps", "V_eps reports over a grid");
    scan->add_option("--grid", grid_spec, "start:stop:step, rational entries")->required();
    scan->add_option("--format", format, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--decimals", decimals, decimals_help);

    CLI::App* gap = app.add_subcommand("gap", "k-normalized gap certificate for polydisks");
    gap->add_option("--k", gap_k, "k >= 1")->required();
    gap->add_option("--n", gap_n, "number of factors, n >= 2")->required();

    CLI::App* threshold = app.add_subcommand("threshold", "V_eps gap threshold n!/(2n-1)^n");
    threshold->add_option("--n", thr_n, "half the dimension, n >= 2")->required();
    CLI::Option* thr_eps = threshold->add_option("--eps", eps_str, "also test eps < threshold");
    threshold->add_option("--decimals", decimals, decimals_help);

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("toricap");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (decimals != -1 && (decimals < 0 || decimals > 1000)) {
            throw InputError("--decimals must be between 0 and 1000");
        }

        Json doc;
        std::string csv_text;
        bool is_csv = false;

        if (nk->parsed()) {
            doc = Json::object();
            put_rat(doc, "value", n_k(parse_axes(axes_csv), k), decimals);
        } else if (cap->parsed()) {
            const ParsedDomain d = load_domain(input_path);
            doc = Json::object();
            if (d.region) {
                const RegionFlags& f = d.region->flags();
                if (f.convex) {
                    put_rat(doc, "value", ch_convex(*d.region, k), decimals);
                    doc["engine"] = "convex";
                } else if (f.concave) {
                    put_rat(doc, "value", ch_concave(*d.region, k), decimals);
                    doc["engine"] = "concave";
                } else {
                    throw InputError(
                        "the region is neither convex nor concave; no capacity engine applies");
                }
            } else {
                put_rat(doc, "value", ch_convex(domain_vertices(d), k), decimals);
                doc["engine"] = "convex";
            }
        } else if (c2->parsed()) {
            const bool has_input = !input_path.empty(), has_axes = !axes_csv.empty();
            if (has_input == has_axes) {
                throw InputError("c2 needs exactly one of --input or --axes");
            }
            doc = Json::object();
            if (has_axes) {
                put_rat(doc, "value", c2_polydisk(parse_axes(axes_csv)), decimals);
            } else {
                const ParsedDomain d = load_domain(input_path);
                if (!d.region && d.kind == ParsedDomain::Kind::Ellipsoid) {
                    // Normalized capacities agree with N_2 on every ellipsoid.
                    put_rat(doc, "value", n_k(d.axes, 2), decimals);
                } else if (!d.region && d.kind == ParsedDomain::Kind::Polydisk) {
                    put_rat(doc, "value", c2_polydisk(d.axes), decimals);
                } else {
                    const C2Result r = c2_convex_4d(domain_region(d));
                    put_rat(doc, "value", r.value, decimals);
                    put_rat(doc, "a", r.a, decimals);
                    put_rat(doc, "w", r.w, decimals);
                    doc["inner"] =
                        Json{{"type", "ellipsoid"}, {"axes", rationals_json(r.inner.axes)}};
                    doc["outer"] =
                        Json{{"type", r.outer_kind == OuterWitness::Polydisk ? "polydisk" : "ball"},
                             {"axes", rationals_json(r.outer_axes)}};
                    doc["inner_quadrilateral"] = vertices_json(r.inner_quadrilateral);
                }
            }
        } else if (weights->parsed()) {
            const ParsedDomain d = load_domain(input_path);
            const WeightSequence ws = weights_concave(domain_region(d), expansion_steps);
            doc = Json::object();
            doc["weights"] = rationals_json(ws.weights);
            if (decimals >= 0) doc["weights_decimal"] = decimals_json(ws.weights, decimals);
            put_rat(doc, "sum_sq", ws.sum_squares(), decimals);
            put_rat(doc, "area", domain_region(d).area(), decimals);
        } else if (pack->parsed()) {
            const Json pdoc = parse_json_text(read_file(input_path));
            if (!pdoc.is_object()) throw InputError("pack input must be a JSON object");
            const bool has_w = pdoc.contains("weights"), has_d = pdoc.contains("domain");
            if (has_w == has_d) {
                throw InputError("pack input needs exactly one of \"weights\" or \"domain\"");
            }
            for (const auto& item : pdoc.items()) {
                if (item.key() != "mu" && item.key() != "weights" && item.key() != "domain") {
                    throw InputError("pack input: unknown key \"" + item.key() + "\"");
                }
            }
            if (!pdoc.contains("mu")) throw InputError("pack input: missing key \"mu\"");
            const Rational mu = rational_from_json(pdoc["mu"]);
            const std::vector<Rational> ws =
                has_w ? rationals_from_json(pdoc["weights"])
                      : weights_concave(domain_region(parse_domain(pdoc["domain"]))).weights;
            const PackingInstance inst(mu, ws);
            const ReductionTrace trace = cremona_feasible(inst, cremona_steps);
            if (trace.verdict == Verdict::Inconclusive) {
                throw ComputeError("packing decision inconclusive: " + trace.reason);
            }
            doc = Json::object();
            doc["verdict"] = to_string(trace.verdict);
            if (pack_kmax->count() > 0) {
                const EchResult er = ech_feasible(inst, kmax);
                if (er.verdict == Verdict::Infeasible && trace.verdict == Verdict::Feasible) {
                    throw ComputeError("capacity obstruction at k = " +
                                       std::to_string(*er.obstruction_k) +
                                       " contradicts the exact decider");
                }
                Json ej;
                ej["verdict"] = to_string(er.verdict);
                ej["obstruction_k"] = er.obstruction_k ? Json(*er.obstruction_k) : Json(nullptr);
                ej["horizon"] = er.horizon;
                doc["ech"] = std::move(ej);
            }
            if (want_trace) doc["trace"] = trace_json(trace);
        } else if (embed->parsed()) {
            const ParsedDomain d = load_domain(input_path);
            const EmbedResult res =
                embed_concave_into_ball(domain_region(d), Rational::parse(mu_str), expansion_steps);
            if (res.verdict == Verdict::Inconclusive) {
                throw ComputeError("embedding decision inconclusive: " + res.trace.reason);
            }
            doc = Json::object();
            doc["verdict"] = to_string(res.verdict);
            doc["weights"] = rationals_json(res.weights.weights);
            if (decimals >= 0) doc["weights_decimal"] = decimals_json(res.weights.weights, decimals);
            if (want_trace) doc["trace"] = trace_json(res.trace);
        } else if (veps->parsed()) {
            doc = veps_json(veps_analysis(Rational::parse(eps_str)), decimals);
        } else if (scan->parsed()) {
            const Grid g = parse_grid(grid_spec);
            std::vector<VepsReport> rows;
            for (Rational x = g.start; x <= g.stop; x += g.step) {
                rows.push_back(veps_analysis(x));
            }
            if (format == "json") {
                doc = Json::array();
                for (const VepsReport& rep : rows) doc.push_back(veps_json(rep, decimals));
            } else {
                is_csv = true;
                std::ostringstream csv;
                csv << "eps,c2_min,c2_max_lower,c2_max_upper,equal,regime\n";
                for (const VepsReport& rep : rows) {
                    csv << csv_cell(rep.eps, decimals) << ',' << csv_cell(rep.c2_min, decimals)
                        << ',' << csv_cell(rep.c2_max_lower, decimals) << ','
                        << (rep.c2_max_upper ? csv_cell(*rep.c2_max_upper, decimals) : "") << ','
                        << (rep.equal ? "true" : "false") << ',' << csv_escape(rep.regime) << '\n';
                }
                csv_text = csv.str();
            }
        } else if (gap->parsed()) {
            const GapCertificate c = polydisk_gap(gap_k, gap_n);
            doc = Json::object();
            doc["gap_proven"] = c.gap_proven;
            doc["k"] = c.k;
            doc["n"] = c.n;
            doc["inequality_violated"] = c.inequality_violated;
            doc["theorem_applies"] = c.theorem_applies;
            doc["chain"] = Json(c.chain);
        } else if (threshold->parsed()) {
            const Rational t = highdim_veps_threshold(thr_n);
            doc = Json::object();
            put_rat(doc, "threshold", t, decimals);
            if (thr_eps->count() > 0) {
                const Rational e = Rational::parse(eps_str);
                put_rat(doc, "eps", e, decimals);
                doc["gap_below"] = gap_below(e, thr_n);
            }
        }

        if (is_csv) {
            out << csv_text;
        } else {
            out << doc.dump() << "\n";
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return app.exit(e, out, err);
        }
        return fail(out, "input", e.what(), 2);
    } catch (const InputError& e) {
        return fail(out, "input", e.what(), 2);
    } catch (const nlohmann::json::exception& e) {
        return fail(out, "input", e.what(), 2);
    } catch (const ComputeError& e) {
        return fail(out, "compute", e.what(), 3);
    }
}

}  // namespace toricap
