#include "berkdisc/errors.hpp"
#include "berkdisc/io.hpp"
#include "berkdisc/pushforward.hpp"
#include "berkdisc/radiality.hpp"
#include "berkdisc/reduction.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

using namespace berkdisc;

namespace {

struct Options {
    std::string input;
    std::string at = "[]";
    std::string lambda;
    long fiber_index = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "json";
};

Rat parse_lambda_str(const std::string& s) {
    try {
        return rat_parse(s);
    } catch (const std::invalid_argument& e) {
        fail("UsageError", std::string("bad --lambda value: ") + e.what());
    }
}

FieldElement parse_at(const FieldParams& params, const std::string& s) {
    json j;
    try {
        j = json::parse(s);
    } catch (const json::exception& e) {
        fail("UsageError", std::string("bad --at value: ") + e.what());
    }
    return parse_element(params, j);
}

const char* status_str(RadialStatus s) {
    switch (s) {
        case RadialStatus::certified: return "CertifiedRadial";
        case RadialStatus::refuted: return "Refuted";
        case RadialStatus::undetermined: return "Undetermined";
    }
    return "Undetermined";
}

json multiradius_json(const FieldParams& params, const Multiradius& mr) {
    json lambdas = json::array(), radii = json::array();
    for (const Rat& l : mr.lambdas) {
        lambdas.push_back(rat_str(l));
        radii.push_back(radius_decimal(params.p, l));
    }
    return json{{"entries_lambda", lambdas}, {"entries_radius_p", radii}};
}

json radial_json(const RadialityVerdict& v) {
    json out{{"status", status_str(v.status)}, {"evidence", v.evidence}};
    if (v.profile) out["profile"] = polygon_json(*v.profile);
    if (v.refutation) {
        out["witness"] = json::array({element_json(v.refutation->witness_a),
                                      element_json(v.refutation->witness_b)});
        out["witness_detail"] = v.refutation->detail;
    }
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(const std::string& sub, const Options& opt) {
    Fixture fx = load_fixture(opt.input);
    DiscMorphism F = DiscMorphism::make(fx.morphism);
    const FieldParams& prm = fx.params;

    auto get_fiber = [&]() -> FiberData {
        if (opt.fiber_index < 0 ||
            static_cast<size_t>(opt.fiber_index) >= fx.raw_fibers.size())
            fail("UsageError", "fixture has " + std::to_string(fx.raw_fibers.size()) +
                                   " fibers, --fiber " + std::to_string(opt.fiber_index) +
                                   " is out of range");
        const FiberData& raw = fx.raw_fibers[static_cast<size_t>(opt.fiber_index)];
        return validate_fiber(F, raw.target, raw.roots);
    };
    auto require_json = [&]() {
        if (opt.format != "json")
            fail("UsageError", "--format " + opt.format + " is only available for the "
                               "polygon and profile subcommands");
    };

    if (sub == "polygon" || sub == "profile") {
        FieldElement a = parse_at(prm, opt.at);
        NewtonPolygon P = (sub == "polygon") ? local_polygon(F, a) : profile(F, a);
        if (opt.format == "ascii") {
            std::cout << render_ascii(P);
        } else if (opt.format == "svg") {
            std::cout << render_svg(P);
        } else {
            emit(json{{"p", prm.p},
                      {"ram", prm.N},
                      {"at", element_json(a)},
                      {"polygon", polygon_json(P)}});
        }
        return 0;
    }
    if (sub == "radial") {
        require_json();
        emit(radial_json(radial_certificate(F, opt.seed)));
        return 0;
    }
    if (sub == "fiber") {
        require_json();
        if (opt.lambda.empty()) fail("UsageError", "fiber needs --lambda");
        Rat lam = parse_lambda_str(opt.lambda);
        FiberData fib = get_fiber();
        std::vector<DiscPoint> pts = preimage_points(F, fib, lam);
        MultSumReport rep = check_mult_sum(F, fib, lam);
        json points = json::array();
        for (size_t i = 0; i < pts.size(); ++i)
            points.push_back(json{{"center", element_json(pts[i].center)},
                                  {"lambda", rat_str(pts[i].lambda)},
                                  {"radius", radius_decimal(prm.p, pts[i].lambda)},
                                  {"multiplicity", rep.multiplicities[i]}});
        emit(json{{"lambda", rat_str(lam)},
                  {"count", rep.count},
                  {"total", rep.total},
                  {"uniform", rep.uniform},
                  {"points", points}});
        return 0;
    }
    if (sub == "nfunction") {
        require_json();
        FiberData fib = get_fiber();
        CountFunction nf = count_function(F, fib);
        json jumps = json::array(), radii = json::array(), values = json::array();
        for (const Rat& l : nf.jumps) {
            jumps.push_back(rat_str(l));
            radii.push_back(radius_decimal(prm.p, l));
        }
        for (long v : nf.values) values.push_back(v);
        emit(json{{"degree", F.degree()},
                  {"jumps", jumps},
                  {"jump_radii", radii},
                  {"values", values}});
        return 0;
    }
    if (sub == "multiradius") {
        require_json();
        FiberData fib = get_fiber();
        Multiradius mr = multiradius_from_count(count_function(F, fib), F.degree());
        if (!(mr == multiradius_bruteforce(F, fib)))
            fail("InvariantViolation",
                 "count-function and clustering multiradii disagree on this fiber");
        json out = multiradius_json(prm, mr);
        out["agrees_with_clustering"] = true;
        emit(out);
        return 0;
    }
    if (sub == "reduce") {
        require_json();
        ResidualReport rep = residual_analysis(F.poly());
        emit(json{{"f_tilde", rep.f_tilde.str()},
                  {"r", rep.r},
                  {"g", rep.g.str()},
                  {"s", rep.sep_degree},
                  {"i", rep.insep_degree},
                  {"class", residual_class_name(rep.cls)},
                  {"uniform", rep.uniformly_ramified}});
        return 0;
    }
    if (sub == "check") {
        require_json();
        std::vector<FiberData> fibers;
        for (const FiberData& raw : fx.raw_fibers)
            fibers.push_back(validate_fiber(F, raw.target, raw.roots));
        MainTheoremReport rep = check_main_theorem_disc(F, fibers, opt.seed);
        json mrs = json::array();
        for (const Multiradius& mr : rep.fiber_multiradii)
            mrs.push_back(multiradius_json(prm, mr));
        json out = radial_json(rep.verdict);
        out["fiber_multiradii"] = mrs;
        out["all_equal"] = rep.all_equal;
        out["consistent"] = rep.consistent;
        emit(out);
        return 0;
    }
    fail("UsageError", "unknown subcommand: " + sub);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact valuation-polygon toolkit for finite morphisms of the "
                 "p-adic open unit disc"};
    app.require_subcommand(1);

    Options opt;
    const struct {
        const char* name;
        const char* help;
    } subs[] = {
        {"polygon", "local valuation polygon of f at a center"},
        {"profile", "radius map of f along the segment from a center to the boundary"},
        {"radial", "exact radiality certificate (certify, refute, or report ties)"},
        {"fiber", "preimage points and multiplicities over a fiber at one lambda"},
        {"nfunction", "fiber-count step function along the segment"},
        {"multiradius", "multiradius of the pushforward connection over a fiber"},
        {"reduce", "residue-field reduction and its separable/inseparable split"},
        {"check", "radiality verdict against per-fiber multiradii"},
    };
    for (const auto& s : subs) {
        CLI::App* c = app.add_subcommand(s.name, s.help);
        c->add_option("--in", opt.input, "fixture file (JSON)")->required();
        c->add_option("--seed", opt.seed, "RNG seed (BERKDISC_SEED overrides)");
        c->add_option("--format", opt.format, "json | ascii | svg")
            ->check(CLI::IsMember({"json", "ascii", "svg"}));
        c->add_option("--at", opt.at, "center element as JSON, default the origin");
        c->add_option("--lambda", opt.lambda, "lambda exponent, e.g. 3/2");
        c->add_option("--fiber", opt.fiber_index, "fiber index in the fixture");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (const char* env = std::getenv("BERKDISC_SEED")) {
        try {
            opt.seed = std::stoull(env);
        } catch (const std::exception&) {
            emit(json{{"error", "UsageError"},
                      {"message", "BERKDISC_SEED must be an unsigned integer"}});
            return 2;
        }
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    try {
        return run(sub, opt);
    } catch (const domain_failure& e) {
        emit(json{{"error", e.name()}, {"message", e.what()}});
        return e.name() == "UsageError" ? 2 : 1;
    } catch (const std::exception& e) {
        emit(json{{"error", "InternalError"}, {"message", e.what()}});
        return 1;
    }
}
