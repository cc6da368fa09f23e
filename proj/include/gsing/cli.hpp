#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include "verify.hpp"

namespace gsing::cli {

using Json = nlohmann::json;

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline Json rat_json(const Rational& r) {
    if (is_integer(r)) return static_cast<long long>(mpz_get_si(r.get_num_mpz_t()));
    return rational_to_string(r);
}

inline Json polys_json(const std::vector<Polynomial>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(p.str());
    return a;
}

inline Json monomials_json(const std::vector<Monomial>& ms) {
    Json a = Json::array();
    for (const auto& m : ms) a.push_back(Polynomial::monomial(m).str());
    return a;
}

inline Json longs_json(const std::vector<long>& v) {
    Json a = Json::array();
    for (long x : v) a.push_back(x);
    return a;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline MonomialOrdering parse_order(const std::string& s) {
    if (s == "ls") return MonomialOrdering::ls();
    if (s == "ds") return MonomialOrdering::ds();
    if (s.rfind("w:", 0) == 0) {
        auto comma = s.find(',', 2);
        if (comma == std::string::npos) throw UsageError("--order w:P,Q needs two weights");
        long p = std::stol(s.substr(2, comma - 2));
        long q = std::stol(s.substr(comma + 1));
        if (p < 1 || q < 1) throw UsageError("--order weights must be positive");
        return MonomialOrdering::weighted(p, q);
    }
    throw UsageError("unknown ordering '" + s + "' (expected ls, ds, or w:P,Q)");
}

inline Rational parse_alpha(const std::string& s) {
    auto r = parse_rational(s);
    if (!r) throw UsageError("cannot parse alpha '" + s + "'");
    if (*r < 0 || *r > 1) throw UsageError("alpha must lie in [0, 1]");
    return *r;
}

inline std::vector<Polynomial> parse_generators(const std::string& s) {
    std::vector<Polynomial> gens;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string piece =
            comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
        if (piece.find_first_not_of(" \t") != std::string::npos)
            gens.push_back(parse_polynomial(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (gens.empty()) throw UsageError("--ideal needs at least one generator");
    return gens;
}

inline Weights parse_weights(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--weights needs the form P,Q");
    long p = std::stol(s.substr(0, comma));
    long q = std::stol(s.substr(comma + 1));
    return Weights{p, q};
}

struct SpecFlags {
    std::string type;
    long k = 0;
    std::string weights;
    std::string poly;
};

inline SingularitySpec build_spec(const SpecFlags& f) {
    if (f.type == "Ak" || f.type == "Dk" || f.type == "Ek" || f.type == "Mk") {
        if (f.k <= 0) throw UsageError("--type " + f.type + " needs --k");
        if (f.type == "Ak") return SingularitySpec::a(f.k);
        if (f.type == "Dk") return SingularitySpec::d(f.k);
        if (f.type == "Ek") return SingularitySpec::e(f.k);
        return SingularitySpec::m(f.k);
    }
    if (f.type == "sqh") {
        if (f.poly.empty() || f.weights.empty())
            throw UsageError("--type sqh needs --poly and --weights");
        return SingularitySpec::sqh(parse_polynomial(f.poly), parse_weights(f.weights));
    }
    throw UsageError("unknown --type '" + f.type + "'");
}

inline Json spec_json(const SingularitySpec& s) {
    return Json{{"name", s.name()},
                {"poly", s.f.str()},
                {"weights", Json::array({s.w.p, s.w.q})}};
}

inline Json closed_form_json(const ClosedForm& cf) {
    switch (cf.kind) {
        case ClosedForm::Kind::Exact: return Json{{"exact", rat_json(cf.exact)}};
        case ClosedForm::Kind::Interval:
            return Json{{"lower", rat_json(cf.lower)}, {"upper", rat_json(cf.upper)}};
        case ClosedForm::Kind::None: return Json(nullptr);
    }
    return Json(nullptr);
}

inline Json gamma_report_json(const GammaReport& r, const Rational& alpha) {
    Json w{{"ideal", polys_json(r.witness_ideal)}, {"colength", r.witness_dim}};
    w["g"] = r.witness_g ? Json(r.witness_g->str()) : Json(nullptr);
    w["i"] = r.witness_i ? Json(*r.witness_i) : Json(nullptr);
    w["lambda"] = r.lambda ? rat_json(*r.lambda) : Json(nullptr);
    return Json{{"alpha", rat_json(alpha)},
                {"gamma", rat_json(r.gamma)},
                {"status", to_string(r.status)},
                {"closed_form", closed_form_json(r.closed_form)},
                {"witness", std::move(w)}};
}

inline Json hilbert_json(const Ideal& I) {
    const auto& hs = I.hilbert_samuel();
    return Json{{"h0", longs_json(hs.h0)},
                {"h1", longs_json(hs.h1)},
                {"mult", hs.mult},
                {"degbound", hs.degbound},
                {"colength", hs.colength},
                {"min_generators", I.min_generators()},
                {"iarrobino_lower_bound", I.iarrobino_lower_bound()},
                {"staircase", monomials_json(I.staircase())},
                {"standard_basis", polys_json(I.standard_basis())}};
}

inline std::string render_table(const Json& doc, const std::string& prefix = "") {
    std::string out;
    if (doc.is_object()) {
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
            if (it->is_object() || (it->is_array() && !it->empty() && it->front().is_object()))
                out += render_table(*it, key);
            else if (it->is_array()) {
                out += key + "  ";
                for (const auto& v : *it)
                    out += (v.is_string() ? v.get<std::string>() : v.dump()) + " ";
                out += "\n";
            } else if (it->is_string())
                out += key + "  " + it->get<std::string>() + "\n";
            else
                out += key + "  " + it->dump() + "\n";
        }
    } else if (doc.is_array()) {
        long idx = 0;
        for (const auto& v : doc) out += render_table(v, prefix + "[" + std::to_string(idx++) + "]");
    }
    return out;
}

}  // namespace detail

/// Parses argv-style arguments, executes one subcommand, and returns the
/// document plus exit code without touching the process streams.
inline RunResult run(const std::vector<std::string>& args) {
    using namespace detail;
    RunResult res;

    CLI::App app{"invariants of plane curve singularities in exact arithmetic"};
    app.require_subcommand(1);

    SpecFlags sf;
    std::string ideal_str, poly_str, alpha_str = "1/2", order_str = "ds", format = "json";
    std::string family_str = "es";
    std::uint64_t seed = 42;
    long budget_n = -1, max_degree = 256;

    auto add_common = [&](CLI::App* sub, bool with_spec, bool with_ideal, bool with_alpha) {
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--max-degree", max_degree, "standard-basis degree cap")
            ->check(CLI::PositiveNumber);
        if (with_spec) {
            sub->add_option("--type", sf.type, "singularity class")
                ->check(CLI::IsMember({"Ak", "Dk", "Ek", "Mk", "sqh"}));
            sub->add_option("--k", sf.k, "class index");
            sub->add_option("--weights", sf.weights, "weights P,Q for sqh");
            sub->add_option("--poly", sf.poly, "defining polynomial for sqh");
        }
        if (with_ideal) sub->add_option("--ideal", ideal_str, "comma-separated generators");
        if (with_alpha) sub->add_option("--alpha", alpha_str, "interpolation parameter in [0,1]");
        sub->add_option("--budget", budget_n, "random candidate budget");
        sub->add_option("--order", order_str, "local monomial ordering: ls, ds, or w:P,Q");
        sub->add_option("--family", family_str, "base ideal family")
            ->check(CLI::IsMember({"ea", "es"}));
    };

    CLI::App* c_inv = app.add_subcommand("invariants", "classical numerical invariants");
    add_common(c_inv, true, false, false);
    CLI::App* c_hil = app.add_subcommand("hilbert", "Hilbert-Samuel data of a local ideal");
    add_common(c_hil, true, true, false);
    CLI::App* c_gid = app.add_subcommand("gamma-ideal", "gamma for one given ideal");
    add_common(c_gid, false, true, true);
    c_gid->add_option("--poly", poly_str, "defining polynomial")->required();
    CLI::App* c_gse = app.add_subcommand("gamma-search", "maximize gamma over candidate ideals");
    add_common(c_gse, true, false, true);
    CLI::App* c_tau = app.add_subcommand("tau-ci", "largest complete-intersection colength");
    add_common(c_tau, true, false, false);
    CLI::App* c_ver = app.add_subcommand("verify-paper", "recheck every registered fact");
    add_common(c_ver, false, false, false);

    std::vector<const char*> argv;
    argv.push_back("gamma-sing");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        res.out = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 2;
        return res;
    }

    Json doc{{"schema", "gamma-sing/1"}};
    try {
        SearchBudget budget;
        budget.seed = seed;
        budget.max_cap = max_degree;
        if (budget_n >= 0) {
            budget.random_ideals = budget_n;
            budget.random_g = budget_n;
        }
        SbOptions opts{0, max_degree};
        IdealFamily family = family_str == "ea" ? IdealFamily::Ea : IdealFamily::Es;

        if (app.got_subcommand(c_inv)) {
            SingularitySpec spec = build_spec(sf);
            auto inv = invariant_record(spec, seed);
            doc["command"] = "invariants";
            doc["spec"] = spec_json(spec);
            doc["seed"] = seed;
            doc["result"] = Json{{"mu", inv.mu},
                                 {"tau", inv.tau},
                                 {"tau_es", inv.tau_es},
                                 {"kappa", inv.kappa},
                                 {"delta", inv.delta},
                                 {"branches", Json{{"count", inv.branches},
                                                   {"exact", inv.branches_exact}}}};
        } else if (app.got_subcommand(c_hil)) {
            MonomialOrdering ord = parse_order(order_str);
            doc["command"] = "hilbert";
            if (!ideal_str.empty() && !sf.type.empty())
                throw UsageError("give either --ideal or --type, not both");
            if (!ideal_str.empty()) {
                Ideal I(parse_generators(ideal_str), ord, opts);
                doc["input"] = Json{{"generators", polys_json(I.generators())},
                                    {"order", ord.name()}};
                doc["result"] = hilbert_json(I);
            } else if (!sf.type.empty()) {
                SingularitySpec spec = build_spec(sf);
                Ideal I = base_ideal(spec, family, opts).with_ordering(ord);
                doc["input"] = Json{{"spec", spec_json(spec)},
                                    {"family", family_str},
                                    {"order", ord.name()}};
                doc["result"] = hilbert_json(I);
            } else {
                throw UsageError("hilbert needs --ideal or --type");
            }
        } else if (app.got_subcommand(c_gid)) {
            Rational alpha = parse_alpha(alpha_str);
            Polynomial f = parse_polynomial(poly_str);
            Ideal I(parse_generators(ideal_str), parse_order(order_str), opts);
            auto rep = gamma_alpha_ideal(f, I, alpha, budget);
            doc["command"] = "gamma-ideal";
            doc["input"] = Json{{"poly", f.str()},
                                {"generators", polys_json(I.generators())},
                                {"order", I.ordering().name()},
                                {"seed", seed}};
            doc["result"] = gamma_report_json(rep, alpha);
        } else if (app.got_subcommand(c_gse)) {
            Rational alpha = parse_alpha(alpha_str);
            SingularitySpec spec = build_spec(sf);
            Ideal base = base_ideal(spec, family, opts);
            SearchResult sr = run_search(spec.f, base, &spec, budget);
            bool closed_known = family == IdealFamily::Es ||
                                spec.kind == SingularitySpec::Kind::A ||
                                spec.kind == SingularitySpec::Kind::D ||
                                spec.kind == SingularitySpec::Kind::E;
            ClosedForm cf =
                closed_known ? closed_form_gamma(spec, alpha) : ClosedForm::none();
            auto rep = gamma_from_search(spec.f, base, sr, alpha, cf);
            doc["command"] = "gamma-search";
            doc["input"] = Json{{"spec", spec_json(spec)},
                                {"family", family_str},
                                {"seed", seed},
                                {"candidates", static_cast<long>(sr.ideals.size())}};
            doc["result"] = gamma_report_json(rep, alpha);
        } else if (app.got_subcommand(c_tau)) {
            SingularitySpec spec = build_spec(sf);
            Ideal base = base_ideal(spec, family, opts);
            SearchResult sr = run_search(spec.f, base, &spec, budget);
            bool closed_known = family == IdealFamily::Es ||
                                spec.kind != SingularitySpec::Kind::M;
            auto rep = tau_from_search(sr, closed_known ? closed_form_tau_ci(spec)
                                                        : std::nullopt);
            doc["command"] = "tau-ci";
            doc["input"] = Json{{"spec", spec_json(spec)},
                                {"family", family_str},
                                {"seed", seed}};
            Json r{{"tau_ci", rep.tau_ci},
                   {"status", to_string(rep.status)},
                   {"witness", polys_json(rep.witness_ideal)}};
            r["closed_form"] = rep.closed_form ? Json(*rep.closed_form) : Json(nullptr);
            doc["result"] = std::move(r);
        } else if (app.got_subcommand(c_ver)) {
            auto rep = verify_paper(budget);
            Json checks = Json::array();
            for (const auto& c : rep.checks)
                checks.push_back(Json{{"name", c.name},
                                      {"pass", c.pass},
                                      {"expected", c.expected},
                                      {"actual", c.actual}});
            doc["command"] = "verify-paper";
            doc["seed"] = seed;
            doc["result"] = Json{{"checks", std::move(checks)},
                                 {"total", static_cast<long>(rep.checks.size())},
                                 {"failures", rep.failures},
                                 {"intersection_checks", rep.intersection_checks},
                                 {"complete_intersections_visited", rep.ci_visited}};
            if (rep.failures > 0) res.exit_code = 3;
        }
    } catch (const UsageError& e) {
        res.err = std::string("usage error: ") + e.what() + "\n";
        res.exit_code = 2;
        return res;
    } catch (const ParseError& e) {
        res.err = std::string("usage error: ") + e.what() + "\n";
        res.exit_code = 2;
        return res;
    } catch (const UnsupportedClass& e) {
        res.err = std::string("usage error: ") + e.what() + "\n";
        res.exit_code = 2;
        return res;
    } catch (const std::exception& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 1;
        return res;
    }

    res.out = format == "table" ? detail::render_table(doc) : doc.dump(2) + "\n";
    return res;
}

inline int main_entry(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    RunResult r = run(args);
    if (!r.out.empty()) std::fwrite(r.out.data(), 1, r.out.size(), stdout);
    if (!r.err.empty()) std::fwrite(r.err.data(), 1, r.err.size(), stderr);
    return r.exit_code;
}

}  // namespace gsing::cli
