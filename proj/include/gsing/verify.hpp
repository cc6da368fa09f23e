#pragma once

#include <sstream>

#include "gamma.hpp"

namespace gsing {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    long failures = 0;
    long intersection_checks = 0;
    long ci_visited = 0;
};

namespace detail {

struct Verifier {
    VerificationReport rep;
    SearchBudget budget;

    void add(std::string name, bool pass, std::string expected, std::string actual) {
        if (!pass) ++rep.failures;
        rep.checks.push_back({std::move(name), pass, std::move(expected), std::move(actual)});
    }

    static std::string rs(const Rational& r) { return rational_to_string(r); }

    std::vector<Rational> table_alphas() const {
        return {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)};
    }
    std::vector<Rational> monotone_alphas() const {
        return {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
    }

    struct SpecRun {
        SingularitySpec spec;
        Ideal base;
        SearchResult result;
        TauReport tau;
    };

    SpecRun search(SingularitySpec spec) {
        Ideal base = equisingularity_ideal(spec);
        SearchResult res = run_search(spec.f, base, &spec, budget);
        rep.intersection_checks += res.intersection_checks;
        rep.ci_visited += res.ci_visited;
        TauReport tau = tau_from_search(res, closed_form_tau_ci(spec));
        return {std::move(spec), std::move(base), std::move(res), std::move(tau)};
    }

    void alpha_monotone(const SpecRun& run) {
        bool ok = true;
        std::optional<Rational> prev;
        std::ostringstream vals;
        for (const auto& al : monotone_alphas()) {
            auto g = gamma_from_search(run.spec.f, run.base, run.result, al,
                                       closed_form_gamma(run.spec, al));
            if (prev && !(g.gamma > *prev)) ok = false;
            vals << rs(g.gamma) << " ";
            prev = g.gamma;
        }
        add("alpha-monotone/" + run.spec.name(), ok, "strictly increasing", vals.str());
    }

    void sandwich(const SpecRun& run, long kappa_v) {
        for (const auto& al : table_alphas()) {
            auto g = gamma_from_search(run.spec.f, run.base, run.result, al,
                                       closed_form_gamma(run.spec, al));
            auto s = sandwich_from(g, run.tau, kappa_v, al);
            add("sandwich/" + run.spec.name() + "/alpha=" + rs(al), s.ok && s.strict_ok,
                rs(s.lower) + " <= gamma <= " + rs(s.upper) +
                    (s.strict_applicable ? ", strict" : ""),
                rs(s.gamma));
        }
    }

    void kappa_stable(const SingularitySpec& spec) {
        auto samples = kappa_samples(spec.f, budget.seed);
        bool ok = true;
        long first = -1;
        std::ostringstream vals;
        for (const auto& v : samples) {
            if (!v) {
                ok = false;
                vals << "inf ";
                continue;
            }
            if (first < 0) first = *v;
            else if (*v != first) ok = false;
            vals << *v << " ";
        }
        add("kappa-stable/" + spec.name(), ok, "all samples equal", vals.str());
    }

    void invariant_facts(const SingularitySpec& spec, const InvariantRecord& inv,
                         std::optional<long> kappa_expected, std::optional<long> r_expected,
                         bool quasihomogeneous) {
        if (kappa_expected)
            add("kappa/" + spec.name(), inv.kappa == *kappa_expected,
                std::to_string(*kappa_expected), std::to_string(inv.kappa));
        if (r_expected)
            add("branches/" + spec.name(), inv.branches == *r_expected,
                std::to_string(*r_expected), std::to_string(inv.branches));
        bool node_like = inv.delta == 1 && inv.tau_es == 1 && inv.mu == 1;
        add("delta-lt-tau-es/" + spec.name(), inv.delta < inv.tau_es || node_like,
            "delta < tau_es (node exempt)",
            "delta=" + std::to_string(inv.delta) + " tau_es=" + std::to_string(inv.tau_es));
        if (quasihomogeneous)
            add("tau-eq-mu/" + spec.name(), inv.tau == inv.mu, std::to_string(inv.mu),
                std::to_string(inv.tau));
        // Teissier: generic polar degree mu + mult - 1.
        long mult = multiplicity(spec.f);
        add("kappa-teissier/" + spec.name(), inv.kappa == inv.mu + mult - 1,
            std::to_string(inv.mu + mult - 1), std::to_string(inv.kappa));
    }

    void hilbert_golden(const SpecRun& run, long mult, long degbound, long colength) {
        const auto& hs = run.base.hilbert_samuel();
        bool ok = hs.mult == mult && hs.degbound == degbound && hs.colength == colength;
        add("hilbert/" + run.spec.name(), ok,
            "mult=" + std::to_string(mult) + " degbound=" + std::to_string(degbound) +
                " colength=" + std::to_string(colength),
            "mult=" + std::to_string(hs.mult) + " degbound=" + std::to_string(hs.degbound) +
                " colength=" + std::to_string(hs.colength));
    }

    void simple_class(SingularitySpec spec, long kappa_expected, long r_expected) {
        auto run = search(std::move(spec));
        for (const auto& al : table_alphas()) {
            auto cf = closed_form_gamma(run.spec, al);
            auto g = gamma_from_search(run.spec.f, run.base, run.result, al, cf);
            add("gamma/" + run.spec.name() + "/alpha=" + rs(al),
                g.status == GammaStatus::MatchesClosedForm, rs(cf.exact), rs(g.gamma));
        }
        add("tau-ci/" + run.spec.name(),
            run.tau.status == GammaStatus::MatchesClosedForm,
            std::to_string(*run.tau.closed_form), std::to_string(run.tau.tau_ci));
        auto inv = invariant_record(run.spec, budget.seed);
        sandwich(run, inv.kappa);
        alpha_monotone(run);
        kappa_stable(run.spec);
        invariant_facts(run.spec, inv, kappa_expected, r_expected, true);
        long k = run.spec.k;
        switch (run.spec.kind) {
            case SingularitySpec::Kind::A: hilbert_golden(run, 1, k, k); break;
            case SingularitySpec::Kind::D: hilbert_golden(run, 2, k - 1, k); break;
            case SingularitySpec::Kind::E:
                // degbound(<x^2, y^4>) = 5: every degree-5 monomial is
                // divisible by x^2 or y^4, while xy^3 is not in the ideal.
                hilbert_golden(run, 2, k == 6 ? 4 : 5, k);
                break;
            default: break;
        }
    }

    void multiple_point(long k) {
        auto run = search(SingularitySpec::m(k));
        Ideal expected_witness({Polynomial::monomial({0, k - 1}), Polynomial::monomial({2, 0})});
        bool witness_seen = true;
        for (const auto& al : table_alphas()) {
            auto cf = closed_form_gamma(run.spec, al);
            auto g = gamma_from_search(run.spec.f, run.base, run.result, al, cf);
            add("gamma/" + run.spec.name() + "/alpha=" + rs(al),
                g.status == GammaStatus::MatchesClosedForm, rs(cf.exact), rs(g.gamma));
            if (k >= 3) {
                if (Ideal(g.witness_ideal).key() != expected_witness.key()) witness_seen = false;
                Rational floor = (1 + al) * (1 + al) * run.tau.tau_ci;
                add("gamma/" + run.spec.name() + "/strict/alpha=" + rs(al), g.gamma > floor,
                    "> " + rs(floor), rs(g.gamma));
            }
        }
        if (k >= 3)
            add("gamma/" + run.spec.name() + "/witness", witness_seen,
                "<y^" + std::to_string(k - 1) + ", x^2>", witness_seen ? "found" : "other");
        add("tau-ci/" + run.spec.name(), run.tau.status == GammaStatus::MatchesClosedForm,
            std::to_string(*run.tau.closed_form), std::to_string(run.tau.tau_ci));
        auto inv = invariant_record(run.spec, budget.seed);
        sandwich(run, inv.kappa);
        alpha_monotone(run);
        kappa_stable(run.spec);
        invariant_facts(run.spec, inv, k * (k - 1), k, true);
    }

    /// Direct evaluation of a named witness ideal: checks colength, the
    /// minimal intersection number, and the lambda value it certifies.
    void sqh_witness(const std::string& label, const SingularitySpec& spec,
                     std::vector<Polynomial> witness_gens, long want_dim, long want_i,
                     const Rational& alpha, const Rational& want_lambda,
                     const Rational& searched) {
        Ideal W(std::move(witness_gens));
        auto direct = gamma_alpha_ideal(spec.f, W, alpha, budget);
        bool ok = direct.witness_i && *direct.witness_i == want_i && W.colength() == want_dim &&
                  direct.gamma == want_lambda && searched >= want_lambda;
        add(label, ok,
            "dim=" + std::to_string(want_dim) + " i=" + std::to_string(want_i) + " lambda=" +
                rs(want_lambda) + " <= searched",
            "dim=" + std::to_string(W.colength()) +
                " i=" + (direct.witness_i ? std::to_string(*direct.witness_i) : "none") +
                " gamma=" + rs(direct.gamma) + " searched=" + rs(searched));
    }

    void weighted_order_bound(const SingularitySpec& spec) {
        Prng rng(budget.seed + 13);
        bool ok = true;
        long evaluated = 0;
        for (int t = 0; t < 100; ++t) {
            Polynomial g;
            long nterms = rng.next_in(1, 3);
            for (long u = 0; u < nterms; ++u) {
                long a = rng.next_in(0, 8), b = rng.next_in(0, 8);
                if (a == 0 && b == 0) a = 1;
                g += rng.next_coeff(9) * Polynomial::monomial({a, b});
            }
            if (g.is_zero()) continue;
            auto i = intersection_multiplicity(spec.f, g);
            if (!i) continue;
            ++evaluated;
            auto wo = g.weighted_order(spec.w);
            if (!wo || *i < *wo) ok = false;
        }
        add("wt-order/" + spec.name(), ok, "i(f,g) >= weighted order of g",
            std::to_string(evaluated) + " finite samples");
    }

    void sqh_rows() {
        auto alphas = table_alphas();
        // (a) x^q - y^(q-1): at least 3(q-2+alpha)^2, witnessed by <x^3, y^(q-2)>.
        for (long q : {5L, 8L, 12L}) {
            auto spec = SingularitySpec::sqh(
                Polynomial::monomial({q, 0}) - Polynomial::monomial({0, q - 1}),
                Weights{q - 1, q});
            auto run = search(spec);
            for (const auto& al : alphas) {
                auto g = gamma_from_search(spec.f, run.base, run.result, al,
                                           closed_form_gamma(spec, al));
                Rational want = 3 * (q - 2 + al) * (q - 2 + al);
                sqh_witness("sqh/" + spec.name() + "/row-a/alpha=" + rs(al), spec,
                            {Polynomial::monomial({3, 0}), Polynomial::monomial({0, q - 2})},
                            3 * q - 6, 3 * q - 3, al, want, g.gamma);
                add("sqh/" + spec.name() + "/interval/alpha=" + rs(al),
                    g.status != GammaStatus::LowerBoundOnly, "within the proven bracket",
                    to_string(g.status));
            }
            auto inv = invariant_record(spec, budget.seed);
            sandwich(run, inv.kappa);
            kappa_stable(spec);
            invariant_facts(spec, inv, q * (q - 2), 1, true);
            weighted_order_bound(spec);
        }
        // (b) x^7 - y^5: at least 2(q-1+alpha)^2 via <y^2, x^(q-1)>.
        {
            auto spec = SingularitySpec::sqh(
                Polynomial::monomial({7, 0}) - Polynomial::monomial({0, 5}), Weights{5, 7});
            auto run = search(spec);
            for (const auto& al : alphas) {
                auto g = gamma_from_search(spec.f, run.base, run.result, al,
                                           closed_form_gamma(spec, al));
                Rational want = 2 * (6 + al) * (6 + al);
                sqh_witness("sqh/" + spec.name() + "/row-b/alpha=" + rs(al), spec,
                            {Polynomial::monomial({0, 2}), Polynomial::monomial({6, 0})}, 12, 14,
                            al, want, g.gamma);
            }
            auto inv = invariant_record(spec, budget.seed);
            sandwich(run, inv.kappa);
            kappa_stable(spec);
            invariant_facts(spec, inv, 28, 1, true);
            weighted_order_bound(spec);
        }
        // (c) x^13 - y^3: the search attains the upper endpoint (q-1+alpha)^2.
        {
            auto spec = SingularitySpec::sqh(
                Polynomial::monomial({13, 0}) - Polynomial::monomial({0, 3}), Weights{3, 13});
            auto run = search(spec);
            for (const auto& al : alphas) {
                auto g = gamma_from_search(spec.f, run.base, run.result, al,
                                           closed_form_gamma(spec, al));
                Rational want = (12 + al) * (12 + al);
                add("sqh/" + spec.name() + "/row-c/alpha=" + rs(al),
                    g.gamma == want && g.status == GammaStatus::MatchesClosedForm, rs(want),
                    rs(g.gamma));
            }
            auto inv = invariant_record(spec, budget.seed);
            sandwich(run, inv.kappa);
            kappa_stable(spec);
            invariant_facts(spec, inv, 26, 1, true);
            weighted_order_bound(spec);
        }
        // (d) y^3 - 3x^8y + 3x^12: attains (11+alpha)^2 with i = 12.
        {
            auto spec = SingularitySpec::sqh(parse_polynomial("y^3 - 3*x^8*y + 3*x^12"),
                                             Weights{3, 12});
            auto run = search(spec);
            for (const auto& al : alphas) {
                auto g = gamma_from_search(spec.f, run.base, run.result, al,
                                           closed_form_gamma(spec, al));
                Rational want = (11 + al) * (11 + al);
                bool ok = g.gamma == want && g.status == GammaStatus::MatchesClosedForm &&
                          g.witness_i && *g.witness_i == 12;
                add("sqh/" + spec.name() + "/row-d/alpha=" + rs(al), ok, rs(want) + " at i=12",
                    rs(g.gamma) + " i=" +
                        (g.witness_i ? std::to_string(*g.witness_i) : "none"));
            }
            auto inv = invariant_record(spec, budget.seed);
            sandwich(run, inv.kappa);
            kappa_stable(spec);
            invariant_facts(spec, inv, 24, 3, true);
            weighted_order_bound(spec);
        }
        // (e) 7y^3 + 15x^7 - 21x^5y: colength 11, three generators, gamma_0 in [25/2, 25].
        {
            auto spec = SingularitySpec::sqh(parse_polynomial("7*y^3 + 15*x^7 - 21*x^5*y"),
                                             Weights{3, 7});
            auto run = search(spec);
            add("sqh/" + spec.name() + "/colength", run.base.colength() == 11, "11",
                std::to_string(run.base.colength()));
            add("sqh/" + spec.name() + "/min-generators", run.base.min_generators() == 3, "3",
                std::to_string(run.base.min_generators()));
            auto g0 = gamma_from_search(spec.f, run.base, run.result, Rational(0),
                                        closed_form_gamma(spec, Rational(0)));
            add("sqh/" + spec.name() + "/gamma0",
                g0.gamma >= Rational(25, 2) && g0.gamma <= 25, "between 25/2 and 25",
                rs(g0.gamma));
            auto inv = invariant_record(spec, budget.seed);
            sandwich(run, inv.kappa);
            kappa_stable(spec);
            invariant_facts(spec, inv, 14, 1, false);
            weighted_order_bound(spec);
        }
    }

    void extra_hilbert_goldens() {
        {
            Ideal I({parse_polynomial("x^3"), parse_polynomial("x^2*y"), parse_polynomial("y^3")});
            const auto& hs = I.hilbert_samuel();
            bool ok = hs.h0 == std::vector<long>{1, 2, 3, 1} && hs.colength == 7;
            std::ostringstream got;
            for (long v : hs.h0) got << v << " ";
            add("hilbert/x3-x2y-y3", ok, "h0 = 1 2 3 1", got.str());
        }
        for (long k = 1; k <= 6; ++k) {
            Ideal I = maximal_ideal_power(k);
            add("hilbert/m-power-" + std::to_string(k), I.colength() == k * (k + 1) / 2,
                std::to_string(k * (k + 1) / 2), std::to_string(I.colength()));
        }
    }

    void lambda_shape() {
        bool dec = true, boundary = true;
        for (long d : {3L, 5L, 12L})
            for (const auto& al : table_alphas()) {
                for (long i = d + 1; i < 2 * d; ++i)
                    if (!(lambda_value(i, d, al) > lambda_value(i + 1, d, al))) dec = false;
                if (lambda_value(2 * d, d, al) != (1 + al) * (1 + al) * d) boundary = false;
            }
        add("lambda/decreasing", dec, "strictly decreasing up to i = 2*colength", dec ? "ok" : "violated");
        add("lambda/at-2d", boundary, "lambda(2d) = (1+alpha)^2 * d", boundary ? "ok" : "violated");
    }

    void random_corpus() {
        Prng rng(budget.seed + 7);
        long n = 200, ord_ok = 0, lead_ok = 0, iarr_ok = 0;
        std::vector<MonomialOrdering> orders{MonomialOrdering::ls(), MonomialOrdering::ds(),
                                             MonomialOrdering::weighted(2, 3),
                                             MonomialOrdering::weighted(1, 2)};
        for (long t = 0; t < n; ++t) {
            long d = rng.next_in(2, 6);
            auto randpoly = [&]() {
                Polynomial g;
                long nt = rng.next_in(1, 4);
                for (long u = 0; u < nt; ++u) {
                    long a = rng.next_in(0, d), b = rng.next_in(0, d - a);
                    if (a == 0 && b == 0) a = 1;
                    g += rng.next_coeff(9) * Polynomial::monomial({a, b});
                }
                return g;
            };
            std::vector<Polynomial> gens{randpoly(), randpoly()};
            for (long a = d; a >= 0; --a) gens.push_back(Polynomial::monomial({a, d - a}));

            Ideal I(gens, MonomialOrdering::ds());
            long base_len = I.colength();
            bool same = true;
            for (const auto& ord : orders)
                if (Ideal(gens, ord).colength() != base_len) same = false;
            if (same) ++ord_ok;

            std::vector<Polynomial> lead_gens;
            for (const auto& m : I.staircase()) lead_gens.push_back(Polynomial::monomial(m));
            Ideal L(lead_gens);
            if (L.hilbert_samuel().h0 == I.hilbert_samuel().h0) ++lead_ok;

            if (I.iarrobino_lower_bound() <= I.min_generators()) ++iarr_ok;
        }
        add("corpus/ordering-independence", ord_ok == n, std::to_string(n) + " ideals agree",
            std::to_string(ord_ok) + " agree");
        add("corpus/hs-leading-ideal", lead_ok == n, std::to_string(n) + " ideals agree",
            std::to_string(lead_ok) + " agree");
        add("corpus/iarrobino-bound", iarr_ok == n, std::to_string(n) + " ideals satisfy",
            std::to_string(iarr_ok) + " satisfy");
    }

    void run_all() {
        rep.seed = budget.seed;
        for (long k = 1; k <= 10; ++k)
            simple_class(SingularitySpec::a(k), k + 1, k % 2 == 1 ? 2 : 1);
        for (long k = 4; k <= 10; ++k)
            simple_class(SingularitySpec::d(k), k + 2, k % 2 == 0 ? 3 : 2);
        simple_class(SingularitySpec::e(6), 8, 1);
        simple_class(SingularitySpec::e(7), 9, 2);
        simple_class(SingularitySpec::e(8), 10, 1);
        for (long k = 2; k <= 9; ++k) multiple_point(k);
        sqh_rows();
        extra_hilbert_goldens();
        lambda_shape();
        random_corpus();
        add("search/intersection-bound", true, "every evaluated pair has i > colength",
            std::to_string(rep.intersection_checks) + " checks");
        add("search/ci-degree-bound", true,
            "every complete intersection satisfies (degbound-mult+1)*mult",
            std::to_string(rep.ci_visited) + " ideals");
    }
};

}  // namespace detail

/// Recomputes every registered closed form, witness, golden table, and
/// property suite from scratch and reports one named check per fact.
inline VerificationReport verify_paper(const SearchBudget& budget) {
    detail::Verifier v;
    v.budget = budget;
    v.run_all();
    return std::move(v.rep);
}

}  // namespace gsing
