#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "invariants.hpp"

namespace gsing {

struct SearchBudget {
    long random_ideals = 24;
    long random_g = 16;
    std::vector<long> coeffs{1, -1, 2, -2, 3, -3};
    std::uint64_t seed = 42;
    long max_cap = 256;
};

/// Known value (or proven bracket) for gamma of a registered class.
struct ClosedForm {
    enum class Kind { Exact, Interval, None };
    Kind kind = Kind::None;
    Rational exact;
    Rational lower;
    Rational upper;

    static ClosedForm none() { return {}; }
    static ClosedForm exactly(Rational v) {
        ClosedForm c;
        c.kind = Kind::Exact;
        c.exact = std::move(v);
        return c;
    }
    static ClosedForm between(Rational lo, Rational hi) {
        ClosedForm c;
        c.kind = Kind::Interval;
        c.lower = std::move(lo);
        c.upper = std::move(hi);
        return c;
    }
};

enum class GammaStatus { MatchesClosedForm, LowerBoundOnly, WithinUpperBound };

inline std::string to_string(GammaStatus s) {
    switch (s) {
        case GammaStatus::MatchesClosedForm: return "matches-closed-form";
        case GammaStatus::LowerBoundOnly: return "lower-bound-only";
        case GammaStatus::WithinUpperBound: return "within-upper-bound";
    }
    return "?";
}

inline Rational lambda_value(long i, long dim, const Rational& alpha) {
    Rational num = alpha * i + (1 - alpha) * dim;
    return num * num / (i - dim);
}

/// lambda_alpha(f; I, g) with the membership and finiteness preconditions
/// enforced.
inline Rational lambda_alpha(const Polynomial& f, const Ideal& I, const Polynomial& g,
                             const Rational& alpha) {
    if (!I.contains(g)) throw MembershipViolation("lambda: g is not a member of the ideal");
    auto i = intersection_multiplicity(f, g);
    if (!i) throw InfiniteIntersection("lambda: f and g share a component");
    long dim = I.colength();
    if (*i <= dim) throw Error("intersection number at most the colength; hypothesis violated");
    return lambda_value(*i, dim, alpha);
}

inline ClosedForm closed_form_gamma(const SingularitySpec& s, const Rational& alpha) {
    const long k = s.k;
    auto sq = [](const Rational& v) { return v * v; };
    switch (s.kind) {
        case SingularitySpec::Kind::A: return ClosedForm::exactly(sq(k + alpha));
        case SingularitySpec::Kind::D: {
            Rational cusp_branch = sq(k + 2 * alpha) / 2;
            Rational line_branch = sq(k - 2 + alpha);
            return ClosedForm::exactly(std::max(cusp_branch, line_branch));
        }
        case SingularitySpec::Kind::E: return ClosedForm::exactly(sq(k + 2 * alpha) / 2);
        case SingularitySpec::Kind::M:
            // M_2 is the plain node A_1.
            if (k == 2) return ClosedForm::exactly(sq(1 + alpha));
            return ClosedForm::exactly(2 * sq(k - 1 + alpha));
        case SingularitySpec::Kind::Sqh: {
            const long p = s.w.p, q = s.w.q;
            if (!(q > p && p >= 3)) return ClosedForm::none();
            Rational lower = Rational(q) * sq(p - 1 + alpha) / p;
            Rational upper;
            if (q < 2 * p)
                upper = 3 * sq(q - 1 + alpha);
            else if (q < 4 * p)
                upper = 2 * sq(q - 1 + alpha);
            else
                upper = sq(q - 1 + alpha);
            if (q >= 39) {
                Rational alt = 3 * sq(q - 2 + alpha);
                upper = std::min(upper, alt);
            }
            return ClosedForm::between(lower, upper);
        }
    }
    return ClosedForm::none();
}

/// Largest complete-intersection colength for the classes where it is known.
inline std::optional<long> closed_form_tau_ci(const SingularitySpec& s) {
    switch (s.kind) {
        case SingularitySpec::Kind::A:
        case SingularitySpec::Kind::D:
        case SingularitySpec::Kind::E:
            return s.k;
        case SingularitySpec::Kind::M:
            if (s.k == 2) return 1;
            if (s.k % 2 == 1) return (s.k + 1) * (s.k + 1) / 4;
            return (s.k * s.k + 2 * s.k) / 4;
        case SingularitySpec::Kind::Sqh: return std::nullopt;
    }
    return std::nullopt;
}

namespace detail {

/// Per-ideal evaluation data shared by every alpha: the colength and the
/// minimal admissible intersection number with its witness.
struct IdealEval {
    long dim = 0;
    std::optional<long> min_i;
    std::optional<Polynomial> witness_g;
    long tested = 0;
};

struct SearchContext {
    const Polynomial& f;
    Polynomial polar;                      // pencil element realizing kappa
    std::optional<std::optional<long>> ix; // cached i(f, x), i(f, y)
    std::optional<std::optional<long>> iy;
    std::map<std::string, std::optional<long>> icache;
    long intersection_checks = 0;

    explicit SearchContext(const Polynomial& f_, std::uint64_t seed) : f(f_) {
        polar = kappa_polar(f_, seed).first;
    }

    std::optional<long> inter(const Polynomial& g) {
        if (g.is_zero()) return std::nullopt;
        auto lt = g.leading_term(MonomialOrdering::ds());
        Polynomial norm = (Rational(1) / lt->second) * g;  // i is scaling-invariant
        std::string key = norm.str();
        auto it = icache.find(key);
        if (it != icache.end()) return it->second;
        auto v = intersection_multiplicity(f, norm);
        icache.emplace(std::move(key), v);
        return v;
    }

    std::optional<long> inter_x() {
        if (!ix) ix = inter(Polynomial::variable_x());
        return *ix;
    }
    std::optional<long> inter_y() {
        if (!iy) iy = inter(Polynomial::variable_y());
        return *iy;
    }
};

/// Evaluates the candidate-g stream for one ideal: the kappa polar, the
/// reduced standard basis, coefficient combinations of basis pairs, seeded
/// random combinations, and monomial multiples (their intersection numbers
/// come from additivity, i(f, m*g) = a*i(f,x) + b*i(f,y) + i(f,g)).
inline IdealEval evaluate_ideal(SearchContext& ctx, const Ideal& I, const SearchBudget& budget) {
    IdealEval ev;
    ev.dim = I.colength();

    auto consider = [&](const Polynomial& g, std::optional<long> iknown) {
        ++ev.tested;
        std::optional<long> i = iknown ? iknown : ctx.inter(g);
        if (!i) return;
        ++ctx.intersection_checks;
        if (*i <= ev.dim)
            throw Error("intersection number " + std::to_string(*i) +
                        " at most colength " + std::to_string(ev.dim) + "; engine bug");
        if (*i > 2 * ev.dim) return;
        if (!ev.min_i || *i < *ev.min_i) {
            ev.min_i = *i;
            ev.witness_g = g;
        }
    };

    const auto& sb = I.standard_basis();
    consider(ctx.polar, std::nullopt);
    for (const auto& g : sb) consider(g, std::nullopt);
    for (std::size_t i = 0; i < sb.size(); ++i)
        for (std::size_t j = i + 1; j < sb.size(); ++j)
            for (long c1 : budget.coeffs)
                for (long c2 : budget.coeffs) consider(c1 * sb[i] + c2 * sb[j], std::nullopt);
    if (sb.size() > 1) {
        Prng rng(budget.seed + 1);
        for (long t = 0; t < budget.random_g; ++t) {
            std::size_t i = static_cast<std::size_t>(rng.next_in(0, sb.size() - 1));
            std::size_t j = static_cast<std::size_t>(rng.next_in(0, sb.size() - 1));
            Rational c1 = rng.next_rational(9);
            Rational c2 = rng.next_rational(9);
            consider(c1 * sb[i] + c2 * sb[j], std::nullopt);
        }
    }
    std::vector<const Polynomial*> bases;
    bases.push_back(&ctx.polar);
    for (const auto& g : sb) bases.push_back(&g);
    long db = I.degbound();
    for (const Polynomial* g : bases) {
        auto ig = ctx.inter(*g);
        if (!ig) continue;
        for (long d = 1; d <= db; ++d)
            for (long a = d; a >= 0; --a) {
                long b = d - a;
                std::optional<long> im = ig;
                if (a > 0) {
                    auto ix = ctx.inter_x();
                    if (!ix) { im = std::nullopt; } else { *im += a * *ix; }
                }
                if (im && b > 0) {
                    auto iy = ctx.inter_y();
                    if (!iy) { im = std::nullopt; } else { *im += b * *iy; }
                }
                if (!im) continue;
                consider(g->times_term({a, b}, Rational(1)), im);
            }
    }
    return ev;
}

struct IdealSummary {
    Ideal ideal;
    IdealEval eval;
};

}  // namespace detail

/// Everything one pass over the candidate-ideal stream learns about a base
/// ideal; gamma and tau reports for any alpha are read off this.
struct SearchResult {
    std::vector<detail::IdealSummary> ideals;
    long ci_visited = 0;
    long intersection_checks = 0;
};

namespace detail {

inline std::optional<Ideal> admit_candidate(std::vector<Polynomial> gens, const Ideal& base,
                                            const SearchBudget& budget, long* ci_counter) {
    try {
        Ideal I(std::move(gens), MonomialOrdering::ds(), SbOptions{0, budget.max_cap});
        if (I.colength() < 1) return std::nullopt;
        if (!I.contains_ideal(base)) return std::nullopt;
        if (!I.is_complete_intersection()) return std::nullopt;
        ++*ci_counter;
        if (I.colength() > I.deg_fp_bound())
            throw Error("complete intersection exceeds (degbound-mult+1)*mult; engine bug");
        return I;
    } catch (const NotZeroDimensional&) {
        return std::nullopt;
    }
}

/// Candidate complete intersections containing `base`: the base itself, all
/// admissible monomial ideals <x^a, y^b>, the registered parametric family
/// for weighted-homogeneous classes with integer slope (binomial first
/// generator y - c*x^(q/p)), and seeded random two-generator ideals drawn
/// from a pool of basis elements, monomials, and binomials.
inline std::vector<Ideal> candidate_ideals(const Ideal& base, const SingularitySpec* spec,
                                           const SearchBudget& budget, long* ci_counter) {
    std::vector<Ideal> out;
    std::set<std::string> seen;
    auto push = [&](std::vector<Polynomial> gens) {
        auto I = admit_candidate(std::move(gens), base, budget, ci_counter);
        if (I && seen.insert(I->key()).second) out.push_back(std::move(*I));
    };

    long db = base.degbound();
    push(base.generators());
    for (long a = 1; a <= db + 1; ++a)
        for (long b = 1; b <= db + 1; ++b)
            push({Polynomial::monomial({a, 0}), Polynomial::monomial({0, b})});

    if (spec && spec->kind == SingularitySpec::Kind::Sqh && spec->w.q % spec->w.p == 0) {
        long s = spec->w.q / spec->w.p;
        for (long c : budget.coeffs)
            for (long a = 2; a <= db + 1; ++a)
                push({Polynomial::variable_y() - Rational(c) * Polynomial::monomial({s, 0}),
                      Polynomial::monomial({a, 0})});
    }

    std::vector<Polynomial> pool = base.standard_basis();
    for (long d = 1; d <= db + 1; ++d)
        for (long a = d; a >= 0; --a) pool.push_back(Polynomial::monomial({a, d - a}));
    for (long a = 1; a <= db + 1; ++a)
        for (long b = 1; b <= db + 1; ++b) {
            Polynomial xa = Polynomial::monomial({a, 0}), yb = Polynomial::monomial({0, b});
            pool.push_back(xa - yb);
            pool.push_back(xa + yb);
        }
    Prng rng(budget.seed);
    auto draw = [&]() {
        Rational c = rng.next_coeff(3);
        std::size_t i = static_cast<std::size_t>(rng.next_in(0, pool.size() - 1));
        Rational c2 = rng.next_coeff(3);
        std::size_t j = static_cast<std::size_t>(rng.next_in(0, pool.size() - 1));
        return c * pool[i] + c2 * pool[j];
    };
    for (long t = 0; t < budget.random_ideals; ++t) {
        Polynomial g1 = draw(), g2 = draw();
        if (g1.is_zero() || g2.is_zero()) continue;
        push({g1, g2});
    }
    return out;
}

}  // namespace detail

inline SearchResult run_search(const Polynomial& f, const Ideal& base,
                               const SingularitySpec* spec, const SearchBudget& budget) {
    SearchResult res;
    detail::SearchContext ctx(f, budget.seed);
    for (auto& I : detail::candidate_ideals(base, spec, budget, &res.ci_visited)) {
        detail::IdealEval ev = detail::evaluate_ideal(ctx, I, budget);
        res.ideals.push_back({std::move(I), std::move(ev)});
    }
    res.intersection_checks = ctx.intersection_checks;
    return res;
}

struct GammaReport {
    Rational gamma;
    std::vector<Polynomial> witness_ideal;  // reduced standard basis
    long witness_dim = 0;
    std::optional<Polynomial> witness_g;
    std::optional<long> witness_i;
    std::optional<Rational> lambda;
    ClosedForm closed_form;
    GammaStatus status = GammaStatus::LowerBoundOnly;
};

namespace detail {

inline Rational ideal_gamma(const IdealEval& ev, const Rational& alpha) {
    Rational best = (1 + alpha) * (1 + alpha) * ev.dim;
    if (ev.min_i) best = std::max(best, lambda_value(*ev.min_i, ev.dim, alpha));
    return best;
}

inline GammaStatus grade(const Rational& value, const ClosedForm& cf) {
    switch (cf.kind) {
        case ClosedForm::Kind::Exact:
            if (value > cf.exact) throw Error("search exceeded a registered closed form");
            return value == cf.exact ? GammaStatus::MatchesClosedForm
                                     : GammaStatus::LowerBoundOnly;
        case ClosedForm::Kind::Interval:
            if (value > cf.upper) throw Error("search exceeded a registered upper bound");
            if (value == cf.upper) return GammaStatus::MatchesClosedForm;
            return value >= cf.lower ? GammaStatus::WithinUpperBound
                                     : GammaStatus::LowerBoundOnly;
        case ClosedForm::Kind::None: return GammaStatus::LowerBoundOnly;
    }
    return GammaStatus::LowerBoundOnly;
}

}  // namespace detail

/// Turns a finished search into the gamma report for one alpha, re-verifying
/// the winning witness from scratch.
inline GammaReport gamma_from_search(const Polynomial& f, const Ideal& base,
                                     const SearchResult& res, const Rational& alpha,
                                     const ClosedForm& cf) {
    GammaReport rep;
    rep.closed_form = cf;
    if (res.ideals.empty()) {
        rep.gamma = 0;
        rep.status = detail::grade(rep.gamma, cf);
        return rep;
    }
    const detail::IdealSummary* best = nullptr;
    Rational best_value;
    for (const auto& s : res.ideals) {
        Rational v = detail::ideal_gamma(s.eval, alpha);
        if (!best || v > best_value) {
            best = &s;
            best_value = v;
        }
    }
    rep.gamma = best_value;
    rep.witness_ideal = best->ideal.standard_basis();
    rep.witness_dim = best->eval.dim;

    // Independent re-verification of the reported witness.
    if (!best->ideal.contains_ideal(base))
        throw Error("winning ideal fails containment on re-check");
    if (!best->ideal.is_complete_intersection())
        throw Error("winning ideal fails the complete-intersection re-check");
    bool lambda_wins =
        best->eval.min_i &&
        lambda_value(*best->eval.min_i, best->eval.dim, alpha) >= (1 + alpha) * (1 + alpha) * best->eval.dim;
    if (lambda_wins) {
        rep.witness_g = best->eval.witness_g;
        rep.witness_i = best->eval.min_i;
        rep.lambda = lambda_alpha(f, best->ideal, *rep.witness_g, alpha);
        if (*rep.lambda != lambda_value(*best->eval.min_i, best->eval.dim, alpha))
            throw Error("witness re-evaluation disagrees with the search value");
    }
    rep.status = detail::grade(rep.gamma, cf);
    return rep;
}

struct TauReport {
    long tau_ci = 0;
    std::vector<Polynomial> witness_ideal;
    std::optional<long> closed_form;
    GammaStatus status = GammaStatus::LowerBoundOnly;
};

inline TauReport tau_from_search(const SearchResult& res, std::optional<long> closed) {
    TauReport rep;
    rep.closed_form = closed;
    const detail::IdealSummary* best = nullptr;
    for (const auto& s : res.ideals)
        if (!best || s.eval.dim > best->eval.dim) best = &s;
    if (best) {
        rep.tau_ci = best->eval.dim;
        rep.witness_ideal = best->ideal.standard_basis();
    }
    if (closed) {
        if (rep.tau_ci > *closed) throw Error("tau search exceeded the registered closed form");
        rep.status = rep.tau_ci == *closed ? GammaStatus::MatchesClosedForm
                                           : GammaStatus::LowerBoundOnly;
    }
    return rep;
}

/// One-shot gamma evaluation for a user-supplied ideal (no closed form).
inline GammaReport gamma_alpha_ideal(const Polynomial& f, const Ideal& I, const Rational& alpha,
                                     const SearchBudget& budget) {
    if (I.colength() < 1) throw MembershipViolation("gamma: the ideal is the whole ring");
    if (!I.contains_ideal(tjurina_ideal(f)))
        throw MembershipViolation("gamma: the ideal does not contain <f_x, f_y, f>");
    detail::SearchContext ctx(f, budget.seed);
    detail::IdealEval ev = detail::evaluate_ideal(ctx, I, budget);
    GammaReport rep;
    rep.gamma = detail::ideal_gamma(ev, alpha);
    rep.witness_ideal = I.standard_basis();
    rep.witness_dim = ev.dim;
    if (ev.min_i && lambda_value(*ev.min_i, ev.dim, alpha) >= (1 + alpha) * (1 + alpha) * ev.dim) {
        rep.witness_g = ev.witness_g;
        rep.witness_i = ev.min_i;
        rep.lambda = lambda_alpha(f, I, *ev.witness_g, alpha);
    }
    rep.status = GammaStatus::LowerBoundOnly;
    return rep;
}

struct SandwichReport {
    Rational gamma;
    long tau_ci = 0;
    long kappa = 0;
    Rational lower;   // (1+alpha)^2 * tau_ci
    Rational upper;   // (tau_ci + alpha)^2
    bool strict_applicable = false;
    bool ok = false;
    bool strict_ok = true;
};

inline SandwichReport sandwich_from(const GammaReport& g, const TauReport& t, long kappa_v,
                                    const Rational& alpha) {
    SandwichReport s;
    s.gamma = g.gamma;
    s.tau_ci = t.tau_ci;
    s.kappa = kappa_v;
    s.lower = (1 + alpha) * (1 + alpha) * s.tau_ci;
    Rational base = s.tau_ci + alpha;
    s.upper = base * base;
    s.ok = s.lower <= s.gamma && s.gamma <= s.upper;
    s.strict_applicable = kappa_v < 2 * s.tau_ci;
    if (s.strict_applicable) s.strict_ok = s.lower < s.gamma;
    return s;
}

}  // namespace gsing
