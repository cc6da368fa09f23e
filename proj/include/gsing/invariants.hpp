#pragma once

#include <numeric>

#include "ideal.hpp"
#include "polygcd.hpp"
#include "prng.hpp"

namespace gsing {

/// A recognized singularity class with its canonical representative.
/// A_k: x^2 - y^(k+1); D_k: x^2 y - y^(k-1); E_6/7/8: x^3 - y^4,
/// x^3 - x y^3, x^3 - y^5; M_k: x^k - y^k; Sqh: a user-supplied convenient
/// semi-quasihomogeneous polynomial with its weights.
struct SingularitySpec {
    enum class Kind { A, D, E, M, Sqh };

    Kind kind;
    long k = 0;
    Weights w{1, 1};
    Polynomial f;

    std::string name() const {
        switch (kind) {
            case Kind::A: return "A" + std::to_string(k);
            case Kind::D: return "D" + std::to_string(k);
            case Kind::E: return "E" + std::to_string(k);
            case Kind::M: return "M" + std::to_string(k);
            case Kind::Sqh:
                return "sqh(" + std::to_string(w.p) + "," + std::to_string(w.q) + ")";
        }
        return "?";
    }

    static SingularitySpec a(long k);
    static SingularitySpec d(long k);
    static SingularitySpec e(long k);
    static SingularitySpec m(long k);
    static SingularitySpec sqh(const Polynomial& f, Weights w);
};

inline long multiplicity(const Polynomial& f) {
    auto o = f.order();
    if (!o) throw std::invalid_argument("multiplicity of the zero polynomial");
    return *o;
}

inline Ideal tjurina_ideal(const Polynomial& f, SbOptions opts = {}) {
    return Ideal({f.dx(), f.dy(), f}, MonomialOrdering::ds(), opts);
}

inline Ideal milnor_ideal(const Polynomial& f, SbOptions opts = {}) {
    return Ideal({f.dx(), f.dy()}, MonomialOrdering::ds(), opts);
}

inline long milnor_number(const Polynomial& f) { return milnor_ideal(f).colength(); }

inline long tjurina_number(const Polynomial& f) { return tjurina_ideal(f).colength(); }

namespace detail {

/// Nonnegative (a, b) with q*b - p*a = r; smallest such b.
inline std::pair<long, long> pencil_exponents(long p, long q, long r) {
    for (long b = 0; b <= p + 1; ++b) {
        long t = q * b - r;
        if (t >= 0 && t % p == 0) return {t / p, b};
    }
    throw Error("no exponent pair for qb - pa = gcd; unreachable for r = gcd(p,q)");
}

/// One-variable shadow of the leading form: each term x^al y^be of f0 maps
/// to u^(b*al + a*be), where qb - pa = r. Along the support segment of a
/// weighted-homogeneous f0 the exponent drops by r/gcd(p,q) per lattice
/// step, so for r = gcd the shadow is faithful. Returned with the content
/// power of u stripped.
inline Upoly segment_shadow(const Polynomial& f0, long a, long b) {
    std::map<long, Rational> coeffs;
    for (const auto& [m, c] : f0.terms()) coeffs[b * m.a + a * m.b] += c;
    long lo = -1;
    for (const auto& [e, c] : coeffs)
        if (c != 0 && (lo < 0 || e < lo)) lo = e;
    Upoly g;
    if (lo < 0) return g;
    for (const auto& [e, c] : coeffs) {
        if (c == 0) continue;
        if (static_cast<long>(g.size()) <= e - lo) g.resize(e - lo + 1, Rational(0));
        g[e - lo] = c;
    }
    return g;
}

}  // namespace detail

/// True iff the weighted leading form of f contains both a pure x-power and
/// a pure y-power and is reduced. Reducedness is decided twice, via the
/// one-variable segment shadow and via a bivariate squarefree test; the two
/// are required to agree.
inline bool is_convenient_sqh(const Polynomial& f, const Weights& w) {
    if (f.is_zero()) throw std::invalid_argument("is_convenient_sqh: zero polynomial");
    const long p = w.p, q = w.q;
    Polynomial f0 = f.leading_form(w);
    long d = *f.weighted_order(w);
    if (d % p != 0 || d % q != 0) return false;
    if (f0.coeff({d / p, 0}) == 0 || f0.coeff({0, d / q}) == 0) return false;

    long g = std::gcd(p, q);
    long segment_points = d * g / (p * q);
    auto [a, b] = detail::pencil_exponents(p, q, g);
    Upoly shadow = detail::segment_shadow(f0, a, b);
    bool reduced_shadow = distinct_root_count(shadow) == segment_points;
    bool reduced_bivariate = is_squarefree(f0);
    if (reduced_shadow != reduced_bivariate)
        throw Error("squarefree tests disagree on a convenient leading form; engine bug");
    return reduced_shadow;
}

struct BranchCount {
    long count;
    bool exact;  // false when the leading form is degenerate (count is then
                 // only a lower bound)
};

/// Distinct-root count of the segment shadow of the leading form; equals the
/// branch count gcd(p,q) exactly when the leading form is convenient and
/// reduced.
inline BranchCount branch_count_sqh(const Polynomial& f, const Weights& w) {
    if (f.is_zero()) throw std::invalid_argument("branch_count_sqh: zero polynomial");
    const long p = w.p, q = w.q;
    if (*f.weighted_order(w) != p * q)
        throw std::invalid_argument("branch_count_sqh: weighted order is not p*q");
    long r = std::gcd(p, q);
    auto [a, b] = detail::pencil_exponents(p, q, r);
    Upoly shadow = detail::segment_shadow(f.leading_form(w), a, b);
    long count = distinct_root_count(shadow);
    return BranchCount{count, count == r};
}

inline SingularitySpec SingularitySpec::a(long k) {
    if (k < 1) throw UnsupportedClass("A_k needs k >= 1");
    Polynomial f = pow(Polynomial::variable_x(), 2) - pow(Polynomial::variable_y(), k + 1);
    return SingularitySpec{Kind::A, k, Weights{k + 1, 2}, f};
}

inline SingularitySpec SingularitySpec::d(long k) {
    if (k < 4) throw UnsupportedClass("D_k needs k >= 4");
    Polynomial x = Polynomial::variable_x(), y = Polynomial::variable_y();
    return SingularitySpec{Kind::D, k, Weights{1, 1}, x * x * y - pow(y, k - 1)};
}

inline SingularitySpec SingularitySpec::e(long k) {
    Polynomial x = Polynomial::variable_x(), y = Polynomial::variable_y();
    switch (k) {
        case 6: return SingularitySpec{Kind::E, 6, Weights{4, 3}, pow(x, 3) - pow(y, 4)};
        case 7: return SingularitySpec{Kind::E, 7, Weights{1, 1}, pow(x, 3) - x * pow(y, 3)};
        case 8: return SingularitySpec{Kind::E, 8, Weights{5, 3}, pow(x, 3) - pow(y, 5)};
        default: throw UnsupportedClass("E_k needs k in {6,7,8}");
    }
}

inline SingularitySpec SingularitySpec::m(long k) {
    if (k < 2) throw UnsupportedClass("M_k needs k >= 2");
    return SingularitySpec{Kind::M, k, Weights{1, 1},
                           pow(Polynomial::variable_x(), k) - pow(Polynomial::variable_y(), k)};
}

inline SingularitySpec SingularitySpec::sqh(const Polynomial& f, Weights w) {
    if (f.is_zero()) throw UnsupportedClass("sqh: zero polynomial");
    if (*f.weighted_order(w) != w.p * w.q)
        throw UnsupportedClass("sqh: weighted order must equal p*q");
    if (!is_convenient_sqh(f, w))
        throw UnsupportedClass("sqh: representative is not convenient or not reduced");
    return SingularitySpec{Kind::Sqh, 0, w, f};
}

inline long branch_count(const SingularitySpec& s) {
    switch (s.kind) {
        case SingularitySpec::Kind::A: return s.k % 2 == 1 ? 2 : 1;
        case SingularitySpec::Kind::D: return s.k % 2 == 0 ? 3 : 2;
        case SingularitySpec::Kind::E: return s.k == 7 ? 2 : 1;
        case SingularitySpec::Kind::M: return s.k;
        case SingularitySpec::Kind::Sqh: {
            long r = std::gcd(s.w.p, s.w.q);
            BranchCount bc = branch_count_sqh(s.f, s.w);
            if (!bc.exact || bc.count != r)
                throw Error("convenient reduced representative with unexpected branch count");
            return r;
        }
    }
    throw UnsupportedClass("unknown singularity kind");
}

/// Monomial part of the equisingularity ideal of a convenient
/// semi-quasihomogeneous germ: minimal monomials of weighted degree >= p*q.
namespace detail {
inline std::vector<Polynomial> weighted_corner_monomials(const Weights& w) {
    const long p = w.p, q = w.q, d = p * q;
    std::vector<Monomial> corners;
    for (long a = 0; a <= q; ++a) {
        long need = d - a * p;
        long b = need <= 0 ? 0 : (need + q - 1) / q;
        corners.push_back({a, b});
    }
    std::vector<Polynomial> out;
    for (const auto& m : corners) {
        bool minimal = true;
        for (const auto& v : corners)
            if (v != m && v.divides(m)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(Polynomial::monomial(m));
    }
    return out;
}
}  // namespace detail

inline Ideal equisingularity_ideal(const SingularitySpec& s, SbOptions opts = {}) {
    switch (s.kind) {
        case SingularitySpec::Kind::A:
        case SingularitySpec::Kind::D:
        case SingularitySpec::Kind::E:
            // Simple germs: equisingular and equianalytic ideals coincide.
            return tjurina_ideal(s.f, opts);
        case SingularitySpec::Kind::M: {
            std::vector<Polynomial> gens{s.f.dx(), s.f.dy(), s.f};
            for (long a = s.k; a >= 0; --a)
                gens.push_back(Polynomial::monomial({a, s.k - a}));
            return Ideal(std::move(gens), MonomialOrdering::ds(), opts);
        }
        case SingularitySpec::Kind::Sqh: {
            std::vector<Polynomial> gens{s.f.dx(), s.f.dy()};
            for (auto& m : detail::weighted_corner_monomials(s.w)) gens.push_back(std::move(m));
            return Ideal(std::move(gens), MonomialOrdering::ds(), opts);
        }
    }
    throw UnsupportedClass("unknown singularity kind");
}

/// Family selector for the base ideal of the gamma/tau searches.
enum class IdealFamily { Ea, Es };

inline Ideal base_ideal(const SingularitySpec& s, IdealFamily fam, SbOptions opts = {}) {
    return fam == IdealFamily::Ea ? tjurina_ideal(s.f, opts) : equisingularity_ideal(s, opts);
}

/// Intersection multiplicity i(f,g) = colength of <f,g>; nullopt encodes
/// +infinity (a common component through the origin, detected exactly via
/// the polynomial gcd).
inline std::optional<long> intersection_multiplicity(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    Polynomial h = poly_gcd(f, g);
    if (h.coeff({0, 0}) == 0) return std::nullopt;
    long cap = 2 * (*f.max_total_degree() * *g.max_total_degree() + 2);
    Ideal I({f, g}, MonomialOrdering::ds(), SbOptions{0, std::max(256L, cap)});
    return I.colength();
}

/// The sampled intersection numbers i(f, a*f_x + b*f_y) behind kappa;
/// nullopt entries mark non-generic samples hitting a common component.
inline std::vector<std::optional<long>> kappa_samples(const Polynomial& f, std::uint64_t seed,
                                                      int n = 7) {
    Polynomial fx = f.dx(), fy = f.dy();
    Prng rng(seed);
    std::vector<std::optional<long>> out;
    for (int t = 0; t < n; ++t) {
        Rational a = rng.next_rational(97);
        Rational b = rng.next_rational(97);
        out.push_back(intersection_multiplicity(f, a * fx + b * fy));
    }
    return out;
}

/// The sampled pencil element a*f_x + b*f_y attaining the minimum of the
/// kappa samples, together with that minimum.
inline std::pair<Polynomial, long> kappa_polar(const Polynomial& f, std::uint64_t seed,
                                               int n = 7) {
    Polynomial fx = f.dx(), fy = f.dy();
    Prng rng(seed);
    std::optional<Polynomial> best_g;
    long best = -1;
    for (int t = 0; t < n; ++t) {
        Rational a = rng.next_rational(97);
        Rational b = rng.next_rational(97);
        Polynomial g = a * fx + b * fy;
        auto i = intersection_multiplicity(f, g);
        if (i && (best < 0 || *i < best)) {
            best = *i;
            best_g = std::move(g);
        }
    }
    if (best < 0) throw NotZeroDimensional("kappa: every sampled polar is degenerate");
    return {std::move(*best_g), best};
}

/// Generic polar intersection number: minimum of i(f, a*f_x + b*f_y) over a
/// seeded sample of rational pencil parameters. Non-generic parameters only
/// increase the value, so the sample minimum is the generic one.
inline long kappa(const Polynomial& f, std::uint64_t seed, int n = 7) {
    return kappa_polar(f, seed, n).second;
}

inline long delta_invariant(const SingularitySpec& s) {
    long mu = milnor_number(s.f);
    long r = branch_count(s);
    if ((mu + r - 1) % 2 != 0) throw Error("mu + r - 1 is odd; branch count or mu wrong");
    return (mu + r - 1) / 2;
}

struct InvariantRecord {
    long mu;
    long tau;
    long tau_es;
    long kappa;
    long delta;
    long branches;
    bool branches_exact;
};

inline InvariantRecord invariant_record(const SingularitySpec& s, std::uint64_t seed) {
    InvariantRecord rec;
    rec.mu = milnor_number(s.f);
    rec.tau = tjurina_number(s.f);
    rec.tau_es = equisingularity_ideal(s).colength();
    rec.kappa = kappa(s.f, seed);
    rec.branches = branch_count(s);
    rec.branches_exact = s.kind != SingularitySpec::Kind::Sqh ||
                         branch_count_sqh(s.f, s.w).exact;
    rec.delta = (rec.mu + rec.branches - 1) / 2;
    if ((rec.mu + rec.branches - 1) % 2 != 0)
        throw Error("mu + r - 1 is odd; branch count or mu wrong");
    if (rec.tau > rec.mu) throw Error("tau exceeds mu; engine bug");
    return rec;
}

}  // namespace gsing
