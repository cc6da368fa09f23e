#pragma once

#include <map>
#include <vector>

#include "polynomial.hpp"

namespace gsing {

/// Dense univariate polynomial over Q, index = degree, no trailing zeros.
using Upoly = std::vector<Rational>;

inline void uni_trim(Upoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long uni_deg(const Upoly& f) { return static_cast<long>(f.size()) - 1; }

inline Upoly uni_mul(const Upoly& f, const Upoly& g) {
    if (f.empty() || g.empty()) return {};
    Upoly r(f.size() + g.size() - 1, Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    uni_trim(r);
    return r;
}

inline Upoly uni_sub(Upoly f, const Upoly& g) {
    if (f.size() < g.size()) f.resize(g.size(), Rational(0));
    for (std::size_t i = 0; i < g.size(); ++i) f[i] -= g[i];
    uni_trim(f);
    return f;
}

/// Remainder of f by nonzero g over the field Q.
inline Upoly uni_rem(Upoly f, const Upoly& g) {
    while (uni_deg(f) >= uni_deg(g) && !f.empty()) {
        Rational c = f.back() / g.back();
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
        uni_trim(f);
    }
    return f;
}

inline Upoly uni_monic(Upoly f) {
    if (f.empty()) return f;
    Rational lc = f.back();
    for (auto& c : f) c /= lc;
    return f;
}

/// Monic gcd over Q; gcd(0,0) = 0.
inline Upoly uni_gcd(Upoly f, Upoly g) {
    uni_trim(f);
    uni_trim(g);
    while (!g.empty()) {
        Upoly r = uni_rem(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return uni_monic(f);
}

/// Quotient f / g, assuming exact divisibility.
inline Upoly uni_divexact(Upoly f, const Upoly& g) {
    if (f.empty()) return {};
    if (g.empty() || f.size() < g.size())
        throw std::invalid_argument("uni_divexact: division is not exact");
    Upoly q(f.size() - g.size() + 1, Rational(0));
    while (!f.empty() && uni_deg(f) >= uni_deg(g)) {
        Rational c = f.back() / g.back();
        std::size_t shift = f.size() - g.size();
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
        uni_trim(f);
    }
    uni_trim(q);
    return q;
}

inline Upoly uni_derivative(const Upoly& f) {
    if (f.size() <= 1) return {};
    Upoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * Rational(static_cast<long>(i));
    return r;
}

/// Number of distinct complex roots: deg f - deg gcd(f, f').
inline long distinct_root_count(const Upoly& f) {
    if (f.empty() || f.size() == 1) return 0;
    Upoly g = uni_gcd(f, uni_derivative(f));
    return uni_deg(f) - uni_deg(g);
}

namespace detail {

/// Bivariate polynomial viewed in Q[x][y]: y-degree -> coefficient in Q[x].
using YRep = std::map<long, Upoly>;

inline YRep to_yrep(const Polynomial& f) {
    YRep r;
    for (const auto& [m, c] : f.terms()) {
        Upoly& u = r[m.b];
        if (static_cast<long>(u.size()) <= m.a) u.resize(m.a + 1, Rational(0));
        u[m.a] = c;
    }
    return r;
}

inline Polynomial from_yrep(const YRep& f) {
    Polynomial r;
    for (const auto& [b, u] : f)
        for (std::size_t a = 0; a < u.size(); ++a)
            if (u[a] != 0) r.add_term({static_cast<long>(a), b}, u[a]);
    return r;
}

inline long ydeg(const YRep& f) { return f.empty() ? -1 : f.rbegin()->first; }

inline Upoly ycontent(const YRep& f) {
    Upoly c;
    for (const auto& [b, u] : f) c = uni_gcd(c, u);
    return c;
}

inline YRep ydiv_by_uni(const YRep& f, const Upoly& u) {
    YRep r;
    for (const auto& [b, g] : f) {
        Upoly q = uni_divexact(g, u);
        if (!q.empty()) r[b] = std::move(q);
    }
    return r;
}

inline YRep ymul_uni(const YRep& f, const Upoly& u) {
    YRep r;
    if (u.empty()) return r;
    for (const auto& [b, g] : f) {
        Upoly h = uni_mul(g, u);
        if (!h.empty()) r[b] = std::move(h);
    }
    return r;
}

inline YRep ysub(YRep f, const YRep& g) {
    for (const auto& [b, u] : g) {
        Upoly diff = uni_sub(f.count(b) ? f[b] : Upoly{}, u);
        if (diff.empty())
            f.erase(b);
        else
            f[b] = std::move(diff);
    }
    return f;
}

/// Pseudo-remainder of f by g with respect to y (g nonzero in y).
inline YRep yprem(YRep f, const YRep& g) {
    long dg = ydeg(g);
    const Upoly& lcg = g.rbegin()->second;
    while (ydeg(f) >= dg && !f.empty()) {
        long df = ydeg(f);
        Upoly lcf = f.rbegin()->second;
        // f <- lc(g) * f - lc(f) * y^(df-dg) * g
        YRep scaled = ymul_uni(f, lcg);
        YRep sub;
        for (const auto& [b, u] : g) {
            Upoly h = uni_mul(u, lcf);
            if (!h.empty()) sub[b + (df - dg)] = std::move(h);
        }
        f = ysub(std::move(scaled), sub);
    }
    return f;
}

inline YRep yprimitive(const YRep& f) {
    if (f.empty()) return f;
    return ydiv_by_uni(f, ycontent(f));
}

}  // namespace detail

/// Gcd in Q[x,y] via a primitive pseudo-remainder sequence in Q[x][y].
/// Normalized so the container-lex leading coefficient is 1; gcd(0,0) = 0.
inline Polynomial poly_gcd(const Polynomial& F, const Polynomial& G) {
    auto normalize = [](const Polynomial& h) {
        if (h.is_zero()) return h;
        Rational lc = h.terms().rbegin()->second;
        return (Rational(1) / lc) * h;
    };
    if (F.is_zero()) return normalize(G);
    if (G.is_zero()) return normalize(F);

    detail::YRep A = detail::to_yrep(F), B = detail::to_yrep(G);
    Upoly contA = detail::ycontent(A), contB = detail::ycontent(B);
    Upoly cont = uni_gcd(contA, contB);
    A = detail::ydiv_by_uni(A, contA);
    B = detail::ydiv_by_uni(B, contB);
    if (detail::ydeg(A) < detail::ydeg(B)) std::swap(A, B);

    detail::YRep g;
    while (true) {
        if (B.empty()) {
            g = A;
            break;
        }
        if (detail::ydeg(B) == 0) {
            g.clear();
            g[0] = Upoly{Rational(1)};  // primitive parts coprime in y
            break;
        }
        detail::YRep R = detail::yprem(A, B);
        A = std::move(B);
        B = detail::yprimitive(R);
    }
    Polynomial result = detail::from_yrep(detail::ymul_uni(g, cont));
    return normalize(result);
}

/// True iff f has no repeated irreducible factor (characteristic zero test
/// via gcd(f, f_x, f_y); constants count as squarefree).
inline bool is_squarefree(const Polynomial& f) {
    if (f.is_zero()) return false;
    Polynomial g = poly_gcd(poly_gcd(f, f.dx()), f.dy());
    return g.max_total_degree() == 0;
}

/// Restricts a polynomial in x alone (or y alone) to its dense coefficient
/// vector. Throws if the other variable occurs.
inline Upoly to_univariate(const Polynomial& f, char var) {
    Upoly u;
    for (const auto& [m, c] : f.terms()) {
        long e;
        if (var == 'x') {
            if (m.b != 0) throw std::invalid_argument("polynomial is not univariate in x");
            e = m.a;
        } else {
            if (m.a != 0) throw std::invalid_argument("polynomial is not univariate in y");
            e = m.b;
        }
        if (static_cast<long>(u.size()) <= e) u.resize(e + 1, Rational(0));
        u[e] = c;
    }
    uni_trim(u);
    return u;
}

}  // namespace gsing
