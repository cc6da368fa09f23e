#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gsing {

/// Monomial x^a * y^b in the local ring Q[x,y] localized at the origin.
struct Monomial {
    long a = 0;
    long b = 0;

    long total_degree() const { return a + b; }
    long weighted_degree(long p, long q) const { return a * p + b * q; }

    bool divides(const Monomial& m) const { return a <= m.a && b <= m.b; }
    bool is_one() const { return a == 0 && b == 0; }

    friend Monomial operator*(const Monomial& u, const Monomial& v) {
        return {u.a + v.a, u.b + v.b};
    }
    /// Quotient u / v; caller guarantees v.divides(u).
    friend Monomial operator/(const Monomial& u, const Monomial& v) {
        return {u.a - v.a, u.b - v.b};
    }
    friend Monomial lcm(const Monomial& u, const Monomial& v) {
        return {std::max(u.a, v.a), std::max(u.b, v.b)};
    }
    friend bool operator==(const Monomial& u, const Monomial& v) {
        return u.a == v.a && u.b == v.b;
    }
    friend bool operator!=(const Monomial& u, const Monomial& v) { return !(u == v); }
};

/// Container order (plain lex on exponent vectors); used for canonical
/// storage and printing, independent of any semantic monomial ordering.
struct MonomialLexLess {
    bool operator()(const Monomial& u, const Monomial& v) const {
        if (u.a != v.a) return u.a < v.a;
        return u.b < v.b;
    }
};

struct Weights {
    long p = 1;
    long q = 1;
};

enum class Cmp { Less, Equal, Greater };

/// A local monomial ordering: every monomial except 1 is smaller than 1.
///  - Ls: negative lexicographical. x^a y^b < x^c y^d iff a > c, or a = c and b > d.
///  - Ds: negative degree reverse lexicographical. Compare total degrees first
///    (larger degree means smaller monomial), ties broken by larger y-exponent
///    meaning smaller monomial.
///  - Weighted(p,q): larger (p,q)-weight means smaller monomial; on equal
///    weight the monomial with the larger y-exponent is the larger one.
struct MonomialOrdering {
    enum class Kind { Ls, Ds, Weighted };

    Kind kind = Kind::Ds;
    long p = 1;
    long q = 1;

    static MonomialOrdering ls() { return {Kind::Ls, 1, 1}; }
    static MonomialOrdering ds() { return {Kind::Ds, 1, 1}; }
    static MonomialOrdering weighted(long p, long q) {
        if (p < 1 || q < 1) throw std::invalid_argument("weighted ordering needs p, q >= 1");
        return {Kind::Weighted, p, q};
    }

    bool is_degree_ordering() const {
        return kind == Kind::Ds || (kind == Kind::Weighted && p == q);
    }

    std::string name() const {
        switch (kind) {
            case Kind::Ls: return "ls";
            case Kind::Ds: return "ds";
            default: return "w:" + std::to_string(p) + "," + std::to_string(q);
        }
    }

    friend bool operator==(const MonomialOrdering& u, const MonomialOrdering& v) {
        if (u.kind != v.kind) return false;
        if (u.kind != Kind::Weighted) return true;
        return u.p == v.p && u.q == v.q;
    }
};

inline Cmp cmp(const Monomial& u, const Monomial& v, const MonomialOrdering& ord) {
    switch (ord.kind) {
        case MonomialOrdering::Kind::Ls: {
            if (u.a != v.a) return u.a > v.a ? Cmp::Less : Cmp::Greater;
            if (u.b != v.b) return u.b > v.b ? Cmp::Less : Cmp::Greater;
            return Cmp::Equal;
        }
        case MonomialOrdering::Kind::Ds: {
            long du = u.total_degree(), dv = v.total_degree();
            if (du != dv) return du > dv ? Cmp::Less : Cmp::Greater;
            if (u.b != v.b) return u.b > v.b ? Cmp::Less : Cmp::Greater;
            return Cmp::Equal;
        }
        default: {
            long wu = u.weighted_degree(ord.p, ord.q), wv = v.weighted_degree(ord.p, ord.q);
            if (wu != wv) return wu > wv ? Cmp::Less : Cmp::Greater;
            if (u.b != v.b) return u.b < v.b ? Cmp::Less : Cmp::Greater;
            return Cmp::Equal;
        }
    }
}

inline bool less(const Monomial& u, const Monomial& v, const MonomialOrdering& ord) {
    return cmp(u, v, ord) == Cmp::Less;
}

/// std::map comparator placing the ordering-largest monomial first.
struct OrdGreater {
    MonomialOrdering ord;
    bool operator()(const Monomial& u, const Monomial& v) const {
        return cmp(u, v, ord) == Cmp::Greater;
    }
};

}  // namespace gsing
