#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"

namespace gsing {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

using Term = std::pair<Monomial, Rational>;

/// Element of Q[x,y], stored sparsely with no zero coefficients. The storage
/// order is the container order; semantic leading terms are always queried
/// against an explicit local ordering.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialLexLess>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c) {
        if (c != 0) terms_[Monomial{0, 0}] = c;
    }
    static Polynomial monomial(const Monomial& m, const Rational& c = Rational(1)) {
        Polynomial f;
        if (c != 0) f.terms_[m] = c;
        return f;
    }
    static Polynomial variable_x() { return monomial({1, 0}); }
    static Polynomial variable_y() { return monomial({0, 1}); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& g) {
        for (const auto& [m, c] : g.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& g) {
        for (const auto& [m, c] : g.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator-(const Polynomial& f) {
        Polynomial r;
        for (const auto& [m, c] : f.terms_) r.terms_[m] = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        Polynomial r;
        for (const auto& [mf, cf] : f.terms_)
            for (const auto& [mg, cg] : g.terms_) r.add_term(mf * mg, cf * cg);
        return r;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& f) {
        Polynomial r;
        if (c == 0) return r;
        for (const auto& [m, cf] : f.terms_) r.terms_[m] = c * cf;
        return r;
    }

    /// f * c * x^e, fused to avoid building temporaries in reduction loops.
    Polynomial times_term(const Monomial& m, const Rational& c) const {
        Polynomial r;
        if (c == 0) return r;
        for (const auto& [mf, cf] : terms_) r.terms_[mf * m] = cf * c;
        return r;
    }

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        return f.terms_ == g.terms_;
    }
    friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }

    Polynomial dx() const {
        Polynomial r;
        for (const auto& [m, c] : terms_)
            if (m.a > 0) r.terms_[{m.a - 1, m.b}] = c * m.a;
        return r;
    }
    Polynomial dy() const {
        Polynomial r;
        for (const auto& [m, c] : terms_)
            if (m.b > 0) r.terms_[{m.a, m.b - 1}] = c * m.b;
        return r;
    }

    /// Ordering-largest term, or nullopt for the zero polynomial.
    std::optional<Term> leading_term(const MonomialOrdering& ord) const {
        if (terms_.empty()) return std::nullopt;
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (cmp(it->first, best->first, ord) == Cmp::Greater) best = it;
        return Term{best->first, best->second};
    }

    std::optional<long> max_total_degree() const {
        if (terms_.empty()) return std::nullopt;
        long d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    /// Order of vanishing at the origin (minimal total degree of a term);
    /// nullopt for the zero polynomial.
    std::optional<long> order() const {
        if (terms_.empty()) return std::nullopt;
        long d = terms_.begin()->first.total_degree();
        for (const auto& [m, c] : terms_) d = std::min(d, m.total_degree());
        return d;
    }

    /// Minimal (p,q)-weighted degree of a term; nullopt (infinity) for 0.
    std::optional<long> weighted_order(const Weights& w) const {
        if (terms_.empty()) return std::nullopt;
        long d = terms_.begin()->first.weighted_degree(w.p, w.q);
        for (const auto& [m, c] : terms_)
            d = std::min(d, m.weighted_degree(w.p, w.q));
        return d;
    }

    /// Sum of the terms of minimal (p,q)-weight (zero polynomial for 0).
    Polynomial leading_form(const Weights& w) const {
        Polynomial r;
        auto d = weighted_order(w);
        if (!d) return r;
        for (const auto& [m, c] : terms_)
            if (m.weighted_degree(w.p, w.q) == *d) r.terms_[m] = c;
        return r;
    }

    /// Drops every term of total degree strictly above maxdeg.
    Polynomial truncate_above(long maxdeg) const {
        Polynomial r;
        for (const auto& [m, c] : terms_)
            if (m.total_degree() <= maxdeg) r.terms_[m] = c;
        return r;
    }

    std::string str() const;

  private:
    TermMap terms_;
};

inline Polynomial pow(const Polynomial& f, long e) {
    Polynomial r(Rational(1));
    for (long i = 0; i < e; ++i) r = r * f;
    return r;
}

// ---------------------------------------------------------------------------
// Text form. Canonical output lists terms by ascending total degree (the
// natural reading for local rings), x-heavy terms first within a degree.

inline std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<Term> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const Term& u, const Term& v) {
        long du = u.first.total_degree(), dv = v.first.total_degree();
        if (du != dv) return du < dv;
        return u.first.b < v.first.b;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : ts) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool wrote_coeff = false;
        if (a != 1 || m.is_one()) {
            out << rational_to_string(a);
            wrote_coeff = true;
        }
        if (m.a > 0) {
            if (wrote_coeff) out << "*";
            out << "x";
            if (m.a > 1) out << "^" << m.a;
            wrote_coeff = true;
        }
        if (m.b > 0) {
            if (wrote_coeff) out << "*";
            out << "y";
            if (m.b > 1) out << "^" << m.b;
        }
    }
    return out.str();
}

inline std::string format_polynomial(const Polynomial& f) { return f.str(); }

namespace detail {

class PolyParser {
  public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    Polynomial parse() {
        Polynomial f;
        skip_ws();
        if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
        bool neg = consume_sign();
        f += term(neg);
        while (true) {
            skip_ws();
            if (pos_ == s_.size()) break;
            char c = s_[pos_];
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            f += term(c == '-');
        }
        return f;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    bool consume_sign() {
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            bool neg = s_[pos_] == '-';
            ++pos_;
            return neg;
        }
        return false;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
        if (pos_ == start) throw ParseError("expected an integer", pos_);
        try {
            return std::stol(s_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    }

    Polynomial term(bool neg) {
        skip_ws();
        Rational coeff(1);
        Monomial m;
        bool saw_anything = false;
        if (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
            long num = integer();
            coeff = Rational(num);
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                long den = integer();
                if (den == 0) throw ParseError("zero denominator", pos_);
                coeff = Rational(num, den);
                coeff.canonicalize();
            }
            saw_anything = true;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                variables(m);
            }
        } else {
            variables(m);
            saw_anything = true;
        }
        if (!saw_anything) throw ParseError("expected a term", pos_);
        if (neg) coeff = -coeff;
        return Polynomial::monomial(m, coeff);
    }

    void variables(Monomial& m) {
        while (true) {
            skip_ws();
            if (pos_ == s_.size() || (s_[pos_] != 'x' && s_[pos_] != 'y'))
                throw ParseError("expected 'x' or 'y'", pos_);
            char var = s_[pos_++];
            long e = 1;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                e = integer();
                if (e < 0) throw ParseError("negative exponent", pos_);
            }
            if (var == 'x')
                m.a += e;
            else
                m.b += e;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the ASCII grammar "c", "c*x^a", "c*x^a*y^b" joined by +/-, with
/// '^1' and a coefficient of 1 omissible and whitespace ignored.
inline Polynomial parse_polynomial(const std::string& text) {
    return detail::PolyParser(text).parse();
}

}  // namespace gsing
