#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "polynomial.hpp"

namespace gsing {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when the truncation cap is exhausted without certifying a finite
/// colength; either the ideal is not zero-dimensional or max_cap is too low.
struct NotZeroDimensional : Error {
    using Error::Error;
};

struct MembershipViolation : Error {
    using Error::Error;
};

struct InfiniteIntersection : Error {
    using Error::Error;
};

struct UnsupportedClass : Error {
    using Error::Error;
};

struct SbOptions {
    long initial_cap = 0;  // 0 = twice the maximal generator degree
    long max_cap = 256;
};

namespace detail {

struct Reducer {
    Monomial lead;
    Rational lc;
    long ecart;  // max total degree minus lead degree
    const Polynomial* poly;
    bool is_monomial;
};

inline Reducer make_reducer(const Polynomial& g, const MonomialOrdering& ord) {
    auto lt = g.leading_term(ord);
    Reducer r;
    r.lead = lt->first;
    r.lc = lt->second;
    r.ecart = *g.max_total_degree() - r.lead.total_degree();
    r.poly = &g;
    r.is_monomial = g.term_count() == 1;
    return r;
}

/// Full reduction of f modulo m^(trunc+1): every monomial of the result is
/// below trunc+1 in degree and divisible by no reducer lead. With truncation
/// the leading monomial of the remaining mass strictly decreases inside a
/// finite set, so plain reduction terminates and no Mora unit is needed.
inline Polynomial reduce(const Polynomial& f, const std::vector<Reducer>& reducers,
                         const MonomialOrdering& ord, long trunc) {
    std::map<Monomial, Rational, OrdGreater> work{OrdGreater{ord}};
    for (const auto& [m, c] : f.terms())
        if (m.total_degree() <= trunc) work.emplace(m, c);

    Polynomial result;
    while (!work.empty()) {
        auto it = work.begin();
        Monomial u = it->first;
        Rational c = it->second;
        work.erase(it);

        const Reducer* chosen = nullptr;
        for (const auto& r : reducers) {
            if (!r.lead.divides(u)) continue;
            if (chosen == nullptr || r.ecart < chosen->ecart) chosen = &r;
        }
        if (chosen == nullptr) {
            result.add_term(u, c);
            continue;
        }
        Monomial shift = u / chosen->lead;
        Rational scale = c / chosen->lc;
        for (const auto& [m, cg] : chosen->poly->terms()) {
            if (m == chosen->lead) continue;
            Monomial v = m * shift;
            if (v.total_degree() > trunc) continue;
            auto [wit, inserted] = work.emplace(v, -scale * cg);
            if (!inserted) {
                wit->second -= scale * cg;
                if (wit->second == 0) work.erase(wit);
            }
        }
    }
    return result;
}

}  // namespace detail

/// Weak normal form of f against the given divisors, working modulo
/// m^(trunc+1). The returned remainder r satisfies f - r in <divisors> +
/// m^(trunc+1), and no monomial of r is divisible by a divisor's leading
/// monomial. "r = 0 iff f lies in the ideal (mod the cap)" additionally
/// needs the divisors to be a standard basis; Ideal::contains provides the
/// membership-grade interface.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                              const MonomialOrdering& ord, long trunc) {
    std::vector<detail::Reducer> reducers;
    reducers.reserve(divisors.size());
    for (const auto& g : divisors)
        if (!g.is_zero()) reducers.push_back(detail::make_reducer(g, ord));
    return detail::reduce(f, reducers, ord, trunc);
}

namespace detail {

/// Buchberger over a local ordering, truncated at cap+1 by adjoining every
/// monomial of degree cap+1 as a generator. Truncation in the reduction is
/// then literally reduction by those generators, so the result is a genuine
/// standard basis of <gens> + m^(cap+1). Local orderings admit no product
/// criterion, so no pair is skipped except monomial-monomial pairs (whose
/// S-polynomials vanish identically).
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                          const MonomialOrdering& ord, long cap) {
    const long trunc = cap + 1;
    std::vector<Polynomial> basis;
    for (const auto& g : gens) {
        Polynomial t = g.truncate_above(trunc);
        if (!t.is_zero()) basis.push_back(std::move(t));
    }
    for (long a = 0; a <= trunc; ++a)
        basis.push_back(Polynomial::monomial({a, trunc - a}));

    std::vector<Reducer> reducers;
    reducers.reserve(basis.size());
    for (const auto& g : basis) reducers.push_back(make_reducer(g, ord));
    // Pointers into `basis` would dangle on push_back; rebuild instead.
    auto rebuild = [&]() {
        reducers.clear();
        for (const auto& g : basis) reducers.push_back(make_reducer(g, ord));
    };
    rebuild();

    using PairKey = std::tuple<long, long, std::size_t, std::size_t>;
    std::set<PairKey> queue;
    auto push_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            if (reducers[i].is_monomial && reducers[k].is_monomial) continue;
            Monomial w = lcm(reducers[i].lead, reducers[k].lead);
            queue.emplace(w.total_degree(), w.a, i, k);
        }
    };
    for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

    while (!queue.empty()) {
        auto [deg, wa, i, j] = *queue.begin();
        queue.erase(queue.begin());
        Monomial w = lcm(reducers[i].lead, reducers[j].lead);
        Polynomial s = basis[i].times_term(w / reducers[i].lead, Rational(1) / reducers[i].lc);
        s -= basis[j].times_term(w / reducers[j].lead, Rational(1) / reducers[j].lc);
        s = s.truncate_above(trunc);
        Polynomial r = reduce(s, reducers, ord, trunc);
        if (r.is_zero()) continue;
        basis.push_back(std::move(r));
        rebuild();
        push_pairs(basis.size() - 1);
    }
    return basis;
}

}  // namespace detail

/// Slope data of the Hilbert-Samuel function of R/I, always read off a
/// degree ordering. h0[d] counts standard monomials of total degree d;
/// h1 is its running sum.
struct HilbertSamuelData {
    std::vector<long> h0;
    std::vector<long> h1;
    long mult = 0;
    long degbound = 0;
    long colength = 0;

    long h0_at(long d) const {
        if (d < 0 || d >= static_cast<long>(h0.size())) return 0;
        return h0[d];
    }
    long h1_at(long d) const {
        if (d < 0) return 0;
        if (d >= static_cast<long>(h1.size())) return colength;
        return h1[d];
    }

    /// Internal consistency: the shape facts every Hilbert-Samuel slope of a
    /// zero-dimensional ideal satisfies.
    void validate() const {
        if (colength == 0) {
            if (!h0.empty() || mult != 0 || degbound != 0)
                throw Error("hilbert-samuel: empty quotient with nonempty data");
            return;
        }
        if (static_cast<long>(h0.size()) != degbound)
            throw Error("hilbert-samuel: h0 length disagrees with degbound");
        long sum = 0;
        for (long d = 0; d < degbound; ++d) {
            if (d < mult && h0[d] != d + 1) throw Error("hilbert-samuel: ramp violated");
            if (d >= mult && h0[d] > h0_at(d - 1))
                throw Error("hilbert-samuel: slope rises after multiplicity");
            if (h0[d] <= 0) throw Error("hilbert-samuel: zero before degbound");
            if (h0[d] > mult && d >= mult) throw Error("hilbert-samuel: value above multiplicity");
            sum += h0[d];
            if (h1_at(d) != sum) throw Error("hilbert-samuel: h1 is not the running sum");
        }
        if (sum != colength) throw Error("hilbert-samuel: area disagrees with colength");
        if (mult > degbound) throw Error("hilbert-samuel: multiplicity beyond degbound");
    }
};

/// Ideal of the local ring Q[x,y]_(x,y), with an attached local ordering and
/// lazily computed, certified standard-basis data. All published data
/// (staircase, colength, Hilbert-Samuel slope) is exact: a truncated basis is
/// only accepted once some m^e, e <= cap, is proven to lie in the ideal,
/// which by Nakayama pins the truncated computation to the ideal itself.
/// Caches fill under single-writer discipline; share across threads only
/// after forcing.
class Ideal {
  public:
    explicit Ideal(std::vector<Polynomial> gens,
                   MonomialOrdering ord = MonomialOrdering::ds(), SbOptions opts = {})
        : gens_(std::move(gens)), ord_(ord), opts_(opts) {}

    const std::vector<Polynomial>& generators() const { return gens_; }
    const MonomialOrdering& ordering() const { return ord_; }

    Ideal with_ordering(const MonomialOrdering& ord) const { return Ideal(gens_, ord, opts_); }

    /// Canonical reduced minimal standard basis: monic, one element per
    /// minimal staircase generator, tails supported on standard monomials.
    const std::vector<Polynomial>& standard_basis() const {
        force();
        return sb_;
    }

    /// Minimal generators of the leading ideal, sorted by exponent.
    const std::vector<Monomial>& staircase() const {
        force();
        return staircase_;
    }

    /// Monomials outside the leading ideal (a C-basis of R/I), sorted.
    const std::vector<Monomial>& region() const {
        force();
        return region_;
    }

    long colength() const {
        force();
        return colength_;
    }

    /// Minimal e with m^e contained in I (ordering-independent).
    long degbound() const {
        force();
        return degbound_;
    }

    long multiplicity() const { return hilbert_samuel().mult; }

    const HilbertSamuelData& hilbert_samuel() const {
        force();
        if (!hs_) {
            if (ord_.kind == MonomialOrdering::Kind::Ds) {
                hs_ = hs_from_region(region_, colength_);
            } else {
                Ideal twin(gens_, MonomialOrdering::ds(), opts_);
                twin.force();
                if (twin.colength_ != colength_)
                    throw Error("colength disagrees across orderings; basis engine bug");
                hs_ = hs_from_region(twin.region_, twin.colength_);
            }
            hs_->validate();
        }
        return *hs_;
    }

    bool contains(const Polynomial& f) const {
        force();
        if (f.is_zero()) return true;
        Polynomial t = f.truncate_above(degbound_);
        return normal_form(t, sb_, ord_, degbound_).is_zero();
    }

    bool contains_ideal(const Ideal& other) const {
        for (const auto& g : other.generators())
            if (!contains(g)) return false;
        return true;
    }

    /// Reduces f to its canonical representative modulo the ideal, supported
    /// on the standard monomials.
    Polynomial reduce(const Polynomial& f) const {
        force();
        return normal_form(f.truncate_above(degbound_), sb_, ord_, degbound_);
    }

    /// Number of minimal generators, dim(I/mI), computed as
    /// colength(mI) - colength(I).
    long min_generators() const;

    bool is_complete_intersection() const;

    /// Lower bound on the number of minimal generators from the maximal
    /// downward slope step of the Hilbert-Samuel function.
    long iarrobino_lower_bound() const {
        const auto& hs = hilbert_samuel();
        if (hs.colength == 0) return 0;
        long drop = 0;
        for (long d = std::max(hs.mult, 1L); d <= hs.degbound; ++d)
            drop = std::max(drop, hs.h0_at(d - 1) - hs.h0_at(d));
        return 1 + drop;
    }

    /// (degbound - mult + 1) * mult; an upper bound for the colength of a
    /// complete intersection with the same multiplicity and degree bound.
    long deg_fp_bound() const {
        const auto& hs = hilbert_samuel();
        return (hs.degbound - hs.mult + 1) * hs.mult;
    }

    /// Deterministic identity string (reduced basis plus ordering).
    std::string key() const {
        force();
        std::string k = ord_.name() + "|";
        for (const auto& g : sb_) {
            k += g.str();
            k += ";";
        }
        return k;
    }

  private:
    static HilbertSamuelData hs_from_region(const std::vector<Monomial>& region, long colength) {
        HilbertSamuelData hs;
        hs.colength = colength;
        long maxdeg = -1;
        for (const auto& m : region) maxdeg = std::max(maxdeg, m.total_degree());
        hs.degbound = maxdeg + 1;
        hs.h0.assign(hs.degbound, 0);
        for (const auto& m : region) ++hs.h0[m.total_degree()];
        hs.h1.resize(hs.h0.size());
        long sum = 0;
        for (std::size_t d = 0; d < hs.h0.size(); ++d) {
            sum += hs.h0[d];
            hs.h1[d] = sum;
        }
        hs.mult = hs.degbound;
        for (long d = 0; d < hs.degbound; ++d)
            if (hs.h0[d] != d + 1) {
                hs.mult = d;
                break;
            }
        return hs;
    }

    void force() const;

    std::vector<Polynomial> gens_;
    MonomialOrdering ord_;
    SbOptions opts_;

    mutable bool forced_ = false;
    mutable std::vector<Polynomial> sb_;
    mutable std::vector<Monomial> staircase_;
    mutable std::vector<Monomial> region_;
    mutable long colength_ = 0;
    mutable long degbound_ = 0;
    mutable std::optional<HilbertSamuelData> hs_;
    mutable std::optional<long> min_gens_;
};

inline void Ideal::force() const {
    if (forced_) return;

    long maxdeg = 0;
    bool any = false;
    for (const auto& g : gens_) {
        if (g.is_zero()) continue;
        any = true;
        maxdeg = std::max(maxdeg, *g.max_total_degree());
    }
    if (!any) throw NotZeroDimensional("zero ideal has no finite colength");

    long cap = opts_.initial_cap > 0 ? opts_.initial_cap : std::max(4L, 2 * maxdeg);

    for (; cap <= opts_.max_cap; cap *= 2) {
        std::vector<Polynomial> basis = detail::buchberger(gens_, ord_, cap);

        std::vector<detail::Reducer> reducers;
        for (const auto& g : basis) reducers.push_back(detail::make_reducer(g, ord_));

        // Minimal generators of the leading ideal.
        std::vector<Monomial> leads;
        for (const auto& r : reducers) leads.push_back(r.lead);
        std::vector<Monomial> staircase;
        for (const auto& u : leads) {
            bool minimal = true;
            for (const auto& v : leads)
                if (v != u && v.divides(u)) {
                    minimal = false;
                    break;
                }
            if (minimal && std::find(staircase.begin(), staircase.end(), u) == staircase.end())
                staircase.push_back(u);
        }
        std::sort(staircase.begin(), staircase.end(),
                  [](const Monomial& u, const Monomial& v) { return MonomialLexLess{}(u, v); });

        // The cap monomials guarantee pure powers, so the region is finite.
        long xa = 0, yb = 0;
        for (const auto& u : staircase) {
            if (u.b == 0) xa = u.a;
            if (u.a == 0) yb = u.b;
        }
        std::vector<Monomial> region;
        long regionmax = -1;
        for (long a = 0; a < xa; ++a)
            for (long b = 0; b < yb; ++b) {
                Monomial m{a, b};
                bool inside = false;
                for (const auto& u : staircase)
                    if (u.divides(m)) {
                        inside = true;
                        break;
                    }
                if (!inside) {
                    region.push_back(m);
                    regionmax = std::max(regionmax, m.total_degree());
                }
            }

        // Certification: find the smallest e <= cap with m^e inside the
        // ideal. Degree orderings certify at regionmax+1 for free; otherwise
        // check monomial membership explicitly.
        long cert = -1;
        for (long e = regionmax + 1; e <= cap; ++e) {
            bool ok = true;
            if (!ord_.is_degree_ordering() || e > regionmax + 1) {
                for (long a = 0; a <= e && ok; ++a) {
                    Polynomial u = Polynomial::monomial({a, e - a});
                    ok = detail::reduce(u, reducers, ord_, cap + 1).is_zero();
                }
            }
            if (ok) {
                cert = e;
                break;
            }
        }
        if (cert < 0) continue;

        // Canonical reduced basis: u - reduce(u) per staircase corner.
        std::vector<Polynomial> sb;
        for (const auto& u : staircase) {
            Polynomial r = detail::reduce(Polynomial::monomial(u), reducers, ord_, cap + 1);
            sb.push_back(Polynomial::monomial(u) - r);
        }

        sb_ = std::move(sb);
        staircase_ = std::move(staircase);
        std::sort(region.begin(), region.end(),
                  [](const Monomial& u, const Monomial& v) { return MonomialLexLess{}(u, v); });
        region_ = std::move(region);
        colength_ = static_cast<long>(region_.size());
        degbound_ = cert;
        forced_ = true;
        return;
    }
    throw NotZeroDimensional("no finite colength certified up to cap " +
                             std::to_string(opts_.max_cap));
}

inline Ideal maximal_ideal_power(long k, const MonomialOrdering& ord = MonomialOrdering::ds(),
                                 SbOptions opts = {}) {
    if (k < 1) throw std::invalid_argument("maximal_ideal_power needs k >= 1");
    std::vector<Polynomial> gens;
    for (long a = k; a >= 0; --a) gens.push_back(Polynomial::monomial({a, k - a}));
    return Ideal(std::move(gens), ord, opts);
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(std::move(gens), I.ordering());
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators())
        for (const auto& g : J.generators()) gens.push_back(f * g);
    return Ideal(std::move(gens), I.ordering());
}

inline long Ideal::min_generators() const {
    if (!min_gens_) {
        Ideal mi = ideal_product(*this, maximal_ideal_power(1, ord_));
        min_gens_ = mi.colength() - colength();
    }
    return *min_gens_;
}

inline bool Ideal::is_complete_intersection() const {
    if (colength() == 0) return false;
    if (min_generators() != 2) return false;
    // Cross-checks: a complete intersection's slope never drops by more than
    // one per step, and its multiplicity is at most (degbound+1)/2 for odd
    // degbound, degbound/2 for even.
    const auto& hs = hilbert_samuel();
    if (iarrobino_lower_bound() > 2)
        throw Error("complete intersection with slope drop above one; engine bug");
    long mult_cap = hs.degbound % 2 == 1 ? (hs.degbound + 1) / 2 : hs.degbound / 2;
    if (hs.mult > mult_cap)
        throw Error("complete intersection multiplicity exceeds half the degree bound; engine bug");
    return true;
}

}  // namespace gsing
