#include <catch2/catch_amalgamated.hpp>
#include <gsing/invariants.hpp>

using namespace gsing;

namespace {
constexpr std::uint64_t kSeed = 42;
}

TEST_CASE("A-series invariants", "[invariants]") {
    for (long k = 1; k <= 10; ++k) {
        auto s = SingularitySpec::a(k);
        auto inv = invariant_record(s, kSeed);
        long r = k % 2 == 1 ? 2 : 1;
        REQUIRE(inv.mu == k);
        REQUIRE(inv.tau == k);
        REQUIRE(inv.tau_es == k);
        REQUIRE(inv.kappa == k + 1);
        REQUIRE(inv.branches == r);
        REQUIRE(inv.delta == (k + r - 1) / 2);
        REQUIRE(multiplicity(s.f) == 2);
    }
}

TEST_CASE("D-series invariants", "[invariants]") {
    for (long k = 4; k <= 10; ++k) {
        auto s = SingularitySpec::d(k);
        auto inv = invariant_record(s, kSeed);
        long r = k % 2 == 0 ? 3 : 2;
        REQUIRE(inv.mu == k);
        REQUIRE(inv.tau == k);
        REQUIRE(inv.tau_es == k);
        REQUIRE(inv.kappa == k + 2);
        REQUIRE(inv.branches == r);
        REQUIRE(inv.delta == (k + r - 1) / 2);
        REQUIRE(multiplicity(s.f) == 3);
    }
}

TEST_CASE("E-series invariants", "[invariants]") {
    struct Row {
        long k, kappa, r, delta;
    };
    for (auto [k, kappa_v, r, delta] : {Row{6, 8, 1, 3}, Row{7, 9, 2, 4}, Row{8, 10, 1, 4}}) {
        auto s = SingularitySpec::e(k);
        auto inv = invariant_record(s, kSeed);
        REQUIRE(inv.mu == k);
        REQUIRE(inv.tau == k);
        REQUIRE(inv.tau_es == k);
        REQUIRE(inv.kappa == kappa_v);
        REQUIRE(inv.branches == r);
        REQUIRE(inv.delta == delta);
        REQUIRE(multiplicity(s.f) == 3);
    }
}

TEST_CASE("ordinary multiple point invariants", "[invariants]") {
    for (long k = 2; k <= 6; ++k) {
        auto s = SingularitySpec::m(k);
        auto inv = invariant_record(s, kSeed);
        REQUIRE(inv.mu == (k - 1) * (k - 1));
        REQUIRE(inv.tau == (k - 1) * (k - 1));
        REQUIRE(inv.tau_es == k * (k + 1) / 2 - 2);
        REQUIRE(inv.kappa == k * (k - 1));
        REQUIRE(inv.branches == k);
        REQUIRE(inv.delta == k * (k - 1) / 2);
        REQUIRE(multiplicity(s.f) == k);
    }
}

TEST_CASE("equisingularity ideal of an ordinary multiple point", "[invariants]") {
    // The partials contribute the two pure (k-1)-th powers on top of m^k.
    for (long k = 3; k <= 6; ++k) {
        Ideal I = equisingularity_ideal(SingularitySpec::m(k));
        const auto& hs = I.hilbert_samuel();
        REQUIRE(hs.mult == k - 1);
        REQUIRE(hs.degbound == k);
        REQUIRE(hs.colength == k * (k + 1) / 2 - 2);
    }
    // The node's partials already span the maximal ideal.
    REQUIRE(equisingularity_ideal(SingularitySpec::m(2)).colength() == 1);
}

TEST_CASE("semi-quasihomogeneous invariants", "[invariants]") {
    // x^7 - y^5 with weights (5,7)
    auto s = SingularitySpec::sqh(parse_polynomial("x^7 - y^5"), Weights{5, 7});
    auto inv = invariant_record(s, kSeed);
    REQUIRE(inv.mu == 24);
    REQUIRE(inv.tau == 24);
    REQUIRE(inv.kappa == 28);
    REQUIRE(inv.branches == 1);
    REQUIRE(inv.branches_exact);
    REQUIRE(inv.delta == 12);
    REQUIRE(multiplicity(s.f) == 5);

    // y^3 - 3x^8y + 3x^12 with weights (3,12): three smooth branches.
    auto d = SingularitySpec::sqh(parse_polynomial("y^3 - 3*x^8*y + 3*x^12"), Weights{3, 12});
    auto dinv = invariant_record(d, kSeed);
    REQUIRE(dinv.mu == 22);
    REQUIRE(dinv.tau == 22);
    REQUIRE(dinv.kappa == 24);
    REQUIRE(dinv.branches == 3);
    REQUIRE(dinv.delta == 12);

    // 7y^3 + 15x^7 - 21x^5y with weights (3,7): not quasihomogeneous.
    auto e = SingularitySpec::sqh(parse_polynomial("7*y^3 + 15*x^7 - 21*x^5*y"), Weights{3, 7});
    auto einv = invariant_record(e, kSeed);
    REQUIRE(einv.mu == 12);
    REQUIRE(einv.tau < einv.mu);
    REQUIRE(einv.kappa == 14);
    REQUIRE(einv.branches == 1);
    REQUIRE(einv.delta == 6);
    REQUIRE(einv.tau_es == 11);
    REQUIRE(einv.tau >= einv.tau_es);
}

TEST_CASE("kappa via Teissier and the genus trade-off", "[invariants]") {
    std::vector<SingularitySpec> specs;
    for (long k = 1; k <= 6; ++k) specs.push_back(SingularitySpec::a(k));
    for (long k = 4; k <= 7; ++k) specs.push_back(SingularitySpec::d(k));
    for (long k : {6L, 7L, 8L}) specs.push_back(SingularitySpec::e(k));
    for (long k = 2; k <= 5; ++k) specs.push_back(SingularitySpec::m(k));
    specs.push_back(SingularitySpec::sqh(parse_polynomial("x^5 - y^4"), Weights{4, 5}));
    specs.push_back(SingularitySpec::sqh(parse_polynomial("x^13 - y^3"), Weights{3, 13}));
    for (const auto& s : specs) {
        auto inv = invariant_record(s, kSeed);
        long mult = multiplicity(s.f);
        REQUIRE(inv.kappa == inv.mu + mult - 1);
        REQUIRE(2 * inv.delta == inv.mu + inv.branches - 1);
        REQUIRE(inv.kappa - 2 * inv.delta == mult - inv.branches);
        REQUIRE(mult >= inv.branches);
    }
}

TEST_CASE("kappa samples are stable across pencil parameters", "[invariants]") {
    for (const auto& s : {SingularitySpec::a(4), SingularitySpec::e(7), SingularitySpec::m(4)}) {
        auto samples = kappa_samples(s.f, kSeed);
        REQUIRE(samples.size() == 7);
        for (const auto& v : samples) {
            REQUIRE(v);
            REQUIRE(*v == *samples.front());
        }
        auto [g, value] = kappa_polar(s.f, kSeed);
        REQUIRE(value == *samples.front());
        REQUIRE(intersection_multiplicity(s.f, g) == value);
        // The polar is a combination of the partials, hence in the base ideal.
        REQUIRE(tjurina_ideal(s.f).contains(g));
    }
}

TEST_CASE("intersection multiplicity", "[invariants]") {
    Polynomial x = Polynomial::variable_x(), y = Polynomial::variable_y();
    REQUIRE(intersection_multiplicity(parse_polynomial("x^4 - y^4"), x * x) == 8);
    REQUIRE(intersection_multiplicity(parse_polynomial("x^2 - y^3"), x) == 3);
    REQUIRE(intersection_multiplicity(parse_polynomial("x^2 - y^3"), y) == 2);
    REQUIRE(intersection_multiplicity(parse_polynomial("x^2 - y^3"), x + y) == 2);
    REQUIRE(intersection_multiplicity(parse_polynomial("y^3 - 3*x^8*y + 3*x^12"),
                                      parse_polynomial("y - x^4")) == 12);
    // A common component means infinite intersection, encoded as nullopt.
    REQUIRE_FALSE(intersection_multiplicity(parse_polynomial("x^2 - y^2"), x - y));
    REQUIRE_FALSE(intersection_multiplicity(Polynomial(), x));
    // Units meet nothing: the ideal is the whole ring.
    REQUIRE(intersection_multiplicity(parse_polynomial("x^2 - y^3"),
                                      Polynomial(Rational(1))) == 0);
}

TEST_CASE("intersection multiplicity is additive over products", "[invariants]") {
    Polynomial f = parse_polynomial("x^2 - y^3");
    Polynomial x = Polynomial::variable_x(), y = Polynomial::variable_y();
    auto i = [&](const Polynomial& g) { return *intersection_multiplicity(f, g); };
    REQUIRE(i(x * y * (x + y)) == i(x) + i(y) + i(x + y));
    REQUIRE(i(x * x * y) == 2 * i(x) + i(y));
    Polynomial g = parse_polynomial("x + y^2");
    REQUIRE(i(g * g) == 2 * i(g));
}

TEST_CASE("convenient and reduced leading forms", "[invariants]") {
    REQUIRE(is_convenient_sqh(parse_polynomial("x^3 - y^4"), Weights{4, 3}));
    REQUIRE(is_convenient_sqh(parse_polynomial("x^7 - y^5"), Weights{5, 7}));
    // Higher-order terms do not disturb convenience of the leading form.
    REQUIRE(is_convenient_sqh(parse_polynomial("x^3 - y^4 + y^9"), Weights{4, 3}));
    // No pure y-power in the leading form.
    REQUIRE_FALSE(is_convenient_sqh(parse_polynomial("x^3 - x^2*y"), Weights{1, 1}));
    // Convenient but with a squared factor.
    Polynomial x = Polynomial::variable_x(), y = Polynomial::variable_y();
    REQUIRE_FALSE(is_convenient_sqh(pow(x + y, 2) * (x - y), Weights{1, 1}));
    // Weighted degree not divisible by both weights.
    REQUIRE_FALSE(is_convenient_sqh(parse_polynomial("x^3 - y^3"), Weights{2, 3}));
}

TEST_CASE("branch counts", "[invariants]") {
    REQUIRE(branch_count(SingularitySpec::a(3)) == 2);
    REQUIRE(branch_count(SingularitySpec::a(4)) == 1);
    REQUIRE(branch_count(SingularitySpec::d(6)) == 3);
    REQUIRE(branch_count(SingularitySpec::d(7)) == 2);
    REQUIRE(branch_count(SingularitySpec::e(7)) == 2);
    REQUIRE(branch_count(SingularitySpec::m(5)) == 5);

    // x^6 - y^4 = (x^3 - y^2)(x^3 + y^2): two cusp branches.
    auto bc = branch_count_sqh(parse_polynomial("x^6 - y^4"), Weights{4, 6});
    REQUIRE(bc.count == 2);
    REQUIRE(bc.exact);
    // Degenerate leading form: the count is a lower bound only.
    Polynomial x = Polynomial::variable_x(), y = Polynomial::variable_y();
    auto deg = branch_count_sqh(pow(x - y, 2), Weights{2, 2});
    REQUIRE(deg.count == 1);
    REQUIRE_FALSE(deg.exact);
}

TEST_CASE("class constructors validate their arguments", "[invariants]") {
    REQUIRE_THROWS_AS(SingularitySpec::a(0), UnsupportedClass);
    REQUIRE_THROWS_AS(SingularitySpec::d(3), UnsupportedClass);
    REQUIRE_THROWS_AS(SingularitySpec::e(5), UnsupportedClass);
    REQUIRE_THROWS_AS(SingularitySpec::e(9), UnsupportedClass);
    REQUIRE_THROWS_AS(SingularitySpec::m(1), UnsupportedClass);
    // Weighted order must equal p*q.
    REQUIRE_THROWS_AS(SingularitySpec::sqh(parse_polynomial("x^3 - y^5"), Weights{3, 5}),
                      UnsupportedClass);
    // Degenerate leading form.
    Polynomial x = Polynomial::variable_x(), y = Polynomial::variable_y();
    REQUIRE_THROWS_AS(SingularitySpec::sqh(pow(x + y, 2) * (x - y), Weights{1, 1}),
                      UnsupportedClass);
    REQUIRE(SingularitySpec::a(3).name() == "A3");
    REQUIRE(SingularitySpec::sqh(parse_polynomial("x^7 - y^5"), Weights{5, 7}).name() ==
            "sqh(5,7)");
}

TEST_CASE("base ideal families", "[invariants]") {
    auto s = SingularitySpec::m(4);
    REQUIRE(base_ideal(s, IdealFamily::Ea).colength() == 9);
    REQUIRE(base_ideal(s, IdealFamily::Es).colength() == 8);
    // For the simple classes both families coincide.
    auto a5 = SingularitySpec::a(5);
    REQUIRE(base_ideal(a5, IdealFamily::Ea).colength() ==
            base_ideal(a5, IdealFamily::Es).colength());
}
