// Acceptance gate: recomputes every registered fact through the public CLI
// entry point, buckets the checks into named gates, and prints one verdict
// line per gate.
//
// Two table entries are known to disagree with recomputation. They are
// printed as FAIL with their counterexamples, tagged "documented", and
// excluded from the exit code as long as the disagreement reproduces exactly
// as recorded here; any drift from the recorded signature is an ordinary
// failure. The exit code counts unexpected failures only.

#include <gsing/cli.hpp>

#include <cstdio>
#include <string>
#include <vector>

using namespace gsing;
using Json = nlohmann::json;

namespace {

int unexpected = 0;
int documented = 0;

void gate(bool pass, const std::string& name, const std::string& detail) {
    std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!pass) ++unexpected;
}

void documented_gap(bool reproduced, const std::string& name, const std::string& detail) {
    if (reproduced) {
        std::printf("[FAIL] %s (documented): %s\n", name.c_str(), detail.c_str());
        ++documented;
    } else {
        std::printf("[FAIL] %s: recorded disagreement did not reproduce; %s\n", name.c_str(),
                    detail.c_str());
        ++unexpected;
    }
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

struct Check {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

// Gate index per check name, mirroring the registry's naming scheme.
int bucket_of(const std::string& n) {
    if (starts_with(n, "gamma/M")) return 1;
    if (starts_with(n, "gamma/")) return 0;
    if (starts_with(n, "tau-ci/M")) return 2;
    if (starts_with(n, "tau-ci/")) return 0;
    if (starts_with(n, "sqh/")) return 3;
    if (starts_with(n, "hilbert/")) return 4;
    for (const char* p : {"sandwich/", "alpha-monotone/", "kappa-stable/", "kappa-teissier/",
                          "kappa/", "branches/", "delta-lt-tau-es/", "tau-eq-mu/", "wt-order/",
                          "corpus/", "search/", "lambda/"})
        if (starts_with(n, p)) return 5;
    return -1;
}

// Every class exercised by the registry, in registry order.
std::vector<SingularitySpec> all_specs() {
    std::vector<SingularitySpec> specs;
    for (long k = 1; k <= 10; ++k) specs.push_back(SingularitySpec::a(k));
    for (long k = 4; k <= 10; ++k) specs.push_back(SingularitySpec::d(k));
    for (long k = 6; k <= 8; ++k) specs.push_back(SingularitySpec::e(k));
    for (long k = 2; k <= 9; ++k) specs.push_back(SingularitySpec::m(k));
    for (long q : {5L, 8L, 12L})
        specs.push_back(SingularitySpec::sqh(
            Polynomial::monomial({q, 0}) - Polynomial::monomial({0, q - 1}), Weights{q - 1, q}));
    specs.push_back(
        SingularitySpec::sqh(Polynomial::monomial({7, 0}) - Polynomial::monomial({0, 5}),
                             Weights{5, 7}));
    specs.push_back(
        SingularitySpec::sqh(Polynomial::monomial({13, 0}) - Polynomial::monomial({0, 3}),
                             Weights{3, 13}));
    specs.push_back(SingularitySpec::sqh(parse_polynomial("y^3 - 3*x^8*y + 3*x^12"),
                                         Weights{3, 12}));
    specs.push_back(SingularitySpec::sqh(parse_polynomial("7*y^3 + 15*x^7 - 21*x^5*y"),
                                         Weights{3, 7}));
    return specs;
}

}  // namespace

int main() {
    std::printf("recomputing every registered fact (seed 42)\n");
    std::vector<std::string> args{"verify-paper", "--seed", "42"};
    cli::RunResult r1 = cli::run(args);
    cli::RunResult r2 = cli::run(args);

    Json doc;
    try {
        doc = Json::parse(r1.out);
    } catch (const std::exception& e) {
        std::printf("[FAIL] verify output is not parseable JSON: %s\n", e.what());
        return 1;
    }

    std::vector<Check> checks;
    long registry_failures = 0;
    for (const auto& c : doc["result"]["checks"]) {
        Check ch{c["name"].get<std::string>(), c["pass"].get<bool>(),
                 c["expected"].get<std::string>(), c["actual"].get<std::string>()};
        if (!ch.pass) ++registry_failures;
        checks.push_back(std::move(ch));
    }
    bool bookkeeping = doc["result"]["total"].get<long>() == static_cast<long>(checks.size()) &&
                       doc["result"]["failures"].get<long>() == registry_failures &&
                       (r1.exit_code == 0) == (registry_failures == 0);
    if (!bookkeeping) {
        std::printf("[FAIL] verify bookkeeping: total/failures/exit code disagree\n");
        ++unexpected;
    }

    struct GateSpec {
        const char* name;
        long expected_count;  // -1: whatever remains
        const char* detail;
    };
    const GateSpec gates[] = {
        {"simple-singularity-tables", 100,
         "gamma and tau-ci closed forms for A1..A10, D4..D10, E6..E8"},
        {"ordinary-multiple-points", 67,
         "gamma closed forms, strict lower-bound gaps, and the <y^(k-1), x^2> witness"},
        {"tau-ci-closed-forms", 8, "largest complete-intersection colength for M2..M9"},
        {"sqh-examples", 39, "witness certificates and bracket placement for five families"},
        {"hilbert-samuel-goldens", 27, "multiplicity, degree bound, and colength tables"},
        {"invariant-property-suites", -1,
         "sandwich bounds, alpha monotonicity, kappa stability, Teissier identity, branch "
         "counts, ordering-independence corpus"},
    };

    std::vector<std::vector<const Check*>> buckets(6);
    long uncovered = 0;
    for (const auto& ch : checks) {
        int b = bucket_of(ch.name);
        if (b < 0) {
            std::printf("  unbucketed check: %s\n", ch.name.c_str());
            ++uncovered;
            continue;
        }
        buckets[static_cast<std::size_t>(b)].push_back(&ch);
    }
    if (uncovered > 0) {
        std::printf("[FAIL] gate coverage: %ld checks match no gate\n", uncovered);
        ++unexpected;
    }

    for (int b = 0; b < 6; ++b) {
        const auto& g = gates[b];
        const auto& bucket = buckets[static_cast<std::size_t>(b)];
        long failed = 0;
        for (const Check* ch : bucket)
            if (!ch->pass) ++failed;
        bool count_ok = g.expected_count < 0 ||
                        static_cast<long>(bucket.size()) == g.expected_count;
        char head[160];
        std::snprintf(head, sizeof head, "%zu checks (%s)", bucket.size(), g.detail);
        if (failed == 0 && count_ok) {
            gate(true, g.name, head);
        } else if (!count_ok) {
            std::snprintf(head, sizeof head, "expected %ld checks, found %zu", g.expected_count,
                          bucket.size());
            gate(false, g.name, head);
        } else {
            std::snprintf(head, sizeof head, "%ld of %zu checks failed", failed, bucket.size());
            gate(false, g.name, head);
            long shown = 0;
            for (const Check* ch : bucket) {
                if (ch->pass || shown >= 10) continue;
                std::printf("       %s: expected %s, got %s\n", ch->name.c_str(),
                            ch->expected.c_str(), ch->actual.c_str());
                ++shown;
            }
        }

        if (b == 4) {
            // The registered Hilbert-Samuel table rows for the E series. The
            // E8 row's degree bound disagrees with recomputation: for
            // I = <x^2, y^4> every degree-5 monomial is divisible by x^2 or
            // by y^4, so m^5 is contained in I, while x*y^3 is not; the bound
            // is 5, not 6.
            struct Row {
                long k, mult, degbound, colength;
            };
            const Row rows[] = {{6, 2, 4, 6}, {7, 2, 5, 7}, {8, 2, 6, 8}};
            bool e67_ok = true;
            long e8_computed = 0;
            for (const Row& row : rows) {
                Ideal I = equisingularity_ideal(SingularitySpec::e(row.k));
                const auto& hs = I.hilbert_samuel();
                if (row.k == 8) {
                    e8_computed = hs.degbound;
                    if (hs.mult != row.mult || hs.colength != row.colength) e67_ok = false;
                } else if (hs.mult != row.mult || hs.degbound != row.degbound ||
                           hs.colength != row.colength) {
                    e67_ok = false;
                }
            }
            if (!e67_ok) {
                std::printf("[FAIL] hilbert-samuel-goldens/e-series-recomputation\n");
                ++unexpected;
            }
            documented_gap(e8_computed == 5, "hilbert-samuel-goldens/registered-e8-degbound",
                           "registered degree bound 6, computed " + std::to_string(e8_computed) +
                               "; every degree-5 monomial is divisible by x^2 or y^4 while "
                               "x*y^3 is not in <x^2, y^4>, so 5 is correct");
        }

        if (b == 5) {
            // The registered inequality kappa <= 2*delta. Recomputation gives
            // kappa - 2*delta = mult - r >= 0 on every class, so the
            // registered direction fails whenever mult > r.
            long total = 0, violations = 0;
            bool identity_ok = true, first_is_a2 = false;
            std::string first;
            for (const auto& spec : all_specs()) {
                auto inv = invariant_record(spec, 42);
                long mult = multiplicity(spec.f);
                ++total;
                bool holds = inv.kappa <= 2 * inv.delta;
                if (!holds && first.empty()) {
                    first = spec.name();
                    first_is_a2 = first == "A2" && inv.kappa == 3 && inv.delta == 1;
                }
                if (!holds) ++violations;
                if (holds != (mult == inv.branches)) identity_ok = false;
                if (inv.kappa - 2 * inv.delta != mult - inv.branches) identity_ok = false;
                if (mult < inv.branches) identity_ok = false;
            }
            documented_gap(violations == 17 && total == 35 && identity_ok && first_is_a2,
                           "invariant-property-suites/registered-kappa-vs-2delta",
                           "registered inequality kappa <= 2*delta fails for " +
                               std::to_string(violations) + " of " + std::to_string(total) +
                               " classes, first " + first +
                               " with kappa=3 and 2*delta=2; recomputation gives "
                               "kappa - 2*delta = mult - r >= 0 on all of them");
        }
    }

    gate(r1.exit_code == 0 && r2.exit_code == 0 && r1.out == r2.out && !r1.out.empty(),
         "determinism", "two verify-paper runs byte-identical");

    std::printf("search instrumentation: %ld admissible-pair checks, %ld complete "
                "intersections certified\n",
                doc["result"]["intersection_checks"].get<long>(),
                doc["result"]["complete_intersections_visited"].get<long>());
    std::printf("summary: %zu checks recomputed, %d documented table disagreements, "
                "%d unexpected failures\n",
                checks.size(), documented, unexpected);
    std::printf("exit code counts unexpected failures only\n");
    return unexpected == 0 ? 0 : 1;
}
