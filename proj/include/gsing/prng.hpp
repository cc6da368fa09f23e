#pragma once

#include <cstdint>
#include <random>

#include "rational.hpp"

namespace gsing {

/// Deterministic random source. mt19937_64 output is fully pinned by the
/// C++ standard; we avoid std distributions (whose mapping is not) and
/// reduce by hand so identical seeds give identical streams everywhere.
class Prng {
  public:
    explicit Prng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniformish integer in [lo, hi]; span is tiny so modulo bias is
    /// irrelevant for sampling purposes.
    long next_in(long lo, long hi) {
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Nonzero rational with |numerator| <= bound and 1 <= denominator <= bound.
    Rational next_rational(long bound = 97) {
        long num = 0;
        while (num == 0) num = next_in(-bound, bound);
        long den = next_in(1, bound);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    /// Nonzero integer coefficient in [-bound, bound].
    long next_coeff(long bound) {
        long c = 0;
        while (c == 0) c = next_in(-bound, bound);
        return c;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace gsing
