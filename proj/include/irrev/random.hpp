#ifndef IRREV_RANDOM_HPP
#define IRREV_RANDOM_HPP

#include "irrev/polynomial.hpp"

#include <cstdint>

namespace irrev {

// Deterministic across platforms; one 64-bit seed drives every randomized
// check so reports are byte-identical for a given seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// Rational with numerator in [-max_num, max_num] and denominator in
// [1, max_den]; small denominators keep positivity checks exact and cheap.
Rational random_small_rational(SplitMix64& rng, long max_num = 8, long max_den = 64);

// Random polynomial in canonical form: up to `terms` monomials of total
// degree <= max_degree with small rational coefficients.
Polynomial random_polynomial(SplitMix64& rng, std::size_t dim, unsigned max_degree,
                             unsigned terms);

} // namespace irrev

#endif
