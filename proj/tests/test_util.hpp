#pragma once
// Shared helpers for the test suite: a deterministic RNG (independent of
// libstdc++ distribution implementations) and a pseudo-random family of
// differential polynomials used by the property tests.

#include "akns/diffpoly.hpp"

#include <random>
#include <vector>

namespace akns::testutil {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }
    // Uniform integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    // Uniform double in [0, 1), deterministic across platforms.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 eng_;
};

// Random small rational with numerator in [-4,4]\{0} and denominator in {1,2,3}.
inline Rational random_coeff(Rng& rng) {
    long num = 0;
    while (num == 0) num = rng.range(-4, 4);
    Rational q(num, rng.range(1, 3));
    q.canonicalize();
    return q;
}

// Random differential polynomial: up to `max_terms` terms, jet orders <= 2,
// total degree per term <= 3, mu powers <= 1.
inline DiffPoly random_poly(Rng& rng, int max_terms = 4) {
    DiffPoly out;
    int terms = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms))) + 1;
    for (int t = 0; t < terms; ++t) {
        DiffPoly term = DiffPoly::constant(random_coeff(rng));
        if (rng.below(3) == 0) term = term * DiffPoly::mu();
        int degree = static_cast<int>(rng.below(3)) + 1;
        for (int d = 0; d < degree; ++d) {
            Field f = kAllFields[rng.below(6)];
            int order = static_cast<int>(rng.below(3));
            term = term * DiffPoly::jet(f, order);
        }
        out += term;  // odd repetitions annihilate on their own
    }
    return out;
}

// Random polynomial with homogeneous Grassmann parity.
inline DiffPoly random_homogeneous_poly(Rng& rng, bool odd, int max_terms = 4) {
    for (;;) {
        DiffPoly out;
        int terms = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms))) + 1;
        for (int t = 0; t < terms; ++t) {
            DiffPoly term = DiffPoly::constant(random_coeff(rng));
            int even_deg = static_cast<int>(rng.below(2)) + (odd ? 0 : 1);
            for (int d = 0; d < even_deg; ++d)
                term = term * DiffPoly::jet(kEvenFields[rng.below(4)], static_cast<int>(rng.below(3)));
            int odd_deg = odd ? 1 : (rng.below(2) ? 2 : 0);
            for (int d = 0; d < odd_deg; ++d)
                term = term * DiffPoly::jet(kOddFields[rng.below(2)], static_cast<int>(rng.below(3)));
            out += term;
        }
        Parity p = out.parity();
        if (p == (odd ? Parity::Odd : Parity::Even)) return out;
    }
}

}  // namespace akns::testutil
