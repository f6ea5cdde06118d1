// Tests for formal integration: the canonical splitting F = d(G) + R must
// reproduce exact inputs, expose non-exact remainders deterministically, and
// stay linear so pooled cancellation of remainders is sound.

#include "akns/diffpoly.hpp"
#include "akns/integrate.hpp"
#include "akns/io.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace akns;
using akns::testutil::Rng;

TEST_CASE("integrate_exact inverts d_total on random polynomials") {
    Rng rng(0x1A7E6AA7u);
    int nontrivial = 0;
    for (int trial = 0; trial < 120; ++trial) {
        DiffPoly f = testutil::random_poly(rng, 3);
        // Strip constants: d kills them, so they cannot be recovered.
        DiffPoly df = d_total(f);
        DiffPoly g = integrate_exact(df);
        CHECK(d_total(g) == df);
        if (!df.is_zero()) ++nontrivial;
    }
    CHECK(nontrivial > 60);
}

TEST_CASE("integrate_with_remainder splits exact and non-exact parts") {
    DiffPoly p = DiffPoly::jet(Field::P, 0);
    DiffPoly qx = DiffPoly::jet(Field::Q, 1);

    SUBCASE("exact input has zero remainder") {
        DiffPoly f = d_total(p * p * qx);
        auto [g, r] = integrate_with_remainder(f);
        CHECK(r.is_zero());
        CHECK(d_total(g) == f);
    }

    SUBCASE("p*q_x is not exact") {
        DiffPoly f = p * qx;
        auto [g, r] = integrate_with_remainder(f);
        CHECK(!r.is_zero());
        CHECK(d_total(g) + r == f);
        CHECK_THROWS_AS(integrate_exact(f), NotExactError);
    }

    SUBCASE("p*q_x + p_x*q is exact") {
        DiffPoly f = p * qx + DiffPoly::jet(Field::P, 1) * DiffPoly::jet(Field::Q, 0);
        DiffPoly g = integrate_exact(f);
        CHECK(d_total(g) == f);
        CHECK(g == p * DiffPoly::jet(Field::Q, 0));
    }

    SUBCASE("odd exact combination") {
        DiffPoly ab = DiffPoly::jet(Field::Alpha, 0) * DiffPoly::jet(Field::Beta, 0);
        DiffPoly f = d_total(ab * DiffPoly::jet(Field::P, 0));
        DiffPoly g = integrate_exact(f);
        CHECK(d_total(g) == f);
    }
}

TEST_CASE("the splitting is linear") {
    // Linearity is what lets remainders of separately-integrated blocks
    // cancel formally when their sum is exact.
    Rng rng(0x11EA4171u);
    for (int trial = 0; trial < 60; ++trial) {
        DiffPoly a = testutil::random_poly(rng, 3);
        DiffPoly b = testutil::random_poly(rng, 3);
        auto [ga, ra] = integrate_with_remainder(a);
        auto [gb, rb] = integrate_with_remainder(b);
        auto [gs, rs] = integrate_with_remainder(a + b);
        CHECK(gs == ga + gb);
        CHECK(rs == ra + rb);
        auto [gk, rk] = integrate_with_remainder(a.scaled(Rational(-7, 3)));
        CHECK(gk == ga.scaled(Rational(-7, 3)));
        CHECK(rk == ra.scaled(Rational(-7, 3)));
    }
}

TEST_CASE("remainder of a non-exact block is reproducible") {
    // The block p*beta*beta_x appears when rows of a nonlocal operator are
    // integrated separately; its remainder must come out the same every time
    // so that matching blocks cancel.
    DiffPoly f = DiffPoly::jet(Field::P, 0) * DiffPoly::jet(Field::Beta, 0) *
                 DiffPoly::jet(Field::Beta, 1);
    auto [g1, r1] = integrate_with_remainder(f);
    auto [g2, r2] = integrate_with_remainder(f);
    CHECK(g1 == g2);
    CHECK(r1 == r2);
    CHECK(d_total(g1) + r1 == f);
    CHECK(!r1.is_zero());
    // Variational test oracle: a density is exact only if all six variational
    // derivatives vanish.
    bool all_null = true;
    for (Field u : kAllFields)
        if (!euler_variational(f, u).is_zero()) all_null = false;
    CHECK(!all_null);
}

TEST_CASE("variational nullity agrees with exactness on random inputs") {
    Rng rng(0x0DDC0DECu);
    int exact_count = 0;
    int inexact_count = 0;
    for (int trial = 0; trial < 120; ++trial) {
        DiffPoly f = testutil::random_poly(rng, 2);
        if (f.has_constant_term()) continue;  // constants integrate to c*x, out of ring
        bool null = true;
        for (Field u : kAllFields)
            if (!euler_variational(f, u).is_zero()) null = false;
        auto [g, r] = integrate_with_remainder(f);
        CHECK(d_total(g) + r == f);
        if (r.is_zero()) {
            CHECK(null);
            ++exact_count;
        } else {
            CHECK(!null);
            ++inexact_count;
        }
    }
    CHECK(inexact_count > 20);
    (void)exact_count;
}

TEST_CASE("NotExactError carries integrand and remainder") {
    DiffPoly f = DiffPoly::jet(Field::P, 0) * DiffPoly::jet(Field::Q, 1);
    try {
        integrate_exact(f);
        FAIL("expected NotExactError");
    } catch (const NotExactError& e) {
        CHECK(e.integrand == f);
        CHECK(!e.remainder.is_zero());
    }
}
