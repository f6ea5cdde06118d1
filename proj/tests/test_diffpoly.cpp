// Property tests for the graded differential polynomial ring: the product is
// associative and graded-commutative, d_total is an even derivation, graded
// partials obey the side conventions, and the variational derivative kills
// total derivatives.

#include "akns/diffpoly.hpp"
#include "akns/io.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace akns;
using akns::testutil::Rng;

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(0xD1FFB011u);
    for (int trial = 0; trial < 200; ++trial) {
        DiffPoly a = testutil::random_poly(rng);
        DiffPoly b = testutil::random_poly(rng);
        DiffPoly c = testutil::random_poly(rng);
        CHECK((a + b) - b == a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("graded commutativity of homogeneous polynomials") {
    Rng rng(0xC0117A7Eu);
    for (int trial = 0; trial < 200; ++trial) {
        bool a_odd = rng.below(2) == 1;
        bool b_odd = rng.below(2) == 1;
        DiffPoly a = testutil::random_homogeneous_poly(rng, a_odd);
        DiffPoly b = testutil::random_homogeneous_poly(rng, b_odd);
        DiffPoly ab = a * b;
        DiffPoly ba = b * a;
        CHECK(ab == ((a_odd && b_odd) ? -ba : ba));
    }
}

TEST_CASE("d_total is a derivation") {
    Rng rng(0x5EEDD00Du);
    for (int trial = 0; trial < 200; ++trial) {
        DiffPoly a = testutil::random_poly(rng);
        DiffPoly b = testutil::random_poly(rng);
        CHECK(d_total(a * b) == d_total(a) * b + a * d_total(b));
        CHECK(d_total(a + b) == d_total(a) + d_total(b));
    }
}

TEST_CASE("d_total raises weight by one and preserves mu and field content") {
    Rng rng(0x77E16477u);
    for (int trial = 0; trial < 100; ++trial) {
        DiffPoly a = testutil::random_homogeneous_poly(rng, rng.below(2) == 1);
        DiffPoly da = d_total(a);
        for (const auto& [key, coeff] : a.terms()) {
            (void)coeff;
            CHECK(key.weight() >= 0);
        }
        if (a.term_count() == 1 && !da.is_zero()) {
            int w = a.terms().begin()->first.weight();
            auto counts = a.terms().begin()->first.field_counts();
            int mu = a.terms().begin()->first.mu_pow;
            for (const auto& [key, coeff] : da.terms()) {
                (void)coeff;
                CHECK(key.weight() == w + 1);
                CHECK(key.field_counts() == counts);
                CHECK(key.mu_pow == mu);
            }
        }
    }
}

TEST_CASE("generic even derivation satisfies the Leibniz rule") {
    Rng rng(0xDE117A5Au);
    // Image map sending each base field to a random even polynomial and
    // extended through prolongation: this is how flow derivatives act.
    for (int trial = 0; trial < 50; ++trial) {
        std::array<DiffPoly, 6> base_image;
        for (Field f : kAllFields) {
            base_image[static_cast<std::size_t>(f)] =
                testutil::random_homogeneous_poly(rng, field_is_odd(f), 3);
        }
        DerivationImage image = [&](const Jet& j) {
            return d_total_n(base_image[static_cast<std::size_t>(j.field)], j.order);
        };
        DiffPoly a = testutil::random_poly(rng, 3);
        DiffPoly b = testutil::random_poly(rng, 3);
        CHECK(derive(a * b, image) == derive(a, image) * b + a * derive(b, image));
    }
}

TEST_CASE("graded partial side conventions on alpha*beta") {
    DiffPoly ab = DiffPoly::jet(Field::Alpha, 0) * DiffPoly::jet(Field::Beta, 0);
    DiffPoly alpha = DiffPoly::jet(Field::Alpha, 0);
    DiffPoly beta = DiffPoly::jet(Field::Beta, 0);
    CHECK(partial(ab, Jet{Field::Alpha, 0}, Side::Left) == beta);
    CHECK(partial(ab, Jet{Field::Alpha, 0}, Side::Right) == -beta);
    CHECK(partial(ab, Jet{Field::Beta, 0}, Side::Left) == -alpha);
    CHECK(partial(ab, Jet{Field::Beta, 0}, Side::Right) == alpha);
}

TEST_CASE("partials of even jets ignore side and count multiplicity") {
    DiffPoly p = DiffPoly::jet(Field::P, 0);
    DiffPoly p2q = p * p * DiffPoly::jet(Field::Q, 0);
    DiffPoly expect = DiffPoly::integer(2) * p * DiffPoly::jet(Field::Q, 0);
    CHECK(partial(p2q, Jet{Field::P, 0}, Side::Left) == expect);
    CHECK(partial(p2q, Jet{Field::P, 0}, Side::Right) == expect);
    CHECK(partial(p2q, Jet{Field::P, 1}, Side::Left).is_zero());
}

TEST_CASE("left and right partials differ by word-parity sign") {
    // For an odd variable v and homogeneous f: dR(f)/dv = (-1)^(|f|-1) dL(f)/dv.
    Rng rng(0x51DE51DEu);
    for (int trial = 0; trial < 100; ++trial) {
        bool odd = rng.below(2) == 1;
        DiffPoly f = testutil::random_homogeneous_poly(rng, odd);
        for (Field v : kOddFields) {
            for (int o = 0; o <= 2; ++o) {
                DiffPoly l = partial(f, Jet{v, o}, Side::Left);
                DiffPoly r = partial(f, Jet{v, o}, Side::Right);
                CHECK(r == (odd ? l : -l));
            }
        }
    }
}

TEST_CASE("variational derivative annihilates total derivatives") {
    Rng rng(0xE111E700u);
    for (int trial = 0; trial < 200; ++trial) {
        DiffPoly f = testutil::random_poly(rng, 3);
        DiffPoly df = d_total(f);
        for (Field u : kAllFields) {
            CHECK(euler_variational(df, u).is_zero());
        }
    }
}

TEST_CASE("variational derivative of -2*alpha*beta with the left convention") {
    DiffPoly f = DiffPoly::integer(-2) * DiffPoly::jet(Field::Alpha, 0) *
                 DiffPoly::jet(Field::Beta, 0);
    DiffPoly expect = DiffPoly::integer(-2) * DiffPoly::jet(Field::Beta, 0);
    CHECK(euler_variational(f, Field::Alpha) == expect);
    DiffPoly expect_b = DiffPoly::integer(2) * DiffPoly::jet(Field::Alpha, 0);
    CHECK(euler_variational(f, Field::Beta) == expect_b);
}

TEST_CASE("h has the expected terms and behaviour") {
    DiffPoly h = make_h();
    CHECK(h.term_count() == 4);
    CHECK(h.parity() == Parity::Even);
    CHECK(h.max_mu_pow() == 1);
    // Substituting mu = 0 kills h entirely.
    CHECK(h.subst_mu(0).is_zero());
    DiffPoly manual = DiffPoly::mu(1) *
                      (DiffPoly::jet(Field::P, 0) * DiffPoly::jet(Field::S, 0) +
                       DiffPoly::jet(Field::Q, 0) * DiffPoly::jet(Field::R, 0) +
                       DiffPoly::jet(Field::R, 0) * DiffPoly::jet(Field::S, 0) -
                       DiffPoly::integer(2) * DiffPoly::jet(Field::Alpha, 0) *
                           DiffPoly::jet(Field::Beta, 0));
    CHECK(h == manual);
    // Every term of h has weight 1 under the grading where mu has weight -1.
    for (const auto& [key, coeff] : h.terms()) {
        (void)coeff;
        CHECK(key.weight() == 1);
    }
}

TEST_CASE("subst_mu and scaling") {
    Rng rng(0x5CA1E000u);
    for (int trial = 0; trial < 50; ++trial) {
        DiffPoly f = testutil::random_poly(rng);
        CHECK(f.scaled(Rational(0)).is_zero());
        CHECK(f.scaled(Rational(3)) == DiffPoly::integer(3) * f);
        DiffPoly f0 = f.subst_mu(Rational(1));
        CHECK(!f0.contains_mu());
    }
}
