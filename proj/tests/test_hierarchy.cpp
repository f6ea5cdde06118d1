// Hierarchy oracle tests: the recursion's internal consistency (derivative
// identities, parity, weight grading), frozen level values verified by hand
// from the recursion, the flows, the conserved-combination identity, and the
// zero-curvature certification.

#include "akns/hierarchy.hpp"
#include "akns/io.hpp"
#include "akns/parse.hpp"

#include <doctest.h>

using namespace akns;

namespace {
const std::vector<HierarchyLevel>& levels6() {
    static const std::vector<HierarchyLevel> lv = derive_levels(5);
    return lv;
}
}  // namespace

TEST_CASE("level 0 and level 1 values") {
    const auto& lv = levels6();
    CHECK(lv[0].a == DiffPoly::integer(1));
    CHECK(lv[0].e == DiffPoly::integer(1));
    CHECK(lv[0].b.is_zero());
    CHECK(lv[0].rho.is_zero());
    CHECK(lv[1].a.is_zero());
    CHECK(lv[1].e.is_zero());
    CHECK(lv[1].b == parse_poly("p"));
    CHECK(lv[1].c == parse_poly("q"));
    CHECK(lv[1].rho == parse_poly("alpha"));
    CHECK(lv[1].delta == parse_poly("beta"));
    // The f1/g1 values force the coupling fields in: p+2r and q+2s (the
    // reference list's p+r, q+s breaks e1 = 0 and the time-matrix entries).
    CHECK(lv[1].f == parse_poly("p + 2*r"));
    CHECK(lv[1].g == parse_poly("q + 2*s"));
}

TEST_CASE("level 2 values") {
    const auto& lv = levels6();
    CHECK(lv[2].a == parse_poly("-1/2*p*q - alpha*beta"));
    CHECK(lv[2].b == parse_poly("1/2*p_x - h*p"));
    CHECK(lv[2].c == parse_poly("-1/2*q_x - h*q"));
    CHECK(lv[2].e == parse_poly("-(p*s + q*r + r*s + 1/2*p*q - alpha*beta)"));
    CHECK(lv[2].f == parse_poly("1/2*p_x + r_x - h*p - 2*h*r"));
    CHECK(lv[2].g == parse_poly("-1/2*q_x - s_x - h*q - 2*h*s"));
    CHECK(lv[2].rho == parse_poly("alpha_x - h*alpha"));
    CHECK(lv[2].delta == parse_poly("-beta_x - h*beta"));
}

TEST_CASE("level 3 odd coefficients") {
    const auto& lv = levels6();
    CHECK(lv[3].rho == parse_poly("alpha_xx - h_x*alpha - 2*h*alpha_x - 1/2*p*q*alpha "
                                  "+ h^2*alpha + 1/2*p_x*beta + p*beta_x"));
    CHECK(lv[3].delta == parse_poly("beta_xx + h_x*beta + 2*h*beta_x - 1/2*p*q*beta "
                                    "+ h^2*beta + 1/2*q_x*alpha + q*alpha_x"));
}

TEST_CASE("derivative identities hold at every level") {
    const auto& lv = levels6();
    DiffPoly p = parse_poly("p"), q = parse_poly("q"), r = parse_poly("r"),
             s = parse_poly("s"), al = parse_poly("alpha"), be = parse_poly("beta");
    for (const HierarchyLevel& l : lv) {
        CHECK(d_total(l.a) == p * l.c - q * l.b + al * l.delta + be * l.rho);
        CHECK(d_total(l.e) == r * l.c - s * l.b + (p + r) * l.g - (q + s) * l.f -
                                  al * l.delta - be * l.rho);
    }
}

TEST_CASE("levels are parity- and weight-homogeneous") {
    const auto& lv = levels6();
    for (const HierarchyLevel& l : lv) {
        for (const DiffPoly* even : {&l.a, &l.b, &l.c, &l.e, &l.f, &l.g})
            CHECK((even->is_zero() || even->parity() == Parity::Even));
        for (const DiffPoly* odd : {&l.rho, &l.delta})
            CHECK((odd->is_zero() || odd->parity() == Parity::Odd));
        for (const DiffPoly* any : {&l.a, &l.b, &l.c, &l.e, &l.f, &l.g, &l.rho, &l.delta})
            for (const auto& [key, coeff] : any->terms()) {
                (void)coeff;
                CHECK(key.weight() == l.m);
            }
    }
}

TEST_CASE("mu = 0 levels equal the mu-substituted symbolic levels") {
    auto reduced = derive_levels(4, Rational(0));
    const auto& lv = levels6();
    for (int m = 0; m <= 4; ++m) {
        const auto& a = reduced[static_cast<std::size_t>(m)];
        const auto& b = lv[static_cast<std::size_t>(m)];
        CHECK(a.a == b.a.subst_mu(0));
        CHECK(a.b == b.b.subst_mu(0));
        CHECK(a.c == b.c.subst_mu(0));
        CHECK(a.e == b.e.subst_mu(0));
        CHECK(a.f == b.f.subst_mu(0));
        CHECK(a.g == b.g.subst_mu(0));
        CHECK(a.rho == b.rho.subst_mu(0));
        CHECK(a.delta == b.delta.subst_mu(0));
        for (const DiffPoly* any : {&a.a, &a.b, &a.c, &a.e, &a.f, &a.g, &a.rho, &a.delta})
            CHECK(!any->contains_mu());
    }
}

TEST_CASE("spectral matrix M") {
    SuperMatrix m = build_M();
    CHECK(m.grading_ok());
    CHECK(m.at(0, 4) == LaurentPoly::from(parse_poly("alpha")));
    CHECK(m.at(4, 0) == LaurentPoly::from(parse_poly("beta")));
    CHECK(m.at(0, 0).coeff(1) == DiffPoly::integer(1));
    CHECK(m.at(0, 0).coeff(0) == make_h());
    CHECK(m.at(2, 3) == LaurentPoly::from(parse_poly("p + r")));
    // mu = 0 reduction: no mu anywhere, diagonal loses h.
    SuperMatrix m0 = build_M(Rational(0));
    CHECK(m0.at(0, 0).coeff(0).is_zero());
    CHECK(m0.grading_ok());
}

TEST_CASE("time matrix N^(2) structure") {
    const auto& lv = levels6();
    SuperMatrix n2 = build_time_matrix(2, lv);
    CHECK(n2.grading_ok());
    // (1,2): b1 lambda + b2.
    LaurentPoly expect12 = LaurentPoly::from(lv[1].b, 1) + LaurentPoly::from(lv[2].b, 0);
    CHECK(n2.at(0, 1) == expect12);
    // (1,1): lambda^2 + a2 - 2 mu e3 (the diagonal carries the modification).
    LaurentPoly expect11 = LaurentPoly::from(DiffPoly::integer(1), 2) +
                           LaurentPoly::from(lv[2].a - DiffPoly::mu(1) * lv[3].e *
                                                           DiffPoly::integer(2),
                                             0);
    CHECK(n2.at(0, 0) == expect11);
    // (1,3): lambda^2 + e2; no modification off the block diagonal.
    LaurentPoly expect13 = LaurentPoly::from(DiffPoly::integer(1), 2) +
                           LaurentPoly::from(lv[2].e, 0);
    CHECK(n2.at(0, 2) == expect13);
    // (1,4): f1 lambda + f2 = (p+2r) lambda + ...
    CHECK(n2.at(0, 3).coeff(1) == parse_poly("p + 2*r"));
    CHECK(n2.at(0, 3).coeff(0) == lv[2].f);
    // Lower-left 2x2 coupling block rows vanish.
    CHECK(n2.at(2, 0).is_zero());
    CHECK(n2.at(3, 1).is_zero());
}

TEST_CASE("flows") {
    const auto& lv = levels6();
    FlowSystem f0 = build_flow(0, lv);
    CHECK(f0.rhs[0] == parse_poly("2*p"));
    CHECK(f0.rhs[1] == parse_poly("-2*q"));
    CHECK(f0.rhs[2] == parse_poly("alpha"));
    CHECK(f0.rhs[3] == parse_poly("-beta"));
    CHECK(f0.rhs[4] == parse_poly("2*p + 4*r"));
    CHECK(f0.rhs[5] == parse_poly("-2*q - 4*s"));

    FlowSystem f2 = build_flow(2, lv);
    for (std::size_t i = 0; i < 6; ++i) {
        bool odd_slot = (i == 2 || i == 3);
        CHECK(f2.rhs[i].parity() == (odd_slot ? Parity::Odd : Parity::Even));
    }
    // mu = 0 second flow, p row: 1/2 p_xx - p^2 q - 2 p alpha beta + 2 alpha alpha_x.
    FlowSystem f2r = build_flow(2, derive_levels(3, Rational(0)), Rational(0));
    CHECK(f2r.rhs[0] ==
          parse_poly("1/2*p_xx - p^2*q - 2*p*alpha*beta + 2*alpha*alpha_x"));
    CHECK(f2r.rhs[0] == f2.rhs[0].subst_mu(0));
}

TEST_CASE("conserved combination identity for n <= 3") {
    const auto& lv = levels6();
    for (int n = 0; n <= 3; ++n) {
        DiffPoly res = conserved_combination_residual(n, lv);
        INFO("n = ", n, ": ", to_text(res));
        CHECK(res.is_zero());
    }
}

TEST_CASE("zero curvature residual vanishes, mu symbolic") {
    const auto& lv = levels6();
    for (int n = 1; n <= 3; ++n) {
        SuperMatrix res = zero_curvature_residual(n, lv);
        INFO("n = ", n, "\n", to_text(res));
        CHECK(res.is_zero());
    }
}

TEST_CASE("zero curvature residual vanishes, mu = 0") {
    auto lv0 = derive_levels(4, Rational(0));
    for (int n = 1; n <= 3; ++n) {
        SuperMatrix res = zero_curvature_residual(n, lv0, Rational(0));
        INFO("n = ", n, "\n", to_text(res));
        CHECK(res.is_zero());
    }
}

TEST_CASE("recursion rejects invalid arguments") {
    CHECK_THROWS_AS(derive_levels(-1), std::invalid_argument);
    auto lv = derive_levels(1);
    CHECK_THROWS_AS(build_flow(1, lv), std::invalid_argument);
    CHECK_THROWS_AS(build_time_matrix(1, lv), std::invalid_argument);
}
