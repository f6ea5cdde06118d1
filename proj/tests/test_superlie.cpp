// Verification of the two matrix Lie superalgebra bases: every reference
// relation, closure, graded antisymmetry, graded Jacobi, and supertrace
// invariance, plus SuperMatrix/LaurentPoly behaviour used downstream.

#include "akns/superlie.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace akns;
using akns::testutil::Rng;

TEST_CASE("LaurentPoly arithmetic") {
    LaurentPoly a = LaurentPoly::from(DiffPoly::jet(Field::P, 0), 1) +
                    LaurentPoly::from(DiffPoly::integer(3), 0);
    LaurentPoly b = LaurentPoly::from(DiffPoly::jet(Field::Q, 0), -1);
    LaurentPoly prod = a * b;
    CHECK(prod.coeff(0) == DiffPoly::jet(Field::P, 0) * DiffPoly::jet(Field::Q, 0));
    CHECK(prod.coeff(-1) == DiffPoly::integer(3) * DiffPoly::jet(Field::Q, 0));
    CHECK((a - a).is_zero());
    CHECK(a.shifted(2).coeff(3) == DiffPoly::jet(Field::P, 0));
    LaurentPoly dl = d_lambda(a);
    CHECK(dl.coeff(0) == DiffPoly::jet(Field::P, 0));
    CHECK(dl.max_power() == 0);
    CHECK(d_total(a).coeff(1) == DiffPoly::jet(Field::P, 1));
}

TEST_CASE("supertrace of the identity on the 4|1 signature is 3") {
    SuperMatrix id(5, {0, 0, 0, 0, 1});
    for (int i = 0; i < 5; ++i) id.at(i, i) = LaurentPoly::from(DiffPoly::integer(1));
    LaurentPoly st = id.supertrace();
    CHECK(st == LaurentPoly::from(DiffPoly::integer(3)));
}

TEST_CASE("sl(2,1): all reference relations pass") {
    LieReport rep = verify_sl21();
    INFO(lie_report_to_text(rep));
    CHECK(rep.relations.size() == 13);
    CHECK(rep.n_fail == 0);
    CHECK(rep.closure_ok);
    CHECK(rep.antisymmetry_ok);
    CHECK(rep.jacobi_ok);
    CHECK(rep.supertrace_invariance_ok);
    CHECK(rep.all_ok());
}

TEST_CASE("sl(4,1): all reference relations pass") {
    LieReport rep = verify_sl41();
    INFO(lie_report_to_text(rep));
    CHECK(rep.relations.size() == 30);
    CHECK(rep.n_fail == 0);
    CHECK(rep.closure_ok);
    CHECK(rep.antisymmetry_ok);
    CHECK(rep.jacobi_ok);
    CHECK(rep.supertrace_invariance_ok);
    CHECK(rep.all_ok());
}

TEST_CASE("spot brackets recomputed directly") {
    const AlgebraBasis& b = sl41_basis();
    auto br = [&](int i, int j) {
        return graded_bracket(b.elems[static_cast<std::size_t>(i - 1)],
                              b.parity[static_cast<std::size_t>(i - 1)],
                              b.elems[static_cast<std::size_t>(j - 1)],
                              b.parity[static_cast<std::size_t>(j - 1)]);
    };
    CHECK(br(1, 2) == b.elems[1].scaled(Rational(2)));          // [e1,e2] = 2e2
    CHECK(br(7, 8) == b.elems[0] - b.elems[3]);                 // [e7,e8]+ = e1-e4
    CHECK(br(7, 7) == (b.elems[4] - b.elems[1]).scaled(Rational(2)));
    CHECK(br(8, 8) == (b.elems[2] - b.elems[5]).scaled(Rational(2)));
    CHECK(br(4, 7).is_zero());
    CHECK(br(1, 1).is_zero());
}

TEST_CASE("expand_in_basis rejects matrices outside the span") {
    const AlgebraBasis& b = sl41_basis();
    SuperMatrix m(5, b.signature);
    m.at(4, 4) = LaurentPoly::from(DiffPoly::integer(1));  // e_{55} alone is not in sl(4,1)
    CHECK(!expand_in_basis(b, m).has_value());
    CHECK(expand_in_basis(b, b.elems[6]).has_value());
}

TEST_CASE("supertrace of a graded commutator vanishes") {
    // Random graded 5x5 matrices: even blocks carry random rational constants,
    // odd blocks carry random odd-parity linear combinations.
    Rng rng(0x57A77ACEu);
    std::vector<int> sig{0, 0, 0, 0, 1};
    auto random_graded = [&]() {
        SuperMatrix m(5, sig);
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                bool odd_block = (sig[static_cast<std::size_t>(i)] ^
                                  sig[static_cast<std::size_t>(j)]) == 1;
                DiffPoly entry;
                if (odd_block) {
                    entry = DiffPoly::jet(Field::Alpha, static_cast<int>(rng.below(2)))
                                .scaled(testutil::random_coeff(rng)) +
                            DiffPoly::jet(Field::Beta, static_cast<int>(rng.below(2)))
                                .scaled(testutil::random_coeff(rng));
                } else {
                    entry = DiffPoly::constant(testutil::random_coeff(rng));
                }
                m.at(i, j) = LaurentPoly::from(entry, static_cast<int>(rng.below(2)));
            }
        }
        return m;
    };
    for (int trial = 0; trial < 25; ++trial) {
        SuperMatrix x = random_graded();
        SuperMatrix y = random_graded();
        CHECK(x.grading_ok());
        CHECK(supercommutator(x, y).supertrace().is_zero());
    }
}

TEST_CASE("grading_ok flags parity violations") {
    SuperMatrix m(5, {0, 0, 0, 0, 1});
    m.at(0, 4) = LaurentPoly::from(DiffPoly::jet(Field::Alpha, 0));
    CHECK(m.grading_ok());
    m.at(0, 4) = LaurentPoly::from(DiffPoly::jet(Field::P, 0));
    CHECK(!m.grading_ok());
    m.at(0, 4) = LaurentPoly();
    m.at(0, 1) = LaurentPoly::from(DiffPoly::jet(Field::Beta, 0));
    CHECK(!m.grading_ok());
}

TEST_CASE("lie report JSON carries the verdicts") {
    nlohmann::json j = lie_report_to_json(verify_sl21());
    CHECK(j["pass"] == true);
    CHECK(j["relations"].size() == 13);
    CHECK(j["algebra"] == "sl21");
}
