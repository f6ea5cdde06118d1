#include "akns/superlie.hpp"

#include <sstream>
#include <stdexcept>

namespace akns {

namespace {

SuperMatrix const_matrix(const std::vector<int>& signature,
                         const std::vector<std::vector<int>>& grid) {
    int n = static_cast<int>(grid.size());
    SuperMatrix m(n, signature);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                m.at(i, j) = LaurentPoly::from(DiffPoly::integer(
                    grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    return m;
}

// The constant rational value of a LaurentPoly entry; throws if the entry is
// not a lambda^0 constant.
Rational entry_const(const LaurentPoly& e) {
    if (e.is_zero()) return Rational(0);
    if (e.min_power() != 0 || e.max_power() != 0)
        throw std::logic_error("entry is not constant in lambda");
    const DiffPoly& c = e.coeff(0);
    if (c.term_count() != 1 || !c.has_constant_term())
        throw std::logic_error("entry is not a constant");
    return c.terms().begin()->second;
}

std::vector<Rational> flatten(const SuperMatrix& m) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(m.size()) * m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) v.push_back(entry_const(m.at(i, j)));
    return v;
}

// Exact solve of the overdetermined system (columns = basis vectors) by
// Gauss-Jordan elimination; returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_span(const std::vector<std::vector<Rational>>& cols,
                                                const std::vector<Rational>& rhs) {
    std::size_t nrows = rhs.size();
    std::size_t ncols = cols.size();
    // Augmented matrix.
    std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
    for (std::size_t r = 0; r < nrows; ++r) {
        for (std::size_t c = 0; c < ncols; ++c) a[r][c] = cols[c][r];
        a[r][ncols] = rhs[r];
    }
    std::vector<int> pivot_of_col(ncols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
        std::size_t sel = rank;
        while (sel < nrows && rational_sign(a[sel][c]) == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(a[sel], a[rank]);
        Rational inv = Rational(1) / a[rank][c];
        for (std::size_t k = c; k <= ncols; ++k) a[rank][k] = a[rank][k] * inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || rational_sign(a[r][c]) == 0) continue;
            Rational f = a[r][c];
            for (std::size_t k = c; k <= ncols; ++k) a[r][k] = a[r][k] - f * a[rank][k];
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }
    // Inconsistency: a zero row with nonzero rhs.
    for (std::size_t r = rank; r < nrows; ++r)
        if (rational_sign(a[r][ncols]) != 0) return std::nullopt;
    std::vector<Rational> x(ncols, Rational(0));
    for (std::size_t c = 0; c < ncols; ++c)
        if (pivot_of_col[c] >= 0) x[c] = a[static_cast<std::size_t>(pivot_of_col[c])][ncols];
    return x;
}

std::string combo_text(const AlgebraBasis& basis, const std::vector<Rational>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (rational_sign(coeffs[k]) == 0) continue;
        Rational c = coeffs[k];
        if (first) {
            if (rational_sign(c) < 0) os << "-";
        } else {
            os << (rational_sign(c) > 0 ? " + " : " - ");
        }
        first = false;
        Rational absc = rational_sign(c) < 0 ? Rational(-c) : c;
        if (absc != Rational(1)) os << rational_to_string(absc) << "*";
        os << basis.names[k];
    }
    if (first) return "0";
    return os.str();
}

AlgebraBasis make_sl21() {
    AlgebraBasis b;
    b.name = "sl21";
    b.signature = {0, 0, 1};
    b.names = {"E1", "E2", "E3", "E4", "E5"};
    b.parity = {0, 0, 0, 1, 1};
    b.elems = {
        const_matrix(b.signature, {{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}),
        const_matrix(b.signature, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
        const_matrix(b.signature, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}),
        const_matrix(b.signature, {{0, 0, 1}, {0, 0, 0}, {0, -1, 0}}),
        const_matrix(b.signature, {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}}),
    };
    return b;
}

AlgebraBasis make_sl41() {
    AlgebraBasis b;
    b.name = "sl41";
    b.signature = {0, 0, 0, 0, 1};
    b.names = {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"};
    b.parity = {0, 0, 0, 0, 0, 0, 1, 1};
    b.elems = {
        const_matrix(b.signature,
                     {{1, 0, 0, 0, 0},
                      {0, -1, 0, 0, 0},
                      {0, 0, 1, 0, 0},
                      {0, 0, 0, -1, 0},
                      {0, 0, 0, 0, 0}}),
        const_matrix(b.signature,
                     {{0, 1, 0, 0, 0},
                      {0, 0, 0, 0, 0},
                      {0, 0, 0, 1, 0},
                      {0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0}}),
        const_matrix(b.signature,
                     {{0, 0, 0, 0, 0},
                      {1, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0},
                      {0, 0, 1, 0, 0},
                      {0, 0, 0, 0, 0}}),
        const_matrix(b.signature,
                     {{0, 0, 1, 0, 0},
                      {0, 0, 0, -1, 0},
                      {0, 0, 1, 0, 0},
                      {0, 0, 0, -1, 0},
                      {0, 0, 0, 0, 0}}),
        const_matrix(b.signature,
                     {{0, 0, 0, 1, 0},
                      {0, 0, 0, 0, 0},
                      {0, 0, 0, 1, 0},
                      {0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0}}),
        const_matrix(b.signature,
                     {{0, 0, 0, 0, 0},
                      {0, 0, 1, 0, 0},
                      {0, 0, 0, 0, 0},
                      {0, 0, 1, 0, 0},
                      {0, 0, 0, 0, 0}}),
        const_matrix(b.signature,
                     {{0, 0, 0, 0, 1},
                      {0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0},
                      {0, -1, 0, 1, 0}}),
        const_matrix(b.signature,
                     {{0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 1},
                      {0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0},
                      {1, 0, -1, 0, 0}}),
    };
    return b;
}

Relation rel(std::string label, int i, int j, bool anti,
             std::vector<std::pair<int, Rational>> rhs) {
    return Relation{std::move(label), i, j, anti, std::move(rhs)};
}

std::vector<Relation> make_sl21_relations() {
    return {
        rel("[E1,E2]=2E2", 1, 2, false, {{2, 2}}),
        rel("[E1,E3]=-2E3", 1, 3, false, {{3, -2}}),
        rel("[E2,E3]=E1", 2, 3, false, {{1, 1}}),
        rel("[E1,E4]=E4", 1, 4, false, {{4, 1}}),
        rel("[E2,E5]=E4", 2, 5, false, {{4, 1}}),
        rel("[E1,E5]=-E5", 1, 5, false, {{5, -1}}),
        rel("[E4,E3]=-E5", 4, 3, false, {{5, -1}}),
        rel("[E2,E4]=0", 2, 4, false, {}),
        rel("[E3,E5]=0", 3, 5, false, {}),
        rel("[E4,E4]+=-2E2", 4, 4, true, {{2, -2}}),
        rel("[E5,E5]+=2E3", 5, 5, true, {{3, 2}}),
        rel("[E4,E5]+=E1", 4, 5, true, {{1, 1}}),
        rel("[E5,E4]+=E1", 5, 4, true, {{1, 1}}),
    };
}

std::vector<Relation> make_sl41_relations() {
    return {
        rel("[e1,e2]=2e2", 1, 2, false, {{2, 2}}),
        rel("[e1,e3]=-2e3", 1, 3, false, {{3, -2}}),
        rel("[e1,e5]=2e5", 1, 5, false, {{5, 2}}),
        rel("[e2,e4]=-2e5", 2, 4, false, {{5, -2}}),
        rel("[e4,e5]=2e5", 4, 5, false, {{5, 2}}),
        rel("[e2,e3]=e1", 2, 3, false, {{1, 1}}),
        rel("[e1,e6]=-2e6", 1, 6, false, {{6, -2}}),
        rel("[e3,e4]=2e6", 3, 4, false, {{6, 2}}),
        rel("[e4,e6]=-2e6", 4, 6, false, {{6, -2}}),
        rel("[e1,e7]=e7", 1, 7, false, {{7, 1}}),
        rel("[e2,e8]=e7", 2, 8, false, {{7, 1}}),
        rel("[e1,e8]=-e8", 1, 8, false, {{8, -1}}),
        rel("[e3,e7]=e8", 3, 7, false, {{8, 1}}),
        rel("[e2,e6]=e4", 2, 6, false, {{4, 1}}),
        rel("[e3,e5]=-e4", 3, 5, false, {{4, -1}}),
        rel("[e5,e6]=e4", 5, 6, false, {{4, 1}}),
        rel("[e1,e4]=0", 1, 4, false, {}),
        rel("[e2,e5]=0", 2, 5, false, {}),
        rel("[e2,e7]=0", 2, 7, false, {}),
        rel("[e3,e6]=0", 3, 6, false, {}),
        rel("[e3,e8]=0", 3, 8, false, {}),
        rel("[e4,e7]=0", 4, 7, false, {}),
        rel("[e4,e8]=0", 4, 8, false, {}),
        rel("[e5,e7]=0", 5, 7, false, {}),
        rel("[e5,e8]=0", 5, 8, false, {}),
        rel("[e6,e7]=0", 6, 7, false, {}),
        rel("[e6,e8]=0", 6, 8, false, {}),
        rel("[e7,e8]+=e1-e4", 7, 8, true, {{1, 1}, {4, -1}}),
        rel("[e7,e7]+=2e5-2e2", 7, 7, true, {{5, 2}, {2, -2}}),
        rel("[e8,e8]+=2e3-2e6", 8, 8, true, {{3, 2}, {6, -2}}),
    };
}

}  // namespace

const AlgebraBasis& sl21_basis() {
    static const AlgebraBasis b = make_sl21();
    return b;
}

const AlgebraBasis& sl41_basis() {
    static const AlgebraBasis b = make_sl41();
    return b;
}

const std::vector<Relation>& sl21_relations() {
    static const std::vector<Relation> r = make_sl21_relations();
    return r;
}

const std::vector<Relation>& sl41_relations() {
    static const std::vector<Relation> r = make_sl41_relations();
    return r;
}

std::optional<std::vector<Rational>> expand_in_basis(const AlgebraBasis& basis,
                                                     const SuperMatrix& m) {
    std::vector<std::vector<Rational>> cols;
    cols.reserve(basis.elems.size());
    for (const SuperMatrix& e : basis.elems) cols.push_back(flatten(e));
    return solve_span(cols, flatten(m));
}

LieReport verify_relations(const AlgebraBasis& basis, const std::vector<Relation>& rels) {
    LieReport rep;
    rep.algebra = basis.name;
    int n = static_cast<int>(basis.elems.size());

    auto bracket = [&](int i, int j) {  // 0-based
        return graded_bracket(basis.elems[static_cast<std::size_t>(i)],
                              basis.parity[static_cast<std::size_t>(i)],
                              basis.elems[static_cast<std::size_t>(j)],
                              basis.parity[static_cast<std::size_t>(j)]);
    };

    // Printed relations.
    for (const Relation& r : rels) {
        RelationResult res;
        res.label = r.label;
        // The printed bracket type must match the parities.
        bool parity_anti = basis.parity[static_cast<std::size_t>(r.i - 1)] == 1 &&
                           basis.parity[static_cast<std::size_t>(r.j - 1)] == 1;
        SuperMatrix got = bracket(r.i - 1, r.j - 1);
        SuperMatrix want(got.size(), got.signature());
        for (const auto& [k, coeff] : r.rhs)
            want = want + basis.elems[static_cast<std::size_t>(k - 1)].scaled(coeff);
        res.pass = (r.anti == parity_anti) && (got == want);
        if (auto combo = expand_in_basis(basis, got))
            res.derived = combo_text(basis, *combo);
        else
            res.derived = "(outside basis span)";
        if (res.pass)
            ++rep.n_pass;
        else
            ++rep.n_fail;
        rep.relations.push_back(std::move(res));
    }

    // Closure + structure table.
    rep.closure_ok = true;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            SuperMatrix br = bracket(i, j);
            auto combo = expand_in_basis(basis, br);
            if (!combo) {
                rep.closure_ok = false;
                continue;
            }
            bool anti = basis.parity[static_cast<std::size_t>(i)] == 1 &&
                        basis.parity[static_cast<std::size_t>(j)] == 1;
            std::ostringstream os;
            os << "[" << basis.names[static_cast<std::size_t>(i)] << ","
               << basis.names[static_cast<std::size_t>(j)] << (anti ? "]+ = " : "] = ")
               << combo_text(basis, *combo);
            rep.structure_table.push_back(os.str());
        }
    }

    // Graded antisymmetry on all ordered pairs.
    rep.antisymmetry_ok = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            bool both_odd = basis.parity[static_cast<std::size_t>(i)] == 1 &&
                            basis.parity[static_cast<std::size_t>(j)] == 1;
            // [x,y} + (-1)^{|x||y|}[y,x} = 0; the sign is -1 iff both are odd.
            SuperMatrix check =
                bracket(i, j) + (both_odd ? -bracket(j, i) : bracket(j, i));
            if (!check.is_zero()) rep.antisymmetry_ok = false;
        }
    }

    // Graded Jacobi on all triples:
    // (-1)^{pa pc}[a,[b,c}} + (-1)^{pb pa}[b,[c,a}} + (-1)^{pc pb}[c,[a,b}} = 0.
    rep.jacobi_ok = true;
    auto nested = [&](int a, int b, int c) {
        int pb_ = basis.parity[static_cast<std::size_t>(b)];
        int pc_ = basis.parity[static_cast<std::size_t>(c)];
        SuperMatrix inner = bracket(b, c);
        return graded_bracket(basis.elems[static_cast<std::size_t>(a)],
                              basis.parity[static_cast<std::size_t>(a)], inner,
                              (pb_ + pc_) % 2);
    };
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                int pa = basis.parity[static_cast<std::size_t>(a)];
                int pb = basis.parity[static_cast<std::size_t>(b)];
                int pc = basis.parity[static_cast<std::size_t>(c)];
                SuperMatrix t1 = nested(a, b, c).scaled(Rational((pa & pc) ? -1 : 1));
                SuperMatrix t2 = nested(b, c, a).scaled(Rational((pb & pa) ? -1 : 1));
                SuperMatrix t3 = nested(c, a, b).scaled(Rational((pc & pb) ? -1 : 1));
                if (!(t1 + t2 + t3).is_zero()) rep.jacobi_ok = false;
            }
        }
    }

    // Supertrace invariance on all basis pairs.
    rep.supertrace_invariance_ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!bracket(i, j).supertrace().is_zero()) rep.supertrace_invariance_ok = false;

    return rep;
}

LieReport verify_sl21() { return verify_relations(sl21_basis(), sl21_relations()); }

LieReport verify_sl41() { return verify_relations(sl41_basis(), sl41_relations()); }

nlohmann::json lie_report_to_json(const LieReport& r) {
    nlohmann::json j;
    j["algebra"] = r.algebra;
    j["pass"] = r.all_ok();
    j["relation_pass_count"] = r.n_pass;
    j["relation_fail_count"] = r.n_fail;
    j["closure_ok"] = r.closure_ok;
    j["antisymmetry_ok"] = r.antisymmetry_ok;
    j["jacobi_ok"] = r.jacobi_ok;
    j["supertrace_invariance_ok"] = r.supertrace_invariance_ok;
    j["relations"] = nlohmann::json::array();
    for (const RelationResult& res : r.relations) {
        j["relations"].push_back(
            {{"label", res.label}, {"pass", res.pass}, {"derived", res.derived}});
    }
    j["structure_table"] = r.structure_table;
    return j;
}

std::string lie_report_to_text(const LieReport& r) {
    std::ostringstream os;
    os << "algebra " << r.algebra << ": " << r.n_pass << " relations pass, " << r.n_fail
       << " fail\n";
    for (const RelationResult& res : r.relations) {
        os << "  " << (res.pass ? "ok  " : "FAIL") << "  " << res.label
           << "   [derived: " << res.derived << "]\n";
    }
    os << "  closure: " << (r.closure_ok ? "ok" : "FAIL")
       << ", graded antisymmetry: " << (r.antisymmetry_ok ? "ok" : "FAIL")
       << ", graded Jacobi: " << (r.jacobi_ok ? "ok" : "FAIL")
       << ", supertrace invariance: " << (r.supertrace_invariance_ok ? "ok" : "FAIL")
       << "\n";
    return os.str();
}

}  // namespace akns
