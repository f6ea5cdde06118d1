#include "akns/hamiltonian.hpp"

#include "akns/integrate.hpp"
#include "akns/io.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace akns {

namespace {

DiffPoly jet0(Field f) { return DiffPoly::jet(f, 0); }

// Generating Laurent sum  sum_{m=0..m_max} x_m lambda^{-m}  of one level field.
LaurentPoly generating(const std::vector<HierarchyLevel>& levels, int m_max,
                       DiffPoly HierarchyLevel::* coef) {
    LaurentPoly sum;
    for (int m = 0; m <= m_max; ++m) sum += LaurentPoly::from(levels[m].*coef, -m);
    return sum;
}

std::string truncated(std::string s, std::size_t cap = 500) {
    if (s.size() > cap) {
        s.resize(cap);
        s += " ...";
    }
    return s;
}

void push_check(std::vector<CheckItem>& items, std::string label, bool ok,
                std::string detail = {}) {
    items.push_back(CheckItem{std::move(label), ok, ok ? std::string{} : std::move(detail)});
}

bool vectors_equal(const std::vector<DiffPoly>& a, const std::vector<DiffPoly>& b,
                   std::string& detail) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) {
            ok = false;
            detail += "component " + std::to_string(i) + " differs by " +
                      truncated(to_text(a[i] - b[i])) + "; ";
        }
    return ok;
}

constexpr std::array<const char*, 6> kFieldNames{"p", "q", "alpha", "beta", "r", "s"};

const NonlocalOperator& ql_operator() {
    static const NonlocalOperator op = build_Q().composed_with(build_L());
    return op;
}

}  // namespace

SuperMatrix partial_matrix(const SuperMatrix& m, Field u, Side side) {
    SuperMatrix out(m.size(), m.signature());
    const Jet v{u, 0};
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
            LaurentPoly entry;
            for (const auto& [pow, c] : m.at(i, j).coeffs()) {
                DiffPoly pc = partial(c, v, side);
                if (!pc.is_zero()) entry += LaurentPoly::from(pc, pow);
            }
            out.at(i, j) = entry;
        }
    return out;
}

bool TraceIdentityReport::ok() const {
    if (!gamma_determined) return false;
    for (const CheckItem& it : items)
        if (!it.ok) return false;
    return true;
}

TraceIdentityReport verify_supertrace_identity(int n_max,
                                               const std::vector<HierarchyLevel>& levels) {
    if (n_max < 0) throw std::invalid_argument("verify_supertrace_identity: n_max must be >= 0");
    const int m_max = n_max + 2;
    if (static_cast<int>(levels.size()) <= m_max)
        throw std::invalid_argument("verify_supertrace_identity: needs levels through n_max + 2");

    TraceIdentityReport rep;
    rep.n_max = n_max;

    const SuperMatrix M = build_M();
    const SuperMatrix N = build_truncated_N(levels, m_max);

    const LaurentPoly A = generating(levels, m_max, &HierarchyLevel::a);
    const LaurentPoly B = generating(levels, m_max, &HierarchyLevel::b);
    const LaurentPoly C = generating(levels, m_max, &HierarchyLevel::c);
    const LaurentPoly E = generating(levels, m_max, &HierarchyLevel::e);
    const LaurentPoly F = generating(levels, m_max, &HierarchyLevel::f);
    const LaurentPoly G = generating(levels, m_max, &HierarchyLevel::g);
    const LaurentPoly RHO = generating(levels, m_max, &HierarchyLevel::rho);
    const LaurentPoly DELTA = generating(levels, m_max, &HierarchyLevel::delta);
    const LaurentPoly W = A.scaled(2) + E;

    // (i) the spectral-parameter pairing.
    const LaurentPoly lam_lhs = (N * d_lambda(M)).supertrace();
    {
        const LaurentPoly diff = lam_lhs - (A.scaled(4) + E.scaled(2));
        push_check(rep.items, "supertrace pairing, spectral-parameter row", diff.is_zero(),
                   "difference: " + truncated(to_text(diff)));
    }

    // (i) the six potential pairings against the reference forms, which carry
    // RIGHT-side matrix partials.  The left traces are kept for step (ii): the
    // even rows are side-independent, while the odd rows flip the sign of the
    // mu-term, and only the left pairing feeds the variational identity.
    const DiffPoly mu1 = DiffPoly::mu(1);
    const std::array<Field, 6>& fields = kPotentialOrder;
    auto lp = [](const DiffPoly& c) { return LaurentPoly::from(c, 0); };
    const std::array<LaurentPoly, 6> expected_right{
        C.scaled(2) + G + lp(mu1.scaled(2) * jet0(Field::S)) * W,
        B.scaled(2) + F + lp(mu1.scaled(2) * jet0(Field::R)) * W,
        DELTA.scaled(2) + lp(mu1.scaled(4) * jet0(Field::Beta)) * W,
        RHO.scaled(-2) + lp(mu1.scaled(-4) * jet0(Field::Alpha)) * W,
        C + G + lp(mu1.scaled(2) * (jet0(Field::Q) + jet0(Field::S))) * W,
        B + F + lp(mu1.scaled(2) * (jet0(Field::P) + jet0(Field::R))) * W,
    };
    std::array<LaurentPoly, 6> trace_left;
    for (int k = 0; k < 6; ++k) {
        const LaurentPoly right = (partial_matrix(M, fields[k], Side::Right) * N).supertrace();
        trace_left[k] = (partial_matrix(M, fields[k], Side::Left) * N).supertrace();
        const LaurentPoly diff = right - expected_right[k];
        push_check(rep.items, std::string("supertrace pairing, ") + kFieldNames[k] + " row",
                   diff.is_zero(), "difference: " + truncated(to_text(diff)));
        if (fields[k] == Field::Alpha || fields[k] == Field::Beta) {
            // Left form: the mu-term changes sign against the reference form.
            const LaurentPoly expected_left =
                expected_right[k] + lp(mu1.scaled(fields[k] == Field::Alpha ? -8 : 8) *
                                       jet0(fields[k] == Field::Alpha ? Field::Beta
                                                                      : Field::Alpha)) *
                                        W;
            const LaurentPoly ldiff = trace_left[k] - expected_left;
            push_check(rep.items,
                       std::string("left-sided pairing, ") + kFieldNames[k] + " row",
                       ldiff.is_zero(), "difference: " + truncated(to_text(ldiff)));
        } else {
            const LaurentPoly ldiff = trace_left[k] - right;
            push_check(rep.items,
                       std::string("side-independent pairing, ") + kFieldNames[k] + " row",
                       ldiff.is_zero(), "left/right difference: " + truncated(to_text(ldiff)));
        }
    }

    // (ii) the variational identity per lambda power, with exponent zero.
    // Left traces pair with the left Euler operator.
    bool n0_ok = false;
    for (int n = 0; n <= n_max; ++n) {
        bool all_ok = true;
        std::string detail;
        const DiffPoly coeff = lam_lhs.coeff(-(n + 2));
        for (int k = 0; k < 6; ++k) {
            const DiffPoly lhs = euler_variational(coeff, fields[k]);
            const DiffPoly rhs = trace_left[k].coeff(-(n + 1)).scaled(Rational(-(n + 1)));
            if (lhs != rhs) {
                all_ok = false;
                detail += std::string(kFieldNames[k]) + " component differs by " +
                          truncated(to_text(lhs - rhs)) + "; ";
            }
        }
        if (n == 0) n0_ok = all_ok;
        push_check(rep.items, "variational identity, n = " + std::to_string(n), all_ok, detail);
    }

    // The n = 0 instance forces the exponent: with a nonzero right-hand side,
    // gamma * (right-hand side) = 0 leaves gamma = 0 as the only solution.
    bool rhs1_nonzero = false;
    for (int k = 0; k < 6; ++k) rhs1_nonzero = rhs1_nonzero || !trace_left[k].coeff(-1).is_zero();
    rep.gamma = 0;
    rep.gamma_determined = rhs1_nonzero && n0_ok;
    push_check(rep.items, "scaling exponent forced to zero", rep.gamma_determined,
               rhs1_nonzero ? "n = 0 identity fails at exponent zero"
                            : "right-hand side vanishes at n = 0; exponent undetermined");

    // (iii) stored densities reproduce the variational gradient vectors, and
    // the reference gradient vector exceeds the computed variational
    // derivative by exactly (0, 0, 8 mu beta w, -8 mu alpha w, 0, 0).
    for (int n = 0; n <= n_max; ++n) {
        const HamiltonianFunctional H = hamiltonian_functional(n, levels);
        const std::vector<DiffPoly> vgrad = variational_gradient_vector(levels, n);
        std::array<DiffPoly, 6> euler;
        bool all_ok = true;
        std::string detail;
        for (int k = 0; k < 6; ++k) {
            euler[k] = euler_variational(H.density, fields[k]);
            if (euler[k] != vgrad[k]) {
                all_ok = false;
                detail += std::string(kFieldNames[k]) + " component differs by " +
                          truncated(to_text(euler[k] - vgrad[k])) + "; ";
            }
        }
        push_check(rep.items, "variational gradient of stored density, n = " + std::to_string(n),
                   all_ok, detail);

        const HierarchyLevel& lv = levels[static_cast<std::size_t>(n + 1)];
        const DiffPoly w = lv.a.scaled(2) + lv.e;
        const std::array<DiffPoly, 6> offset{
            DiffPoly{}, DiffPoly{},
            (mu1 * jet0(Field::Beta) * w).scaled(8),
            (mu1 * jet0(Field::Alpha) * w).scaled(-8),
            DiffPoly{}, DiffPoly{},
        };
        const std::vector<DiffPoly> grad = gradient_vector(levels, n);
        bool off_ok = true;
        std::string off_detail;
        for (int k = 0; k < 6; ++k) {
            const DiffPoly diff = grad[k] - euler[k] - offset[k];
            if (!diff.is_zero()) {
                off_ok = false;
                off_detail += std::string(kFieldNames[k]) + " component off by " +
                              truncated(to_text(diff)) + "; ";
            }
        }
        push_check(rep.items,
                   "reference gradient offset is the odd mu-term, n = " + std::to_string(n),
                   off_ok, off_detail);
    }

    return rep;
}

HamiltonianFunctional hamiltonian_functional(int n, const std::vector<HierarchyLevel>& levels) {
    if (n < 0) throw std::invalid_argument("hamiltonian_functional: n must be >= 0");
    if (static_cast<int>(levels.size()) <= n + 2)
        throw std::invalid_argument("hamiltonian_functional: needs levels through n + 2");
    const HierarchyLevel& lv = levels[n + 2];
    const DiffPoly raw = (lv.a.scaled(2) + lv.e).scaled(Rational(-2) / Rational(n + 1));
    return HamiltonianFunctional{n, integrate_with_remainder(raw).second};
}

bool functionals_equal(const DiffPoly& a, const DiffPoly& b) {
    return integrate_with_remainder(a - b).second.is_zero();
}

bool HamiltonianFormReport::ok() const {
    for (const CheckItem& it : items)
        if (!it.ok) return false;
    return true;
}

HamiltonianFormReport verify_hamiltonian_form(int n, const std::vector<HierarchyLevel>& levels,
                                              const std::optional<Rational>& mu_value) {
    if (n < 1) throw std::invalid_argument("verify_hamiltonian_form: n must be >= 1");
    if (static_cast<int>(levels.size()) <= n + 2)
        throw std::invalid_argument("verify_hamiltonian_form: needs levels through n + 2");

    HamiltonianFormReport rep;
    rep.n = n;
    rep.mu_value = mu_value;

    const FlowSystem flow = build_flow(n, levels, mu_value);
    const std::vector<DiffPoly> fl(flow.rhs.begin(), flow.rhs.end());

    NonlocalOperator Q = build_Q();
    NonlocalOperator J = build_J();
    if (mu_value) {
        Q = Q.subst_mu(*mu_value);
        J = J.subst_mu(*mu_value);
    }

    {
        std::string detail;
        const std::vector<DiffPoly> via_q = Q.apply(level_vector(levels, n + 1));
        push_check(rep.items, "flow equals Q applied to the level vector",
                   vectors_equal(via_q, fl, detail), std::move(detail));
    }

    const std::vector<DiffPoly> grad = gradient_vector(levels, n, mu_value);
    {
        std::string detail;
        const std::vector<DiffPoly> via_j = J.apply(grad);
        push_check(rep.items, "flow equals J applied to the gradient vector",
                   vectors_equal(via_j, fl, detail), std::move(detail));
    }

    {
        // The stored density must reproduce the left variational gradient.
        // With a specialized mu the density is formed from the specialized
        // levels, so the target carries the same mu_value.
        const HamiltonianFunctional H = hamiltonian_functional(n, levels);
        const std::vector<DiffPoly> vgrad = variational_gradient_vector(levels, n, mu_value);
        bool all_ok = true;
        std::string detail;
        for (int k = 0; k < 6; ++k) {
            const DiffPoly lhs = euler_variational(H.density, kPotentialOrder[k]);
            if (lhs != vgrad[k]) {
                all_ok = false;
                detail += std::string(kFieldNames[k]) + " component differs by " +
                          truncated(to_text(lhs - vgrad[k])) + "; ";
            }
        }
        push_check(rep.items,
                   "stored density has the variational gradient as its variational derivative",
                   all_ok, detail);
    }

    return rep;
}

bool BiHamiltonianReport::structures_ok() const {
    for (const CheckItem& it : items)
        if (!it.ok) return false;
    return true;
}

bool BiHamiltonianReport::reference_table_ok() const {
    for (const PRowFinding& f : p_rows)
        if (!f.applied || !f.matches_flow) return false;
    return true;
}

const NonlocalOperator& second_structure_operator() {
    static const NonlocalOperator op = ql_operator().composed_with(build_R());
    return op;
}

BiHamiltonianReport verify_bi_hamiltonian(int n, const std::vector<HierarchyLevel>& levels,
                                          const std::optional<Rational>& mu_value) {
    if (n < 2) throw std::invalid_argument("verify_bi_hamiltonian: n must be >= 2");
    if (static_cast<int>(levels.size()) <= n + 1)
        throw std::invalid_argument("verify_bi_hamiltonian: needs levels through n + 1");

    BiHamiltonianReport rep;
    rep.n = n;
    rep.mu_value = mu_value;

    const FlowSystem flow = build_flow(n, levels, mu_value);
    const std::vector<DiffPoly> fl(flow.rhs.begin(), flow.rhs.end());

    NonlocalOperator q = build_Q();
    NonlocalOperator l = build_L();
    NonlocalOperator r = build_R();
    if (mu_value) {
        q = q.subst_mu(*mu_value);
        l = l.subst_mu(*mu_value);
        r = r.subst_mu(*mu_value);
    }

    // Composition routes are evaluated by stages (the definition of operator
    // composition): each stage's antiderivatives are exact on hierarchy
    // vectors, whereas the canonicalized composed table regroups integrands
    // into forms whose locality a term-by-term reduction cannot always see.
    {
        std::string detail;
        const std::vector<DiffPoly> via_ql = q.apply(l.apply(level_vector(levels, n)));
        push_check(rep.items, "flow equals (Q o L) applied to the level vector",
                   vectors_equal(via_ql, fl, detail), std::move(detail));
    }

    const std::vector<DiffPoly> grad = gradient_vector(levels, n - 1, mu_value);
    {
        std::string detail;
        const std::vector<DiffPoly> via_qlr = q.apply(l.apply(r.apply(grad)));
        push_check(rep.items, "flow equals (Q o L o R) applied to the gradient vector",
                   vectors_equal(via_qlr, fl, detail), std::move(detail));
    }

    const NonlocalOperator p_ref = build_P_expected();
    const NonlocalOperator& qlr = second_structure_operator();

    // Entry-level structural comparison against the composed operator; only
    // meaningful for symbolic mu (specialization can collapse either side).
    // A structural difference is not yet a verdict — the row findings are.
    if (!mu_value) {
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (!(p_ref.at(i, j) == qlr.at(i, j)))
                    rep.p_entry_diffs.push_back(BiHamiltonianReport::PEntryDiff{
                        i, j, to_text(p_ref.at(i, j)), to_text(qlr.at(i, j))});
    }

    // Row-level extensional classification via the difference operator: the
    // composed table is the composition as an operator identity, so
    //   reference . gradient = flow + (reference - composed) . gradient,
    // and in the difference the shared chains cancel structurally.
    NonlocalOperator diff_op = p_ref - qlr;
    if (mu_value) diff_op = diff_op.subst_mu(*mu_value);
    const NonlocalOperator::ApplyOutcome outcome = diff_op.try_apply(grad);
    for (int i = 0; i < 6; ++i) {
        BiHamiltonianReport::PRowFinding f;
        f.row = i;
        bool entry_identical = true;
        for (int j = 0; j < 6; ++j) entry_identical = entry_identical && diff_op.at(i, j).is_zero();
        f.applied = outcome.row_ok[static_cast<std::size_t>(i)];
        if (entry_identical) {
            f.matches_flow = true;
            f.note = "row coincides with the derived composition entry by entry";
        } else if (f.applied) {
            f.excess = outcome.value[static_cast<std::size_t>(i)];
            f.matches_flow = f.excess.is_zero();
            if (!f.matches_flow)
                f.note = "reference row yields flow + [" + truncated(to_text(f.excess)) + "]";
        } else {
            for (const auto& issue : outcome.issues)
                if (issue.row == i)
                    f.note += "difference to the derived composition leaves an irreducible "
                              "antiderivative of [" +
                              truncated(to_text(issue.core), 200) + "] with multiplier [" +
                              truncated(to_text(issue.multiplier), 200) + "]; ";
        }
        rep.p_rows.push_back(std::move(f));
    }

    return rep;
}

}  // namespace akns
