#include "akns/hierarchy.hpp"

#include "akns/io.hpp"

#include <sstream>
#include <stdexcept>

namespace akns {

namespace {

DiffPoly jet0(Field f) { return DiffPoly::jet(f, 0); }

DiffPoly make_h_for(const std::optional<Rational>& mu_value) {
    DiffPoly h = make_h();
    if (mu_value) h = h.subst_mu(*mu_value);
    return h;
}

DiffPoly integrate_level_part(const DiffPoly& integrand, int level, const char* which) {
    std::ostringstream os;
    os << "recursion level " << level << ", coefficient " << which;
    return integrate_exact(integrand, os.str());
}

}  // namespace

std::vector<HierarchyLevel> derive_levels(int n_max,
                                          const std::optional<Rational>& mu_value) {
    if (n_max < 0) throw std::invalid_argument("derive_levels: n_max must be >= 0");
    DiffPoly h = make_h_for(mu_value);
    DiffPoly p = jet0(Field::P), q = jet0(Field::Q), r = jet0(Field::R), s = jet0(Field::S);
    DiffPoly al = jet0(Field::Alpha), be = jet0(Field::Beta);

    std::vector<HierarchyLevel> lv;
    lv.reserve(static_cast<std::size_t>(n_max) + 1);
    HierarchyLevel l0;
    l0.m = 0;
    l0.a = DiffPoly::integer(1);
    l0.e = DiffPoly::integer(1);
    lv.push_back(l0);

    for (int m = 1; m <= n_max; ++m) {
        const HierarchyLevel& prev = lv.back();
        HierarchyLevel cur;
        cur.m = m;
        cur.b = d_total(prev.b).scaled(Rational(1, 2)) + p * prev.a + al * prev.rho -
                h * prev.b;
        cur.c = d_total(prev.c).scaled(Rational(-1, 2)) + q * prev.a + be * prev.delta -
                h * prev.c;
        cur.f = d_total(prev.f).scaled(Rational(1, 2)) + r * prev.a + (p + r) * prev.e -
                al * prev.rho - h * prev.f;
        cur.g = d_total(prev.g).scaled(Rational(-1, 2)) + s * prev.a + (q + s) * prev.e -
                be * prev.delta - h * prev.g;
        cur.rho = d_total(prev.rho) + al * prev.a + be * prev.b - p * prev.delta -
                  h * prev.rho;
        cur.delta = -d_total(prev.delta) + be * prev.a - al * prev.c + q * prev.rho -
                    h * prev.delta;
        DiffPoly a_integrand = p * cur.c - q * cur.b + al * cur.delta + be * cur.rho;
        DiffPoly e_integrand = r * cur.c - s * cur.b + (p + r) * cur.g -
                               (q + s) * cur.f - al * cur.delta - be * cur.rho;
        cur.a = integrate_level_part(a_integrand, m, "a");
        cur.e = integrate_level_part(e_integrand, m, "e");
        lv.push_back(std::move(cur));
    }
    return lv;
}

FlowSystem build_flow(int n, const std::vector<HierarchyLevel>& levels,
                      const std::optional<Rational>& mu_value) {
    if (n < 0 || static_cast<std::size_t>(n + 1) >= levels.size())
        throw std::invalid_argument("build_flow: need levels through n+1");
    const HierarchyLevel& nx = levels[static_cast<std::size_t>(n + 1)];
    DiffPoly mu = mu_value ? DiffPoly::constant(*mu_value) : DiffPoly::mu(1);
    FlowSystem fs;
    fs.n = n;
    DiffPoly e1 = nx.e;
    fs.rhs[0] = nx.b.scaled(Rational(2)) - mu * jet0(Field::P) * e1 * DiffPoly::integer(4);
    fs.rhs[1] = nx.c.scaled(Rational(-2)) + mu * jet0(Field::Q) * e1 * DiffPoly::integer(4);
    fs.rhs[2] = nx.rho - mu * jet0(Field::Alpha) * e1 * DiffPoly::integer(2);
    fs.rhs[3] = -nx.delta + mu * jet0(Field::Beta) * e1 * DiffPoly::integer(2);
    fs.rhs[4] = nx.f.scaled(Rational(2)) - mu * jet0(Field::R) * e1 * DiffPoly::integer(4);
    fs.rhs[5] = nx.g.scaled(Rational(-2)) + mu * jet0(Field::S) * e1 * DiffPoly::integer(4);
    return fs;
}

DerivationImage flow_image(const FlowSystem& flow) {
    std::array<DiffPoly, 6> rhs = flow.rhs;
    return [rhs](const Jet& j) -> DiffPoly {
        std::size_t slot = 0;
        switch (j.field) {
            case Field::P: slot = 0; break;
            case Field::Q: slot = 1; break;
            case Field::Alpha: slot = 2; break;
            case Field::Beta: slot = 3; break;
            case Field::R: slot = 4; break;
            case Field::S: slot = 5; break;
        }
        return d_total_n(rhs[slot], j.order);
    };
}

SuperMatrix build_M(const std::optional<Rational>& mu_value) {
    DiffPoly h = make_h_for(mu_value);
    SuperMatrix m(5, {0, 0, 0, 0, 1});
    LaurentPoly lam_h = LaurentPoly::from(DiffPoly::integer(1), 1) + LaurentPoly::from(h, 0);
    m.at(0, 0) = lam_h;
    m.at(0, 1) = LaurentPoly::from(jet0(Field::P));
    m.at(0, 3) = LaurentPoly::from(jet0(Field::R));
    m.at(0, 4) = LaurentPoly::from(jet0(Field::Alpha));
    m.at(1, 0) = LaurentPoly::from(jet0(Field::Q));
    m.at(1, 1) = -lam_h;
    m.at(1, 2) = LaurentPoly::from(jet0(Field::S));
    m.at(1, 4) = LaurentPoly::from(jet0(Field::Beta));
    m.at(2, 2) = lam_h;
    m.at(2, 3) = LaurentPoly::from(jet0(Field::P) + jet0(Field::R));
    m.at(3, 2) = LaurentPoly::from(jet0(Field::Q) + jet0(Field::S));
    m.at(3, 3) = -lam_h;
    m.at(4, 0) = LaurentPoly::from(jet0(Field::Beta));
    m.at(4, 1) = LaurentPoly::from(-jet0(Field::Alpha));
    m.at(4, 2) = LaurentPoly::from(-jet0(Field::Beta));
    m.at(4, 3) = LaurentPoly::from(jet0(Field::Alpha));
    return m;
}

SuperMatrix build_N_pattern(const HierarchyLevel& lv, int lambda_power) {
    SuperMatrix n(5, {0, 0, 0, 0, 1});
    auto put = [&](int i, int j, const DiffPoly& v) {
        n.at(i, j) = LaurentPoly::from(v, lambda_power);
    };
    put(0, 0, lv.a);
    put(0, 1, lv.b);
    put(0, 2, lv.e);
    put(0, 3, lv.f);
    put(0, 4, lv.rho);
    put(1, 0, lv.c);
    put(1, 1, -lv.a);
    put(1, 2, lv.g);
    put(1, 3, -lv.e);
    put(1, 4, lv.delta);
    put(2, 2, lv.a + lv.e);
    put(2, 3, lv.b + lv.f);
    put(3, 2, lv.c + lv.g);
    put(3, 3, -(lv.a + lv.e));
    put(4, 0, lv.delta);
    put(4, 1, -lv.rho);
    put(4, 2, -lv.delta);
    put(4, 3, lv.rho);
    return n;
}

SuperMatrix build_time_matrix(int n, const std::vector<HierarchyLevel>& levels,
                              const std::optional<Rational>& mu_value) {
    if (static_cast<std::size_t>(n + 1) >= levels.size())
        throw std::invalid_argument("build_time_matrix: need levels through n+1");
    SuperMatrix out(5, {0, 0, 0, 0, 1});
    for (int m = 0; m <= n; ++m)
        out = out + build_N_pattern(levels[static_cast<std::size_t>(m)], n - m);
    // Modification term: a = -2 mu e_{n+1} on the diag(1,-1,1,-1,0) pattern.
    DiffPoly mu_poly =
        mu_value ? DiffPoly::constant(*mu_value) : DiffPoly::mu(1);
    DiffPoly a_mod = (mu_poly * levels[static_cast<std::size_t>(n + 1)].e)
                         .scaled(Rational(-2));
    if (!a_mod.is_zero()) {
        LaurentPoly am = LaurentPoly::from(a_mod, 0);
        out.at(0, 0) += am;
        out.at(1, 1) -= am;
        out.at(2, 2) += am;
        out.at(3, 3) -= am;
    }
    return out;
}

SuperMatrix build_truncated_N(const std::vector<HierarchyLevel>& levels, int m_max) {
    if (static_cast<std::size_t>(m_max) >= levels.size())
        throw std::invalid_argument("build_truncated_N: not enough levels");
    SuperMatrix out(5, {0, 0, 0, 0, 1});
    for (int m = 0; m <= m_max; ++m)
        out = out + build_N_pattern(levels[static_cast<std::size_t>(m)], -m);
    return out;
}

SuperMatrix zero_curvature_residual(int n, const std::vector<HierarchyLevel>& levels,
                                    const std::optional<Rational>& mu_value) {
    SuperMatrix m = build_M(mu_value);
    SuperMatrix nn = build_time_matrix(n, levels, mu_value);
    FlowSystem flow = build_flow(n, levels, mu_value);
    SuperMatrix m_t = derive(m, flow_image(flow));
    return m_t - d_total(nn) + supercommutator(m, nn);
}

DiffPoly conserved_combination_residual(int n, const std::vector<HierarchyLevel>& levels,
                                        const std::optional<Rational>& mu_value) {
    DiffPoly k = jet0(Field::P) * jet0(Field::S) + jet0(Field::Q) * jet0(Field::R) +
                 jet0(Field::R) * jet0(Field::S) -
                 DiffPoly::integer(2) * jet0(Field::Alpha) * jet0(Field::Beta);
    FlowSystem flow = build_flow(n, levels, mu_value);
    DiffPoly k_t = derive(k, flow_image(flow));
    return k_t + d_total(levels[static_cast<std::size_t>(n + 1)].e).scaled(Rational(2));
}

}  // namespace akns
