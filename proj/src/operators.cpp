#include "akns/operators.hpp"

#include <stdexcept>

namespace akns {

namespace {

NonlocalOperator cached(const std::vector<std::vector<std::string>>& table) {
    return NonlocalOperator::from_table(table);
}

}  // namespace

NonlocalOperator build_L() {
    static const NonlocalOperator op = cached({
        {"q*dinv*p - 1/2*d - h", "-q*dinv*q",
         "q*dinv*alpha + beta", "q*dinv*beta", "", ""},
        {"p*dinv*p", "-p*dinv*q + 1/2*d - h",
         "p*dinv*alpha", "p*dinv*beta + alpha", "", ""},
        {"beta*dinv*p - alpha", "-beta*dinv*q",
         "beta*dinv*alpha - d - h", "beta*dinv*beta + q", "", ""},
        {"alpha*dinv*p", "-alpha*dinv*q + beta",
         "alpha*dinv*alpha - p", "alpha*dinv*beta + d - h", "", ""},
        {"s*dinv*p + (q+s)*dinv*r", "-s*dinv*q - (q+s)*dinv*s",
         "-q*dinv*alpha - beta", "-q*dinv*beta",
         "(q+s)*dinv*(p+r) - 1/2*d - h", "-(q+s)*dinv*(q+s)"},
        {"r*dinv*p + (p+r)*dinv*r", "-r*dinv*q - (p+r)*dinv*s",
         "-p*dinv*alpha", "-p*dinv*beta - alpha",
         "(p+r)*dinv*(p+r)", "-(p+r)*dinv*(q+s) + 1/2*d - h"},
    });
    return op;
}

NonlocalOperator build_R() {
    static const NonlocalOperator op = cached({
        {"1 + 2*mu*q*dinv*p", "-2*mu*q*dinv*q",
         "mu*q*dinv*alpha", "-mu*q*dinv*beta",
         "-1 + 2*mu*q*dinv*r", "-2*mu*q*dinv*s"},
        {"2*mu*p*dinv*p", "1 - 2*mu*p*dinv*q",
         "mu*p*dinv*alpha", "-mu*p*dinv*beta",
         "2*mu*p*dinv*r", "-1 - 2*mu*p*dinv*s"},
        {"-2*mu*beta*dinv*p", "2*mu*beta*dinv*q",
         "1/2 - mu*beta*dinv*alpha", "mu*beta*dinv*beta",
         "-2*mu*beta*dinv*r", "2*mu*beta*dinv*s"},
        {"-2*mu*alpha*dinv*p", "2*mu*alpha*dinv*q",
         "-mu*alpha*dinv*alpha", "-1/2 + mu*alpha*dinv*beta",
         "-2*mu*alpha*dinv*r", "2*mu*alpha*dinv*s"},
        {"-1 - 2*mu*(2*q+s)*dinv*p", "2*mu*(2*q+s)*dinv*q",
         "-mu*(2*q+s)*dinv*alpha", "mu*(2*q+s)*dinv*beta",
         "2 - 2*mu*(2*q+s)*dinv*r", "2*mu*(2*q+s)*dinv*s"},
        {"-2*mu*(2*p+r)*dinv*p", "-1 + 2*mu*(2*p+r)*dinv*q",
         "-mu*(2*p+r)*dinv*alpha", "mu*(2*p+r)*dinv*beta",
         "-2*mu*(2*p+r)*dinv*r", "2 + 2*mu*(2*p+r)*dinv*s"},
    });
    return op;
}

NonlocalOperator build_Q() {
    static const NonlocalOperator op = cached({
        {"-4*mu*p*dinv*r", "2 + 4*mu*p*dinv*s",
         "4*mu*p*dinv*alpha", "4*mu*p*dinv*beta",
         "-4*mu*p*dinv*(p+r)", "4*mu*p*dinv*(q+s)"},
        {"-2 + 4*mu*q*dinv*r", "-4*mu*q*dinv*s",
         "-4*mu*q*dinv*alpha", "-4*mu*q*dinv*beta",
         "4*mu*q*dinv*(p+r)", "-4*mu*q*dinv*(q+s)"},
        {"-2*mu*alpha*dinv*r", "2*mu*alpha*dinv*s",
         "2*mu*alpha*dinv*alpha", "1 + 2*mu*alpha*dinv*beta",
         "-2*mu*alpha*dinv*(p+r)", "2*mu*alpha*dinv*(q+s)"},
        {"2*mu*beta*dinv*r", "-2*mu*beta*dinv*s",
         "-1 - 2*mu*beta*dinv*alpha", "-2*mu*beta*dinv*beta",
         "2*mu*beta*dinv*(p+r)", "-2*mu*beta*dinv*(q+s)"},
        {"-4*mu*r*dinv*r", "4*mu*r*dinv*s",
         "4*mu*r*dinv*alpha", "4*mu*r*dinv*beta",
         "-4*mu*r*dinv*(p+r)", "2 + 4*mu*r*dinv*(q+s)"},
        {"4*mu*s*dinv*r", "-4*mu*s*dinv*s",
         "-4*mu*s*dinv*alpha", "-4*mu*s*dinv*beta",
         "-2 + 4*mu*s*dinv*(p+r)", "-4*mu*s*dinv*(q+s)"},
    });
    return op;
}

namespace {

// J block table with the (1,2) entry of the first block as a parameter: the
// derived product Q o R gives coefficient 8 there, the reference prints 4.
NonlocalOperator make_J(const char* j1_entry_12) {
    const std::string j11_11 = "8*mu*p*dinv*p";
    const std::string j11_21 = "-2 - 8*mu*q*dinv*p";
    const std::string j11_22 = "8*mu*q*dinv*q";
    const std::string j1_12 = j1_entry_12;
    std::vector<std::vector<std::string>> t(6, std::vector<std::string>(6));
    // Block (1,1) = J1, (1,2) = J2, (1,3) = -J1.
    t[0] = {j11_11, j1_12,
            "4*mu*p*dinv*alpha", "-4*mu*p*dinv*beta",
            "-(" + j11_11 + ")", "-(" + j1_12 + ")"};
    t[1] = {j11_21, j11_22,
            "-4*mu*q*dinv*alpha", "4*mu*q*dinv*beta",
            "-(" + j11_21 + ")", "-(" + j11_22 + ")"};
    // Block (2,1) = 0, (2,2) = J3, (2,3) = J4.
    t[2] = {"", "", "", "-1/2",
            "-4*mu*alpha*dinv*(p+r)", "4*mu*alpha*dinv*(q+s)"};
    t[3] = {"", "", "-1/2", "",
            "4*mu*beta*dinv*(p+r)", "-4*mu*beta*dinv*(q+s)"};
    // Block (3,1) = -J1, (3,2) = -J2, (3,3) = J5.
    t[4] = {"-(" + j11_11 + ")", "-(" + j1_12 + ")",
            "-4*mu*p*dinv*alpha", "4*mu*p*dinv*beta",
            "-8*mu*r*dinv*(p+r) - 8*mu*p*dinv*r",
            "4 + 8*mu*r*dinv*(q+s) + 8*mu*p*dinv*s"};
    t[5] = {"-(" + j11_21 + ")", "-(" + j11_22 + ")",
            "4*mu*q*dinv*alpha", "-4*mu*q*dinv*beta",
            "-4 + 8*mu*s*dinv*(p+r) + 8*mu*q*dinv*r",
            "-8*mu*s*dinv*(q+s) - 8*mu*q*dinv*s"};
    return NonlocalOperator::from_table(t);
}

}  // namespace

NonlocalOperator build_J() {
    static const NonlocalOperator op = make_J("2 - 8*mu*p*dinv*q");
    return op;
}

NonlocalOperator build_J_printed() {
    static const NonlocalOperator op = make_J("2 - 4*mu*p*dinv*q");
    return op;
}

OperatorEntry build_Delta() {
    static const OperatorEntry entry = parse_operator(
        "dinv*(2*q+s)*d*p + dinv*(2*p+r)*d*q + dinv*(q+s)*d*r + dinv*(p+r)*d*s"
        " + 2*dinv*beta*d*alpha - 2*dinv*alpha*d*beta");
    return entry;
}

namespace {

// A P entry: the local/dinv part as an expression, plus one Delta term
// coef * mu^2 * left * Delta * dinv * right.
struct PCell {
    const char* base;
    int coef;
    const char* left;
    const char* right;
};

OperatorEntry make_P_cell(const PCell& cell) {
    OperatorEntry e = parse_operator(cell.base);
    OperatorEntry dterm = compose(parse_operator(cell.left),
                                  compose(build_Delta(), parse_operator(cell.right)));
    DiffPoly factor = DiffPoly::mu(2).scaled(cell.coef);
    e = e + dterm.left_multiplied(factor);
    return e.canonicalized();
}

}  // namespace

NonlocalOperator build_P_expected() {
    static const NonlocalOperator op = [] {
        const PCell cells[6][6] = {
            {{"2*p*dinv*p - 4*mu*p*dinv*p*(1/2*d+h) + 2*mu*(d-2*h)*p*dinv*p", -4, "p", "dinv*p"},
             {"-2*p*dinv*q - 4*mu*p*dinv*q*(1/2*d-h) - 2*mu*(d-2*h)*p*dinv*q", 4, "p", "dinv*q"},
             {"p*dinv*alpha - 2*mu*p*dinv*alpha*(d+h) + mu*(d-2*h)*p*dinv*alpha", -2, "p", "dinv*alpha"},
             {"-alpha - p*dinv*beta - 2*mu*p*dinv*beta*(d-h) - mu*(d-2*h)*p*dinv*beta", 2, "p", "dinv*beta"},
             {"-2*p*dinv*p + 4*mu*p*dinv*(2*p+r)*(1/2*d+h) + 2*mu*(d-2*h)*p*dinv*r", -4, "p", "dinv*r"},
             {"2*p*dinv*q + 4*mu*p*dinv*(2*q+s)*(1/2*d-h) - 2*mu*(d-2*h)*p*dinv*s", 4, "p", "dinv*s"}},
            {{"-2*q*dinv*p + 4*mu*q*dinv*p*(1/2*d+h) + 2*mu*(d+2*h)*q*dinv*p", 4, "q", "dinv*p"},
             {"2*q*dinv*q + 4*mu*q*dinv*q*(1/2*d-h) - 2*mu*(d+2*h)*q*dinv*q", -4, "q", "dinv*q"},
             {"-beta - q*dinv*alpha + 2*mu*q*dinv*alpha*(d+h) + mu*(d+2*h)*q*dinv*alpha", 2, "q", "dinv*alpha"},
             {"q*dinv*beta + 2*mu*q*dinv*beta*(d-h) - mu*(d+2*h)*q*dinv*beta", -2, "q", "dinv*beta"},
             {"2*q*dinv*p - 4*mu*q*dinv*(2*p+r)*(1/2*d+h) + 2*mu*(d+2*h)*q*dinv*r", 4, "q", "dinv*r"},
             {"-2*q*dinv*q - 4*mu*q*dinv*(2*q+s)*(1/2*d-h) - 2*mu*(d+2*h)*q*dinv*s", -4, "q", "dinv*s"}},
            {{"alpha*dinv*p - 2*mu*alpha*dinv*p*(1/2*d+h) + 4*mu*beta*p*dinv*p - 2*mu*(d-h)*alpha*dinv*p",
              -2, "alpha", "dinv*p"},
             {"beta - alpha*dinv*q - 2*mu*alpha*dinv*q*(1/2*d-h) - 4*mu*beta*p*dinv*q + 2*mu*(d-h)*alpha*dinv*q",
              2, "alpha", "dinv*q"},
             {"-1/2*p + 1/2*alpha*dinv*alpha - mu*alpha*dinv*alpha*(d+h) + 2*mu*beta*p*dinv*alpha"
              " - mu*(d-h)*alpha*dinv*alpha",
              -1, "alpha", "dinv*alpha"},
             {"1/2*h - 1/2*d - 1/2*alpha*dinv*beta - mu*alpha*dinv*beta*(d-h) - 2*mu*beta*p*dinv*beta"
              " + mu*(d-h)*alpha*dinv*beta",
              1, "alpha", "dinv*beta"},
             {"-alpha*dinv*p + 2*mu*alpha*dinv*(2*p+r)*(1/2*d+h) + 4*mu*beta*p*dinv*r - 2*mu*(d-h)*alpha*dinv*r",
              -2, "alpha", "dinv*r"},
             {"-beta + alpha*dinv*q + 2*mu*alpha*dinv*(2*q+s)*(1/2*d-h) - 4*mu*beta*p*dinv*s"
              " + 2*mu*(d-h)*alpha*dinv*s",
              2, "alpha", "dinv*s"}},
            {{"alpha - beta*dinv*p + 2*mu*beta*dinv*p*(1/2*d+h) + 4*mu*alpha*q*dinv*p - 2*mu*(d+h)*beta*dinv*p",
              2, "beta", "dinv*p"},
             {"beta*dinv*q + 2*mu*beta*dinv*q*(1/2*d-h) - 4*mu*alpha*q*dinv*q + 2*mu*(d+h)*beta*dinv*q",
              -2, "beta", "dinv*q"},
             {"1/2*h + 1/2*d - 1/2*beta*dinv*alpha + mu*beta*dinv*alpha*(d+h) + 2*mu*alpha*q*dinv*alpha"
              " - mu*(d+h)*beta*dinv*alpha",
              1, "beta", "dinv*alpha"},
             {"1/2*q + 1/2*beta*dinv*beta + mu*beta*dinv*beta*(d-h) - 2*mu*alpha*q*dinv*beta"
              " + mu*(d+h)*beta*dinv*beta",
              -1, "beta", "dinv*beta"},
             {"-alpha + beta*dinv*p - 2*mu*beta*dinv*(2*p+r)*(1/2*d+h) + 4*mu*alpha*q*dinv*r"
              " - 2*mu*(d+h)*beta*dinv*r",
              2, "beta", "dinv*r"},
             {"-beta*dinv*q - 2*mu*beta*dinv*(2*q+s)*(1/2*d-h) - 4*mu*alpha*q*dinv*s + 2*mu*(d+h)*beta*dinv*s",
              -2, "beta", "dinv*s"}},
            {{"-2*p*dinv*p - 4*mu*r*dinv*p*(1/2*d+h) - 2*mu*(d-2*h)*(2*p+r)*dinv*p", -4, "r", "dinv*p"},
             {"-d + 2*h + 2*p*dinv*q - 4*mu*r*dinv*q*(1/2*d-h) + 2*mu*(d-2*h)*(2*p+r)*dinv*q", 4, "r", "dinv*q"},
             {"-p*dinv*alpha - 2*mu*r*dinv*alpha*(d+h) - mu*(d-2*h)*(2*p+r)*dinv*alpha", -2, "r", "dinv*alpha"},
             {"p*dinv*beta - 2*mu*r*dinv*beta*(d-h) + mu*(d-2*h)*(2*p+r)*dinv*beta", 2, "r", "dinv*beta"},
             {"2*(2*p+r)*dinv*p + 2*(p+r)*dinv*r + 4*mu*r*dinv*(2*p+r)*(1/2*d+h)"
              " - 2*mu*(d-2*h)*(2*p+r)*dinv*r",
              -4, "r", "dinv*r"},
             {"2*d - 4*h + 2*(2*q+s)*dinv*q + 2*(q+s)*dinv*s + 4*mu*r*dinv*(2*q+s)*(1/2*d-h)"
              " + 2*mu*(d-2*h)*(2*p+r)*dinv*s",
              4, "r", "dinv*s"}},
            {{"-d - 2*h + 2*q*dinv*p + 4*mu*s*dinv*p*(1/2*d+h) - 2*mu*(d+2*h)*(2*q+s)*dinv*p", 4, "s", "dinv*p"},
             {"-2*q*dinv*q - 4*mu*s*dinv*q*(1/2*d-h) + 2*mu*(d+2*h)*(2*q+s)*dinv*q", -4, "s", "dinv*q"},
             {"-p*dinv*alpha - 2*mu*s*dinv*alpha*(d+h) - mu*(d+2*h)*(2*q+s)*dinv*alpha", 2, "s", "dinv*alpha"},
             {"p*dinv*beta - 2*mu*s*dinv*beta*(d-h) + mu*(d+2*h)*(2*q+s)*dinv*beta", -2, "s", "dinv*beta"},
             {"2*d + 4*h + 2*(2*p+r)*dinv*p + 2*(p+r)*dinv*r + 4*mu*s*dinv*(2*q+s)*(1/2*d+h)"
              " - 2*mu*(d+2*h)*(2*q+s)*dinv*r",
              4, "s", "dinv*r"},
             {"2*d - 4*h + 2*(2*q+s)*dinv*q + 2*(q+s)*dinv*s + 4*mu*s*dinv*(2*q+s)*(1/2*d-h)"
              " + 2*mu*(d+2*h)*(2*q+s)*dinv*s",
              -4, "s", "dinv*s"}},
        };
        NonlocalOperator result(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) result.at(i, j) = make_P_cell(cells[i][j]);
        return result;
    }();
    return op;
}

std::vector<DiffPoly> level_vector(const std::vector<HierarchyLevel>& levels, int m) {
    if (m < 0 || m >= static_cast<int>(levels.size()))
        throw std::out_of_range("level_vector: level not derived");
    const HierarchyLevel& lv = levels[static_cast<std::size_t>(m)];
    return {lv.c, lv.b, lv.delta, lv.rho, lv.g, lv.f};
}

namespace {

std::vector<DiffPoly> gradient_vector_impl(const std::vector<HierarchyLevel>& levels, int n,
                                           const std::optional<Rational>& mu_value,
                                           int odd_mu_sign) {
    if (n + 1 >= static_cast<int>(levels.size()))
        throw std::out_of_range("gradient_vector: level not derived");
    const HierarchyLevel& lv = levels[static_cast<std::size_t>(n + 1)];
    DiffPoly mu = mu_value ? DiffPoly::constant(*mu_value) : DiffPoly::mu(1);
    DiffPoly w = lv.a.scaled(2) + lv.e;
    auto jet = [](Field f) { return DiffPoly::jet(f, 0); };
    return {
        lv.c.scaled(2) + lv.g + (mu * jet(Field::S) * w).scaled(2),
        lv.b.scaled(2) + lv.f + (mu * jet(Field::R) * w).scaled(2),
        lv.delta.scaled(2) + (mu * jet(Field::Beta) * w).scaled(4 * odd_mu_sign),
        lv.rho.scaled(-2) - (mu * jet(Field::Alpha) * w).scaled(4 * odd_mu_sign),
        lv.c + lv.g + (mu * (jet(Field::Q) + jet(Field::S)) * w).scaled(2),
        lv.b + lv.f + (mu * (jet(Field::P) + jet(Field::R)) * w).scaled(2),
    };
}

}  // namespace

std::vector<DiffPoly> gradient_vector(const std::vector<HierarchyLevel>& levels, int n,
                                      const std::optional<Rational>& mu_value) {
    return gradient_vector_impl(levels, n, mu_value, +1);
}

std::vector<DiffPoly> variational_gradient_vector(const std::vector<HierarchyLevel>& levels,
                                                  int n,
                                                  const std::optional<Rational>& mu_value) {
    return gradient_vector_impl(levels, n, mu_value, -1);
}

}  // namespace akns
