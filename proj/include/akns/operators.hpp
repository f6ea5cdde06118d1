#pragma once
// The reference operator tables of the hierarchy, embedded as operator
// expressions: the recursion operator L, the gradient-recursion operator R,
// the first Hamiltonian operator Q, the second operator J (as printed and
// with the corrected (1,2) entry), and the expected product operator P with
// its nonlocal Delta factor.
//
// Vector conventions:
//   level vectors   (c, b, delta, rho, g, f)   -- inputs/outputs of L and R,
//   flow vectors    (p, q, alpha, beta, r, s)  -- rows of Q, J, P,
//   gradient vectors: the six variational components, see gradient_vector.

#include "akns/hierarchy.hpp"
#include "akns/nonlocal.hpp"

namespace akns {

// Recursion operator: level_vector(m+1) = L * level_vector(m).
NonlocalOperator build_L();

// Gradient recursion: level_vector(n+1) = R * gradient_vector(n).
NonlocalOperator build_R();

// First Hamiltonian operator: flow(n) = Q * level_vector(n+1).
NonlocalOperator build_Q();

// Second Hamiltonian operator J = Q o R, with the machine-derived (1,2)
// entry (the reference's printed coefficient differs; see build_J_printed).
NonlocalOperator build_J();
NonlocalOperator build_J_printed();

// The nonlocal factor appearing in the mu^2 terms of P.
OperatorEntry build_Delta();

// The reference's printed product operator P = Q o L o R (per-entry table
// with Delta terms). Differences against the actual product are candidate
// transcription errors; they are classified, not assumed.
NonlocalOperator build_P_expected();

// (c_m, b_m, delta_m, rho_m, g_m, f_m) from derived levels.
std::vector<DiffPoly> level_vector(const std::vector<HierarchyLevel>& levels, int m);

// The reference gradient vector at level n+1, with w = 2 a_{n+1} + e_{n+1}:
//   ( 2c+g+2 mu s w, 2b+f+2 mu r w, 2 delta+4 mu beta w,
//     -2 rho-4 mu alpha w, c+g+2 mu (q+s) w, b+f+2 mu (p+r) w ).
// This is the vector the operator tables (R, Q, J, P) are calibrated against:
// R * gradient_vector(n) = level_vector(n+1) and flow(n) = J * gradient_vector(n).
std::vector<DiffPoly> gradient_vector(const std::vector<HierarchyLevel>& levels, int n,
                                      const std::optional<Rational>& mu_value = {});

// The genuine left variational derivative of the stored Hamiltonian density
// (the unique vector G with derive(H, v) = sum_u v_u * euler_left(H, u) up to
// total derivatives).  It differs from gradient_vector only in the sign of the
// mu-terms of the two odd rows:
//   gradient_vector(n) - variational_gradient_vector(n)
//       = (0, 0, 8 mu beta w, -8 mu alpha w, 0, 0).
// At mu = 0 the two vectors coincide.
std::vector<DiffPoly> variational_gradient_vector(const std::vector<HierarchyLevel>& levels,
                                                  int n,
                                                  const std::optional<Rational>& mu_value = {});

}  // namespace akns
