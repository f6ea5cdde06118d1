// The coupled hierarchy: spectral matrix M, stationary-equation recursion for
// the expansion coefficients, flows, time matrices N^(n), and the
// zero-curvature residual.
#pragma once

#include "akns/integrate.hpp"
#include "akns/supermatrix.hpp"

#include <array>
#include <optional>
#include <vector>

namespace akns {

struct HierarchyLevel {
    int m = 0;
    DiffPoly a, b, c, e, f, g, rho, delta;
};

// Levels 0..n_max from the recursion with a0 = e0 = 1, all else 0 at level 0,
// and integration constants 0 for a_m, e_m (m >= 1). With mu_value set, h is
// specialized before deriving (mu_value = 0 gives the reduced hierarchy).
// Throws NotExactError if an a/e integrand fails to be exact.
std::vector<HierarchyLevel> derive_levels(int n_max,
                                          const std::optional<Rational>& mu_value = {});

struct FlowSystem {
    int n = 0;
    // Right-hand sides in the potential order (p, q, alpha, beta, r, s).
    std::array<DiffPoly, 6> rhs;
};

// The potential order used by flows and operator vectors.
constexpr std::array<Field, 6> kPotentialOrder{Field::P,    Field::Q, Field::Alpha,
                                               Field::Beta, Field::R, Field::S};

// u_{t_n} from the levels: requires levels through n+1. Pass the same
// mu_value the levels were derived with so the combination coefficients
// -4 mu p e_{n+1} etc. use the matching mu.
FlowSystem build_flow(int n, const std::vector<HierarchyLevel>& levels,
                      const std::optional<Rational>& mu_value = {});

// The prolonged evolutionary derivation defined by a flow.
DerivationImage flow_image(const FlowSystem& flow);

// Spectral matrix M (5x5, signature 4|1).
SuperMatrix build_M(const std::optional<Rational>& mu_value = {});

// The N-pattern matrix for one coefficient octet, at a given lambda power.
SuperMatrix build_N_pattern(const HierarchyLevel& lv, int lambda_power);

// Time matrix N^(n) = sum_{m=0..n} N_m lambda^{n-m} + Delta_n,
// Delta_n = (-2 mu e_{n+1}) diag(1,-1,1,-1,0). Requires levels through n+1.
// With mu_value set, the modification term uses that value of mu.
SuperMatrix build_time_matrix(int n, const std::vector<HierarchyLevel>& levels,
                              const std::optional<Rational>& mu_value = {});

// Truncated stationary solution N = sum_{m=0..m_max} N_m lambda^{-m}
// (used by the trace-identity verification).
SuperMatrix build_truncated_N(const std::vector<HierarchyLevel>& levels, int m_max);

// M_{t_n} - d/dx N^(n) + [M, N^(n)]; identically zero certifies the flow.
SuperMatrix zero_curvature_residual(int n, const std::vector<HierarchyLevel>& levels,
                                    const std::optional<Rational>& mu_value = {});

// (ps + qr + rs - 2 alpha beta)_{t_n} + 2 d/dx e_{n+1}; zero for valid flows.
DiffPoly conserved_combination_residual(int n, const std::vector<HierarchyLevel>& levels,
                                        const std::optional<Rational>& mu_value = {});

}  // namespace akns
