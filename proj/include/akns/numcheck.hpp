#pragma once
// Independent numeric oracle: evaluates the symbolic identities with fields
// valued in a finite Grassmann algebra over a periodic spatial grid.
//
// Model: each field value is an element of the real Grassmann algebra on N
// generators (default 6).  Even fields carry even-degree values (body plus
// even soul), odd fields carry odd-degree values.  Per Grassmann coefficient
// a field is a trigonometric polynomial sampled on a uniform periodic grid
// of 2^k points (default 32), so x-derivatives are spectrally exact and the
// formal antiderivative has a concrete realization: mode-wise division on
// the nonzero modes.  The constant mode is the modeling seam:
//
//   * antiderivative() is the strict form — it requires the integrand's mean
//     to vanish (NonZeroMean otherwise) and returns the mean-zero periodic
//     antiderivative;
//   * apply_numeric() realizes every dinv inside an operator as the mean-zero
//     PROJECTION antiderivative.  A projected dinv differs from the symbolic
//     one by a constant of integration per chain level, so operator routes
//     are compared modulo the finite-dimensional gauge space spanned by
//     pushing a constant through each chain prefix; cross_route_residual
//     removes that space by least squares and reports what is left.
//
// Everything here is plumbing for verification, not part of the derivation:
// the symbolic engine is the source of truth and this module only
// cross-validates it with floating-point Grassmann arithmetic.

#include "akns/diffpoly.hpp"
#include "akns/hierarchy.hpp"
#include "akns/nonlocal.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace akns {

// --- Grassmann numbers -------------------------------------------------------

// Element of the real Grassmann algebra on `generators()` odd generators.
// Coefficients are indexed by bitmask subsets of the generators; the basis
// monomial for a mask is the product of its generators in increasing index
// order.  theta_i^2 = 0 and theta_i theta_j = -theta_j theta_i, so the
// product of basis monomials is subset-XOR with a transposition-count sign.
class GrassmannNumber {
public:
    GrassmannNumber() = default;
    explicit GrassmannNumber(int gens);

    static GrassmannNumber scalar(int gens, double body);
    static GrassmannNumber generator(int gens, int index);

    int generators() const { return gens_; }
    std::size_t dimension() const { return coeff_.size(); }

    double coeff(unsigned mask) const { return coeff_[mask]; }
    void set_coeff(unsigned mask, double v) { coeff_[mask] = v; }
    double body() const { return coeff_.empty() ? 0.0 : coeff_[0]; }

    bool is_zero(double eps = 0.0) const;
    double max_abs() const;

    GrassmannNumber& operator+=(const GrassmannNumber& o);
    GrassmannNumber& operator-=(const GrassmannNumber& o);
    GrassmannNumber operator+(const GrassmannNumber& o) const;
    GrassmannNumber operator-(const GrassmannNumber& o) const;
    GrassmannNumber operator-() const;
    GrassmannNumber scaled(double c) const;
    GrassmannNumber operator*(const GrassmannNumber& o) const;

    // Projection onto even/odd Grassmann degree.
    GrassmannNumber graded_part(int parity) const;

private:
    int gens_ = 0;
    std::vector<double> coeff_;  // size 1 << gens_
};

// Sign acquired moving basis monomial `b` left through basis monomial `a`
// when forming theta_a * theta_b (masks must be disjoint): the number of
// pairs i in a, j in b with i > j, mod 2.
int grassmann_sign(unsigned a, unsigned b);

// --- Grids and samples -------------------------------------------------------

using GrassGrid = std::vector<GrassmannNumber>;  // one value per grid point

struct NumConfig {
    int grid = 32;            // number of points (power of two)
    int modes = 5;            // max trig modes per coefficient function
    int gens = 6;             // Grassmann generators
    double amplitude = 0.35;  // scale of random trig coefficients
    double mu = 0.0;          // numeric value substituted for mu
    std::uint64_t seed = 20260819ULL;
};

// Deterministic RNG: mt19937_64 with the 53-bit mantissa construction.
class NumRng {
public:
    explicit NumRng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t raw() { return eng_(); }
    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    // Uniform in [-1, 1).
    double symmetric() { return 2.0 * uniform() - 1.0; }

private:
    std::mt19937_64 eng_;
};

// Thrown by the strict antiderivative when the integrand has a nonzero mean.
struct NonZeroMean : std::runtime_error {
    double mean_magnitude;
    explicit NonZeroMean(double m);
};

// Values of the six fields on the grid, with lazily cached spectral jets.
// Even fields hold even-degree values, odd fields odd-degree values.
class FieldSample {
public:
    FieldSample(NumConfig cfg, std::array<GrassGrid, 6> values);

    // Random sample: even fields get body trig polynomials, odd fields get
    // odd-soul trig polynomials on a fixed generator pattern (degraded, with
    // fewer soul directions, below 6 generators).
    static FieldSample random(const NumConfig& cfg, NumRng& rng);
    static FieldSample zero(const NumConfig& cfg);

    const NumConfig& config() const { return cfg_; }
    const GrassGrid& value(Field f) const;
    // Spectrally exact x-derivative grids, cached per (field, order).
    const GrassGrid& jet(Field f, int order) const;
    // True when the generator count cannot support all quartic odd words.
    bool degraded() const;

private:
    NumConfig cfg_;
    std::array<GrassGrid, 6> values_;
    mutable std::map<std::pair<int, int>, GrassGrid> jets_;
};

// --- Grid calculus -----------------------------------------------------------

GrassGrid grid_zero(const NumConfig& cfg);
GrassGrid grid_constant(const NumConfig& cfg, double body);
GrassGrid operator+(const GrassGrid& a, const GrassGrid& b);
GrassGrid operator-(const GrassGrid& a, const GrassGrid& b);
GrassGrid operator*(const GrassGrid& a, const GrassGrid& b);  // pointwise
GrassGrid grid_scaled(const GrassGrid& g, double c);
double grid_max_abs(const GrassGrid& g);

// Spectrally exact derivative (per Grassmann coefficient).
GrassGrid spectral_dx(const GrassGrid& g);
// Strict antiderivative: requires |mean| <= mean_tol * (max |g| + 1), throws
// NonZeroMean otherwise; returns the mean-zero antiderivative.
GrassGrid antiderivative(const GrassGrid& g, double mean_tol = 1e-10);
// Projection antiderivative: drops the constant mode silently (the numeric
// realization of dinv inside operators).
GrassGrid antiderivative_projected(const GrassGrid& g);
// Quadrature of the periodic grid over one period of length 2*pi.
GrassmannNumber quadrature(const GrassGrid& g);

// Pointwise evaluation of a differential polynomial; mu evaluates to cfg.mu.
GrassGrid eval(const DiffPoly& f, const FieldSample& s);

// --- Vectors and operators ---------------------------------------------------

// A column in potential order (p, q, alpha, beta, r, s).
using GridVector = std::array<GrassGrid, 6>;

GridVector eval_vector(const std::vector<DiffPoly>& v, const FieldSample& s);

// Random test vector.  sector 0: component parities match the potentials
// (even, even, odd, odd, even, even) with even components carrying body and
// even soul; sector 1: all component parities flipped.
GridVector random_vector(const NumConfig& cfg, NumRng& rng, int sector);

// <v, w> = integral of sum_i v_i w_i (Grassmann product, in that order).
GrassmannNumber pairing(const GridVector& v, const GridVector& w);

// Applies a 6x6 nonlocal operator numerically; every dinv is the projection
// antiderivative.
GridVector apply_numeric(const NonlocalOperator& op, const GridVector& v, const FieldSample& s);

// --- Reports -----------------------------------------------------------------

struct NumCheckItem {
    std::string label;
    bool ok = false;
    double residual = 0.0;  // relative, against the item's own scale
    double tol = 0.0;
    std::string note;
};

struct NumCheckReport {
    std::string subject;
    std::vector<NumCheckItem> items;
    bool degraded = false;
    std::string degraded_note;

    bool ok() const;
    double worst() const;
};

// --- Checks ------------------------------------------------------------------

// Graded and plain skew-adjointness of `op` over random samples and test
// vectors: per trial checks |<v, Op w> + (-1)^{|v||w|} <w, Op v>| (graded)
// and |<v, Op w> + <w, Op v>| (plain), relative to the pairing scale.  The
// `graded` flag selects which variant the ok verdict is pinned to; both
// residuals are reported per trial.
NumCheckReport skew_check(const NonlocalOperator& op, int trials, const NumConfig& cfg,
                          double tol = 1e-7, bool graded = true);

// The stationary recursion evaluated numerically on one sample: the b, c, f,
// g, rho, delta rows as pointwise grid identities (numeric products and
// spectral derivatives against the symbolically derived next level), and the
// a, e rows through the strict numeric antiderivative.
NumCheckReport recursion_numeric(const std::vector<HierarchyLevel>& levels, int m_max,
                                 const FieldSample& s, double tol = 1e-8);

// Zero curvature M_t - N_x + [M, N] = 0 for flow n, evaluated per lambda
// power with numeric matrix products and spectral N_x (M_t is the symbolic
// prolongation of the flow applied to M, then evaluated).
NumCheckReport zero_curvature_numeric(int n, const std::vector<HierarchyLevel>& levels,
                                      const FieldSample& s, double tol = 1e-8);

// Cross-route check: eval(flow rows) against apply_numeric(op, eval(vec))
// modulo the chain gauge space (least squares over the constants of
// integration, one Grassmann constant per chain level per row).
NumCheckReport cross_route_residual(const std::string& subject, const NonlocalOperator& op,
                                    const std::vector<DiffPoly>& vec, const FlowSystem& flow,
                                    const FieldSample& s, double tol = 1e-8);

// The full battery behind the acceptance criterion: `samples` random samples
// (mu alternating between 0 and 2/5), each running the recursion, the n=1,2
// zero-curvature checks, and the first-structure cross-routes
// J . gradient = flow and Q . level = flow for n = 1, 2.
NumCheckReport numeric_identity_battery(int samples, const NumConfig& cfg);

// RK4 conservation probe for the n=2 flow: steps the six fields and reports
// the relative drift of the probe functional integral(2 a_2 + e_2) dx and of
// the Hamiltonian normalization -integral(2 a_3 + e_3) dx.  Aborts (and
// reports) when the state norm exceeds 1e6.
struct ConservationReport {
    bool ok = false;
    bool blew_up = false;
    int steps = 0;
    double dt = 0.0;
    double drift_raw = 0.0;   // relative drift of integral(2 a_2 + e_2)
    double drift_ham = 0.0;   // relative drift of -integral(2 a_3 + e_3)
    double tol = 0.0;
    std::string note;
};

ConservationReport conservation_probe(int steps, double dt, const NumConfig& cfg, double tol);

}  // namespace akns
