#pragma once
// Grassmann-graded differential polynomials.
//
// A DiffPoly is a finite sum of terms
//     coeff * mu^k * (even jet monomial) * (odd word)
// where coeff is an exact rational, mu is a central even symbolic constant,
// the even part is a multiset of even jets with positive exponents, and the
// odd part is a canonical OddWord. Terms are kept in a sorted map, so every
// polynomial has one canonical form and equality is structural.

#include "akns/jet.hpp"
#include "akns/oddword.hpp"
#include "akns/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace akns {

enum class Parity { Zero, Even, Odd, Mixed };

struct TermKey {
    int mu_pow{0};
    // Sorted by jet, exponents >= 1. Even jets only.
    std::vector<std::pair<Jet, int>> even;
    OddWord odd;

    friend auto operator<=>(const TermKey&, const TermKey&) = default;

    // Grassmann parity of the term (parity of the odd word).
    int parity() const { return odd.parity(); }
    // Scaling weight: each jet contributes 1 + order (per exponent), mu contributes -1.
    int weight() const;
    // Multiset of field names, encoded as counts per field; used to block the
    // exact-integration solver.
    std::array<int, 6> field_counts() const;
};

class DiffPoly {
public:
    using TermMap = std::map<TermKey, Rational>;

    DiffPoly() = default;

    static DiffPoly zero() { return DiffPoly(); }
    static DiffPoly constant(const Rational& c);
    static DiffPoly integer(long v) { return constant(Rational(v)); }
    static DiffPoly mu(int pow = 1);
    static DiffPoly jet(Field f, int order = 0);
    static DiffPoly monomial(const Rational& c, const TermKey& k);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Parity parity() const;
    bool is_homogeneous_even() const { Parity p = parity(); return p == Parity::Even || p == Parity::Zero; }
    bool is_homogeneous_odd() const { Parity p = parity(); return p == Parity::Odd || p == Parity::Zero; }

    DiffPoly operator-() const;
    DiffPoly operator+(const DiffPoly& o) const;
    DiffPoly operator-(const DiffPoly& o) const;
    DiffPoly operator*(const DiffPoly& o) const;
    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    DiffPoly& operator*=(const DiffPoly& o) { *this = *this * o; return *this; }

    DiffPoly scaled(const Rational& c) const;
    DiffPoly pow(unsigned e) const;

    friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const DiffPoly& a, const DiffPoly& b) { return !(a == b); }
    // Deterministic total order (for use as a map key, e.g. operator pooling).
    friend bool operator<(const DiffPoly& a, const DiffPoly& b);

    // Highest derivative order of `f` appearing in the polynomial, -1 if absent.
    int max_order(Field f) const;
    // Highest mu power appearing.
    int max_mu_pow() const;
    // Lowest mu power appearing (0 for the zero polynomial).
    int min_mu_pow() const;
    bool contains_mu() const { return max_mu_pow() > 0; }
    // Multiplies by mu^delta. Negative delta requires every term to carry at
    // least |delta| powers of mu (throws std::logic_error otherwise).
    DiffPoly mu_shifted(int delta) const;
    // True iff some term has a constant key (no jets) — such terms are not
    // total x-derivatives.
    bool has_constant_term() const;

    // Substitutes a rational value for mu.
    DiffPoly subst_mu(const Rational& value) const;

    // Largest rational c (in the gcd-of-numerators / lcm-of-denominators
    // sense, signed by the leading term) such that (1/c)*this has coprime
    // integer coefficients with positive leading coefficient.
    // Returns 0 for the zero polynomial.
    Rational rational_content() const;

    // Adds c * key, dropping the entry if the sum cancels.
    void add_term(const TermKey& key, const Rational& c);

private:
    TermMap terms_;
};

// --- Derivations ----------------------------------------------------------

// Image of a jet under an even derivation. Must preserve Grassmann parity.
using DerivationImage = std::function<DiffPoly(const Jet&)>;

// Generic even derivation: extends jet |-> image(jet) by the Leibniz rule
// (no signs for an even derivation; reordering signs come from multiplication).
DiffPoly derive(const DiffPoly& f, const DerivationImage& image);

// Total x-derivative: jet (f, k) |-> (f, k+1).
DiffPoly d_total(const DiffPoly& f);
DiffPoly d_total_n(const DiffPoly& f, int n);

// --- Graded partial derivatives -------------------------------------------

// Side convention for partial derivatives with respect to odd jets:
//   Left:  d/dv acts from the left;  d(v w)/dv = w,  d(w v)/dv = (-1)^{|w|} w.
//   Right: d/dv acts from the right; d(w v)/dv = w,  d(v w)/dv = (-1)^{|w|} w.
// For a factor at position i (1-based) in a canonical word of length n the
// sign is (-1)^(i-1) on the left and (-1)^(n-i) on the right.
enum class Side { Left, Right };

DiffPoly partial(const DiffPoly& f, const Jet& v, Side side);

// Variational (Euler) derivative with respect to a field:
//   sum_k (-1)^k d^k( partial(f, (field,k), Left) ).
// The left convention here is fixed by the engine's verified identities; see
// README ("derivative side conventions").
DiffPoly euler_variational(const DiffPoly& f, Field u);

// --- Convenience builders --------------------------------------------------

// h = mu * (p s + q r + r s - 2 alpha beta), always stored expanded.
DiffPoly make_h();

}  // namespace akns
