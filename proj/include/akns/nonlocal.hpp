#pragma once
// Matrix (pseudo-)differential operators over the graded ring, with formal
// antiderivative factors.
//
// An entry of an operator matrix is
//     local part  +  sum of chains,
// where the local part is a finite sum  sum_k c_k * d^k  (c_k in the ring,
// k >= 0) and a chain is
//     S_0 o dinv o S_1 o dinv o ... o dinv o S_depth
// with local operators S_i between formal antiderivatives dinv.
//
// Application semantics: a row is applied to a vector as a whole.  All chain
// contributions of the row are pooled by their (content-normalized) prefix
// stages so that the integrand under each dinv is the *sum* over the row;
// pooling is what makes individually inexact pieces integrable.  Leftover
// canonical remainders are cancelled formally: remainders are basis-reduced,
// and for each basis element the total multiplier operator must either vanish
// or contain no d^0 part (then d^k o dinv = d^(k-1) applies).  Anything else
// raises NotExactError: the value would lie outside the ring.
//
// Composition is symbolic: locals compose by the Leibniz rule,
//     (c d^k) o (e d^l) = sum_i binom(k,i) c e^(i) d^(k-i+l),
// chains compose by splicing at the junction stage.  canonicalized() applies
// depth reduction:
//     dinv o T o dinv  with  T = sum_{k>=1} T_k d^k   ->  dinv o (sum T_k d^(k-1)),
//     dinv o G_x o dinv                               ->  G o dinv - dinv o G,
// after grouping parallel chains, then merges chains that share a normalized
// stage.  Structural equality of canonical forms is sufficient for operator
// equality; it is not necessary, so callers fall back to extensional checks.

#include "akns/diffpoly.hpp"
#include "akns/integrate.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace akns {

// --- Local operators --------------------------------------------------------

// sum_k coeff[k] * d^k with k >= 0; zero coefficients are never stored.
class LocalOp {
public:
    LocalOp() = default;
    explicit LocalOp(DiffPoly c, int k = 0) { add(std::move(c), k); }

    static LocalOp identity() { return LocalOp(DiffPoly::integer(1), 0); }

    bool is_zero() const { return parts_.empty(); }
    const std::map<int, DiffPoly>& parts() const { return parts_; }
    DiffPoly coeff(int k) const;
    int max_power() const { return parts_.empty() ? -1 : parts_.rbegin()->first; }

    void add(DiffPoly c, int k);

    LocalOp operator+(const LocalOp& o) const;
    LocalOp operator-(const LocalOp& o) const;
    LocalOp operator-() const;
    LocalOp scaled(const Rational& c) const;
    // Left multiplication by a ring element: f * (c d^k) = (f c) d^k.
    LocalOp left_multiplied(const DiffPoly& f) const;
    LocalOp subst_mu(const Rational& value) const;

    DiffPoly apply(const DiffPoly& v) const;

    // Leibniz composition.
    friend LocalOp compose(const LocalOp& a, const LocalOp& b);

    // Factors out rational content and the minimal mu power, leaving a
    // normalized operator; returns the extracted factor as a polynomial
    // (content * mu^minpow).  The zero operator returns factor 0.
    LocalOp normalized(DiffPoly& factor) const;

    friend bool operator==(const LocalOp& a, const LocalOp& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const LocalOp& a, const LocalOp& b) { return !(a == b); }
    friend bool operator<(const LocalOp& a, const LocalOp& b);

private:
    std::map<int, DiffPoly> parts_;
};

std::string to_text(const LocalOp& op);

// --- Chains -----------------------------------------------------------------

// stages[0] o dinv o stages[1] o ... o dinv o stages[back].
struct Chain {
    std::vector<LocalOp> stages;

    int depth() const { return static_cast<int>(stages.size()) - 1; }
    bool has_zero_stage() const;

    friend bool operator==(const Chain& a, const Chain& b) { return a.stages == b.stages; }
    friend bool operator<(const Chain& a, const Chain& b);
};

std::string to_text(const Chain& chain);

// --- Matrix entries ---------------------------------------------------------

struct OperatorEntry {
    LocalOp local;
    std::vector<Chain> chains;

    bool is_zero() const { return local.is_zero() && chains.empty(); }

    OperatorEntry operator+(const OperatorEntry& o) const;
    OperatorEntry operator-(const OperatorEntry& o) const;
    OperatorEntry operator-() const;
    OperatorEntry scaled(const Rational& c) const;
    OperatorEntry left_multiplied(const DiffPoly& f) const;
    OperatorEntry subst_mu(const Rational& value) const;

    friend OperatorEntry compose(const OperatorEntry& a, const OperatorEntry& b);

    // Depth reduction, pooling of parallel chains, deterministic ordering.
    OperatorEntry canonicalized() const;

    friend bool operator==(const OperatorEntry& a, const OperatorEntry& b) {
        return a.local == b.local && a.chains == b.chains;
    }
};

std::string to_text(const OperatorEntry& entry);

// Parses an operator expression.  Same grammar as parse_poly plus the primaries
// 'd' (total derivative) and 'dinv' (formal antiderivative); '*' composes.
// Example: "q*dinv*p - 1/2*d - h".
OperatorEntry parse_operator(std::string_view src);

// --- Operator matrices ------------------------------------------------------

class NonlocalOperator {
public:
    NonlocalOperator(int rows, int cols);

    // Builds from a rows x cols table of operator expressions ("" = zero).
    static NonlocalOperator from_table(const std::vector<std::vector<std::string>>& table);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    OperatorEntry& at(int i, int j);
    const OperatorEntry& at(int i, int j) const;

    NonlocalOperator operator+(const NonlocalOperator& o) const;
    NonlocalOperator operator-(const NonlocalOperator& o) const;
    NonlocalOperator scaled(const Rational& c) const;
    NonlocalOperator subst_mu(const Rational& value) const;
    NonlocalOperator composed_with(const NonlocalOperator& o) const;  // this o other
    NonlocalOperator canonicalized() const;

    friend bool operator==(const NonlocalOperator& a, const NonlocalOperator& b);

    // Applies the operator to a vector, pooling each row as described above.
    // Throws NotExactError (with the row in the context) if some row's value
    // does not lie in the ring.
    std::vector<DiffPoly> apply(const std::vector<DiffPoly>& v) const;

    // Like apply, but collects per-row failures instead of throwing.
    struct RowIssue {
        int row;
        DiffPoly core;        // irreducible integrand (basis element)
        DiffPoly multiplier;  // its d^0 multiplier
    };
    struct ApplyOutcome {
        std::vector<DiffPoly> value;  // rows with issues are left zero
        std::vector<bool> row_ok;
        std::vector<RowIssue> issues;
    };
    ApplyOutcome try_apply(const std::vector<DiffPoly>& v) const;

private:
    int rows_, cols_;
    std::vector<OperatorEntry> entries_;
};

std::string to_text(const NonlocalOperator& op);

}  // namespace akns
