#pragma once
// Exact formal antiderivatives in the graded differential ring.
//
// d_total is injective on the span of non-constant monomials, so a
// differential polynomial F has at most one constant-free G with d(G) = F.
// The solver works blockwise: terms are grouped by (mu power, field multiset,
// scaling weight), which d_total preserves except for raising the weight by
// one. Within a block every candidate monomial of weight-1 is enumerated and
// an exact linear system is solved by Gauss-Jordan elimination over the
// rationals with deterministic pivoting. The resulting splitting
//     F = d(G) + R
// is linear in F, making the remainder R canonical; R = 0 iff F is a total
// x-derivative.

#include "akns/diffpoly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace akns {

struct NotExactError : std::runtime_error {
    DiffPoly integrand;
    DiffPoly remainder;

    NotExactError(DiffPoly integrand_, DiffPoly remainder_, const std::string& context);
};

// Canonical splitting F = d(G) + R with G constant-free; linear in F.
std::pair<DiffPoly, DiffPoly> integrate_with_remainder(const DiffPoly& f);

// The unique constant-free antiderivative. Throws NotExactError (carrying the
// canonical remainder) when F is not a total derivative.
DiffPoly integrate_exact(const DiffPoly& f, const std::string& context = {});

}  // namespace akns
