// Bases of the matrix Lie superalgebras sl(2,1) (3x3, signature 2|1) and
// sl(4,1) (5x5, signature 4|1), the reference bracket tables, and their
// verification: every printed relation recomputed from the matrices, closure
// of the bracket in the basis by exact linear solve, graded antisymmetry,
// graded Jacobi over all triples, and supertrace invariance.
#pragma once

#include "akns/supermatrix.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace akns {

struct AlgebraBasis {
    std::string name;                  // "sl21" or "sl41"
    std::vector<int> signature;        // matrix block parity signature
    std::vector<SuperMatrix> elems;    // basis matrices (constant entries)
    std::vector<int> parity;           // parity of each basis element
    std::vector<std::string> names;    // "E1".."E5" or "e1".."e8"
};

const AlgebraBasis& sl21_basis();
const AlgebraBasis& sl41_basis();

struct Relation {
    std::string label;  // printed equality, normalized to one bracket per entry
    int i, j;           // 1-based basis indices
    bool anti;          // anticommutator (both arguments odd)
    std::vector<std::pair<int, Rational>> rhs;  // expected basis combination
};

const std::vector<Relation>& sl21_relations();
const std::vector<Relation>& sl41_relations();

struct RelationResult {
    std::string label;
    bool pass = false;
    std::string derived;  // basis expansion of the computed bracket
};

struct LieReport {
    std::string algebra;
    std::vector<RelationResult> relations;
    int n_pass = 0;
    int n_fail = 0;
    bool closure_ok = false;
    bool antisymmetry_ok = false;
    bool jacobi_ok = false;
    bool supertrace_invariance_ok = false;
    // Full structure table: one line per ordered pair (i <= j), derived form.
    std::vector<std::string> structure_table;
    [[nodiscard]] bool all_ok() const {
        return n_fail == 0 && closure_ok && antisymmetry_ok && jacobi_ok &&
               supertrace_invariance_ok;
    }
};

// Expand a constant matrix in the basis; nullopt if it is not in the span.
std::optional<std::vector<Rational>> expand_in_basis(const AlgebraBasis& basis,
                                                     const SuperMatrix& m);

LieReport verify_relations(const AlgebraBasis& basis, const std::vector<Relation>& rels);
LieReport verify_sl21();
LieReport verify_sl41();

nlohmann::json lie_report_to_json(const LieReport& r);
std::string lie_report_to_text(const LieReport& r);

}  // namespace akns
