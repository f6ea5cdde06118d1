// Square matrices of lambda-Laurent DiffPoly entries with a Z2 block
// signature. Products are plain entrywise sums of graded entry products; all
// Grassmann signs arise from the entry multiplication itself.
#pragma once

#include "akns/laurent.hpp"

#include <string>
#include <vector>

namespace akns {

class SuperMatrix {
public:
    SuperMatrix(int n, std::vector<int> parity_signature);

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] const std::vector<int>& signature() const { return parity_; }

    [[nodiscard]] LaurentPoly& at(int i, int j);
    [[nodiscard]] const LaurentPoly& at(int i, int j) const;

    SuperMatrix operator+(const SuperMatrix& o) const;
    SuperMatrix operator-(const SuperMatrix& o) const;
    SuperMatrix operator*(const SuperMatrix& o) const;
    SuperMatrix operator-() const;
    bool operator==(const SuperMatrix& o) const;
    bool operator!=(const SuperMatrix& o) const { return !(*this == o); }

    [[nodiscard]] SuperMatrix scaled(const Rational& k) const;
    [[nodiscard]] bool is_zero() const;

    // Supertrace: sum of even-index diagonal entries minus odd-index ones.
    [[nodiscard]] LaurentPoly supertrace() const;

    // True iff every nonzero entry is parity-homogeneous with parity equal to
    // signature[i] xor signature[j].
    [[nodiscard]] bool grading_ok() const;

    [[nodiscard]] SuperMatrix subst_mu(const Rational& value) const;

private:
    int n_;
    std::vector<int> parity_;
    std::vector<LaurentPoly> e_;  // row-major
    void check_compatible(const SuperMatrix& o) const;
};

// Plain matrix commutator XY - YX (the graded signs live in the entries).
SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y);

// Graded bracket of bare basis elements with declared parities:
// [x,y} = xy - (-1)^{px*py} yx.
SuperMatrix graded_bracket(const SuperMatrix& x, int px, const SuperMatrix& y, int py);

// Entrywise total x-derivative and derivation.
SuperMatrix d_total(const SuperMatrix& m);
SuperMatrix derive(const SuperMatrix& m, const DerivationImage& image);
SuperMatrix d_lambda(const SuperMatrix& m);

std::string to_text(const SuperMatrix& m);

}  // namespace akns
