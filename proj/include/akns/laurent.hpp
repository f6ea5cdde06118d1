// Laurent polynomials in the spectral parameter lambda with DiffPoly
// coefficients. Zero coefficients are never stored, so is_zero() means the
// map is empty.
#pragma once

#include "akns/diffpoly.hpp"

#include <map>
#include <string>

namespace akns {

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly from(DiffPoly c, int power = 0);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::map<int, DiffPoly>& coeffs() const { return coeffs_; }
    [[nodiscard]] DiffPoly coeff(int power) const;
    [[nodiscard]] int min_power() const;  // requires !is_zero()
    [[nodiscard]] int max_power() const;  // requires !is_zero()

    void set_coeff(int power, DiffPoly c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    [[nodiscard]] LaurentPoly scaled(const Rational& k) const;
    [[nodiscard]] LaurentPoly shifted(int dpower) const;  // multiply by lambda^dpower
    [[nodiscard]] LaurentPoly subst_mu(const Rational& value) const;

    // Parity of the whole polynomial across all coefficients.
    [[nodiscard]] Parity parity() const;

private:
    std::map<int, DiffPoly> coeffs_;
};

// Entrywise total x-derivative.
LaurentPoly d_total(const LaurentPoly& f);
// Entrywise derivation by a jet-image map.
LaurentPoly derive(const LaurentPoly& f, const DerivationImage& image);
// d/d lambda.
LaurentPoly d_lambda(const LaurentPoly& f);

std::string to_text(const LaurentPoly& f);

}  // namespace akns
