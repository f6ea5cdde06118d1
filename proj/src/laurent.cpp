#include "akns/laurent.hpp"

#include "akns/io.hpp"

#include <sstream>
#include <stdexcept>

namespace akns {

LaurentPoly LaurentPoly::from(DiffPoly c, int power) {
    LaurentPoly out;
    if (!c.is_zero()) out.coeffs_.emplace(power, std::move(c));
    return out;
}

DiffPoly LaurentPoly::coeff(int power) const {
    auto it = coeffs_.find(power);
    return it == coeffs_.end() ? DiffPoly::zero() : it->second;
}

int LaurentPoly::min_power() const {
    if (coeffs_.empty()) throw std::logic_error("min_power of zero LaurentPoly");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_power() const {
    if (coeffs_.empty()) throw std::logic_error("max_power of zero LaurentPoly");
    return coeffs_.rbegin()->first;
}

void LaurentPoly::set_coeff(int power, DiffPoly c) {
    if (c.is_zero())
        coeffs_.erase(power);
    else
        coeffs_[power] = std::move(c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.coeffs_) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out += o;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out -= o;
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [ka, ca] : coeffs_) {
        for (const auto& [kb, cb] : o.coeffs_) {
            DiffPoly prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = out.coeffs_.find(ka + kb);
            if (it == out.coeffs_.end()) {
                out.coeffs_.emplace(ka + kb, std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) out.coeffs_.erase(it);
            }
        }
    }
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& k) const {
    LaurentPoly out;
    if (rational_sign(k) == 0) return out;
    for (const auto& [p, c] : coeffs_) out.coeffs_.emplace(p, c.scaled(k));
    return out;
}

LaurentPoly LaurentPoly::shifted(int dpower) const {
    LaurentPoly out;
    for (const auto& [p, c] : coeffs_) out.coeffs_.emplace(p + dpower, c);
    return out;
}

LaurentPoly LaurentPoly::subst_mu(const Rational& value) const {
    LaurentPoly out;
    for (const auto& [p, c] : coeffs_) out.set_coeff(p, c.subst_mu(value));
    return out;
}

Parity LaurentPoly::parity() const {
    Parity acc = Parity::Zero;
    for (const auto& [p, c] : coeffs_) {
        (void)p;
        Parity cp = c.parity();
        if (cp == Parity::Zero) continue;
        if (acc == Parity::Zero)
            acc = cp;
        else if (acc != cp)
            return Parity::Mixed;
    }
    return acc;
}

LaurentPoly d_total(const LaurentPoly& f) {
    LaurentPoly out;
    for (const auto& [p, c] : f.coeffs()) out.set_coeff(p, d_total(c));
    return out;
}

LaurentPoly derive(const LaurentPoly& f, const DerivationImage& image) {
    LaurentPoly out;
    for (const auto& [p, c] : f.coeffs()) out.set_coeff(p, derive(c, image));
    return out;
}

LaurentPoly d_lambda(const LaurentPoly& f) {
    LaurentPoly out;
    for (const auto& [p, c] : f.coeffs()) {
        if (p == 0) continue;
        out.set_coeff(p - 1, c.scaled(Rational(p)));
    }
    return out;
}

std::string to_text(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        if (!first) os << "  +  ";
        first = false;
        if (it->first == 0) {
            os << to_text(it->second);
        } else {
            os << "lambda^" << it->first << " * (" << to_text(it->second) << ")";
        }
    }
    return os.str();
}

}  // namespace akns
