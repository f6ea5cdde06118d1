#include "akns/supermatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace akns {

SuperMatrix::SuperMatrix(int n, std::vector<int> parity_signature)
    : n_(n), parity_(std::move(parity_signature)), e_(static_cast<std::size_t>(n) * n) {
    if (n_ <= 0) throw std::invalid_argument("SuperMatrix size must be positive");
    if (static_cast<int>(parity_.size()) != n_)
        throw std::invalid_argument("parity signature size mismatch");
    for (int p : parity_)
        if (p != 0 && p != 1) throw std::invalid_argument("parity entries must be 0 or 1");
}

LaurentPoly& SuperMatrix::at(int i, int j) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("SuperMatrix::at");
    return e_[static_cast<std::size_t>(i) * n_ + j];
}

const LaurentPoly& SuperMatrix::at(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("SuperMatrix::at");
    return e_[static_cast<std::size_t>(i) * n_ + j];
}

void SuperMatrix::check_compatible(const SuperMatrix& o) const {
    if (n_ != o.n_ || parity_ != o.parity_)
        throw std::invalid_argument("SuperMatrix shape/grading mismatch");
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
    check_compatible(o);
    SuperMatrix out = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] += o.e_[k];
    return out;
}

SuperMatrix SuperMatrix::operator-(const SuperMatrix& o) const {
    check_compatible(o);
    SuperMatrix out = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] -= o.e_[k];
    return out;
}

SuperMatrix SuperMatrix::operator-() const {
    SuperMatrix out(n_, parity_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
    return out;
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
    check_compatible(o);
    SuperMatrix out(n_, parity_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            LaurentPoly acc;
            for (int k = 0; k < n_; ++k) acc += at(i, k) * o.at(k, j);
            out.at(i, j) = std::move(acc);
        }
    }
    return out;
}

bool SuperMatrix::operator==(const SuperMatrix& o) const {
    return n_ == o.n_ && parity_ == o.parity_ && e_ == o.e_;
}

SuperMatrix SuperMatrix::scaled(const Rational& k) const {
    SuperMatrix out(n_, parity_);
    for (std::size_t idx = 0; idx < e_.size(); ++idx) out.e_[idx] = e_[idx].scaled(k);
    return out;
}

bool SuperMatrix::is_zero() const {
    for (const auto& entry : e_)
        if (!entry.is_zero()) return false;
    return true;
}

LaurentPoly SuperMatrix::supertrace() const {
    LaurentPoly out;
    for (int i = 0; i < n_; ++i) {
        if (parity_[static_cast<std::size_t>(i)] == 0)
            out += at(i, i);
        else
            out -= at(i, i);
    }
    return out;
}

bool SuperMatrix::grading_ok() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const LaurentPoly& entry = at(i, j);
            if (entry.is_zero()) continue;
            Parity want = (parity_[static_cast<std::size_t>(i)] ^
                           parity_[static_cast<std::size_t>(j)]) == 0
                              ? Parity::Even
                              : Parity::Odd;
            if (entry.parity() != want) return false;
        }
    }
    return true;
}

SuperMatrix SuperMatrix::subst_mu(const Rational& value) const {
    SuperMatrix out(n_, parity_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k].subst_mu(value);
    return out;
}

SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y) {
    return x * y - y * x;
}

SuperMatrix graded_bracket(const SuperMatrix& x, int px, const SuperMatrix& y, int py) {
    SuperMatrix xy = x * y;
    SuperMatrix yx = y * x;
    if ((px & py) != 0) return xy + yx;
    return xy - yx;
}

SuperMatrix d_total(const SuperMatrix& m) {
    SuperMatrix out(m.size(), m.signature());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) out.at(i, j) = d_total(m.at(i, j));
    return out;
}

SuperMatrix derive(const SuperMatrix& m, const DerivationImage& image) {
    SuperMatrix out(m.size(), m.signature());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) out.at(i, j) = derive(m.at(i, j), image);
    return out;
}

SuperMatrix d_lambda(const SuperMatrix& m) {
    SuperMatrix out(m.size(), m.signature());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) out.at(i, j) = d_lambda(m.at(i, j));
    return out;
}

std::string to_text(const SuperMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            os << "(" << i + 1 << "," << j + 1 << "): " << to_text(m.at(i, j)) << "\n";
        }
    }
    std::string s = os.str();
    return s.empty() ? "0\n" : s;
}

}  // namespace akns
