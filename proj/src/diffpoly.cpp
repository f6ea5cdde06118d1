#include "akns/diffpoly.hpp"

#include <cassert>
#include <stdexcept>

namespace akns {

int TermKey::weight() const {
    int w = -mu_pow;
    for (const auto& [jet, exp] : even) w += exp * (1 + jet.order);
    for (const Jet& jet : odd.factors) w += 1 + jet.order;
    return w;
}

std::array<int, 6> TermKey::field_counts() const {
    std::array<int, 6> c{};
    for (const auto& [jet, exp] : even) c[static_cast<int>(jet.field)] += exp;
    for (const Jet& jet : odd.factors) c[static_cast<int>(jet.field)] += 1;
    return c;
}

DiffPoly DiffPoly::constant(const Rational& c) {
    DiffPoly p;
    if (c != 0) p.terms_[TermKey{}] = c;
    return p;
}

DiffPoly DiffPoly::mu(int pow) {
    DiffPoly p;
    TermKey k;
    k.mu_pow = pow;
    p.terms_[k] = 1;
    return p;
}

DiffPoly DiffPoly::jet(Field f, int order) {
    DiffPoly p;
    TermKey k;
    if (field_is_odd(f)) {
        k.odd.factors.push_back(Jet{f, order});
    } else {
        k.even.emplace_back(Jet{f, order}, 1);
    }
    p.terms_[k] = 1;
    return p;
}

DiffPoly DiffPoly::monomial(const Rational& c, const TermKey& k) {
    DiffPoly p;
    if (c != 0) p.terms_[k] = c;
    return p;
}

void DiffPoly::add_term(const TermKey& key, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Parity DiffPoly::parity() const {
    if (terms_.empty()) return Parity::Zero;
    bool even = false, odd = false;
    for (const auto& [k, c] : terms_) (k.parity() ? odd : even) = true;
    if (even && odd) return Parity::Mixed;
    return odd ? Parity::Odd : Parity::Even;
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const {
    DiffPoly r = *this;
    r += o;
    return r;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const {
    DiffPoly r = *this;
    r -= o;
    return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

namespace {

// Multiplies two sorted even-jet exponent vectors.
std::vector<std::pair<Jet, int>> merge_even(const std::vector<std::pair<Jet, int>>& a,
                                            const std::vector<std::pair<Jet, int>>& b) {
    std::vector<std::pair<Jet, int>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i; ++j;
        } else if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

}  // namespace

DiffPoly DiffPoly::operator*(const DiffPoly& o) const {
    DiffPoly r;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            auto odd = odd_concat(ka.odd, kb.odd);
            if (!odd) continue;
            TermKey k;
            k.mu_pow = ka.mu_pow + kb.mu_pow;
            k.even = merge_even(ka.even, kb.even);
            k.odd = std::move(odd->word);
            Rational c = ca * cb;
            if (odd->sign < 0) c = -c;
            r.add_term(k, c);
        }
    }
    return r;
}

DiffPoly DiffPoly::scaled(const Rational& c) const {
    DiffPoly r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

DiffPoly DiffPoly::pow(unsigned e) const {
    DiffPoly r = DiffPoly::integer(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool operator<(const DiffPoly& a, const DiffPoly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

int DiffPoly::max_order(Field f) const {
    int m = -1;
    for (const auto& [k, c] : terms_) {
        for (const auto& [jet, exp] : k.even)
            if (jet.field == f && jet.order > m) m = jet.order;
        for (const Jet& jet : k.odd.factors)
            if (jet.field == f && jet.order > m) m = jet.order;
    }
    return m;
}

int DiffPoly::max_mu_pow() const {
    int m = 0;
    for (const auto& [k, c] : terms_)
        if (k.mu_pow > m) m = k.mu_pow;
    return m;
}

int DiffPoly::min_mu_pow() const {
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first.mu_pow;
    for (const auto& [k, c] : terms_)
        if (k.mu_pow < m) m = k.mu_pow;
    return m;
}

DiffPoly DiffPoly::mu_shifted(int delta) const {
    DiffPoly r;
    for (const auto& [k, c] : terms_) {
        TermKey nk = k;
        nk.mu_pow += delta;
        if (nk.mu_pow < 0)
            throw std::logic_error("mu_shifted: negative mu power");
        r.add_term(nk, c);
    }
    return r;
}

bool DiffPoly::has_constant_term() const {
    for (const auto& [k, c] : terms_)
        if (k.even.empty() && k.odd.empty()) return true;
    return false;
}

DiffPoly DiffPoly::subst_mu(const Rational& value) const {
    DiffPoly r;
    for (const auto& [k, c] : terms_) {
        TermKey nk = k;
        nk.mu_pow = 0;
        r.add_term(nk, c * rational_pow(value, static_cast<unsigned>(k.mu_pow)));
    }
    return r;
}

Rational DiffPoly::rational_content() const {
    if (terms_.empty()) return 0;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [k, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(terms_.begin()->second) < 0) content = -content;
    return content;
}

// --- Derivations ------------------------------------------------------------

DiffPoly derive(const DiffPoly& f, const DerivationImage& image) {
    DiffPoly result;
    for (const auto& [key, coeff] : f.terms()) {
        // Even factors: d(v^e * rest) contributes e * v^(e-1) * image(v) * rest.
        for (std::size_t i = 0; i < key.even.size(); ++i) {
            const auto& [jet, exp] = key.even[i];
            DiffPoly img = image(jet);
            if (img.is_zero()) continue;
            TermKey reduced = key;
            if (exp == 1)
                reduced.even.erase(reduced.even.begin() + static_cast<long>(i));
            else
                reduced.even[i].second = exp - 1;
            result += DiffPoly::monomial(coeff * exp, reduced) * img;
        }
        // Odd factors: d(t1...tn) = sum_i t1...t(i-1) image(ti) t(i+1)...tn.
        // An even derivation introduces no signs of its own; any reordering
        // signs are produced by the multiplications below.
        for (std::size_t i = 0; i < key.odd.factors.size(); ++i) {
            DiffPoly img = image(key.odd.factors[i]);
            if (img.is_zero()) continue;
            TermKey head = key;
            head.odd.factors.assign(key.odd.factors.begin(),
                                    key.odd.factors.begin() + static_cast<long>(i));
            TermKey tail;
            tail.odd.factors.assign(key.odd.factors.begin() + static_cast<long>(i) + 1,
                                    key.odd.factors.end());
            result += DiffPoly::monomial(coeff, head) * img * DiffPoly::monomial(1, tail);
        }
    }
    return result;
}

DiffPoly d_total(const DiffPoly& f) {
    return derive(f, [](const Jet& j) { return DiffPoly::jet(j.field, j.order + 1); });
}

DiffPoly d_total_n(const DiffPoly& f, int n) {
    DiffPoly r = f;
    for (int i = 0; i < n; ++i) r = d_total(r);
    return r;
}

// --- Graded partials --------------------------------------------------------

DiffPoly partial(const DiffPoly& f, const Jet& v, Side side) {
    DiffPoly result;
    const bool odd_var = jet_is_odd(v);
    for (const auto& [key, coeff] : f.terms()) {
        if (!odd_var) {
            for (std::size_t i = 0; i < key.even.size(); ++i) {
                const auto& [jet, exp] = key.even[i];
                if (jet != v) continue;
                TermKey reduced = key;
                if (exp == 1)
                    reduced.even.erase(reduced.even.begin() + static_cast<long>(i));
                else
                    reduced.even[i].second = exp - 1;
                result.add_term(reduced, coeff * exp);
            }
        } else {
            const auto& fac = key.odd.factors;
            for (std::size_t i = 0; i < fac.size(); ++i) {
                if (fac[i] != v) continue;
                // Position i is 0-based; the factor removal sign is
                // (-1)^i from the left or (-1)^(n-1-i) from the right.
                std::size_t flips = (side == Side::Left) ? i : (fac.size() - 1 - i);
                TermKey reduced = key;
                reduced.odd.factors.erase(reduced.odd.factors.begin() + static_cast<long>(i));
                result.add_term(reduced, (flips & 1) ? -coeff : coeff);
                break;  // canonical words contain each jet at most once
            }
        }
    }
    return result;
}

DiffPoly euler_variational(const DiffPoly& f, Field u) {
    DiffPoly result;
    const int kmax = f.max_order(u);
    for (int k = 0; k <= kmax; ++k) {
        DiffPoly term = d_total_n(partial(f, Jet{u, k}, Side::Left), k);
        if (k & 1)
            result -= term;
        else
            result += term;
    }
    return result;
}

DiffPoly make_h() {
    using DP = DiffPoly;
    DP k = DP::jet(Field::P) * DP::jet(Field::S) + DP::jet(Field::Q) * DP::jet(Field::R) +
           DP::jet(Field::R) * DP::jet(Field::S) -
           (DP::jet(Field::Alpha) * DP::jet(Field::Beta)).scaled(2);
    return DP::mu() * k;
}

}  // namespace akns
