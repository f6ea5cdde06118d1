#include "akns/io.hpp"

#include <sstream>
#include <stdexcept>

namespace akns {

namespace {

// Appends the jet factors of a term ("p*q_x^2*alpha") to out.
void append_factors_text(std::string& out, const TermKey& k) {
    bool first = out.empty();
    auto sep = [&] {
        if (!first) out += '*';
        first = false;
    };
    if (k.mu_pow > 0) {
        sep();
        out += "mu";
        if (k.mu_pow > 1) out += "^" + std::to_string(k.mu_pow);
    }
    for (const auto& [jet, exp] : k.even) {
        sep();
        out += jet_name(jet);
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    for (const Jet& jet : k.odd.factors) {
        sep();
        out += jet_name(jet);
    }
}

std::string latex_jet(const Jet& j) {
    std::string base = field_is_odd(j.field)
                           ? std::string("\\") + field_name(j.field)
                           : std::string(field_name(j.field));
    if (j.order == 0) return base;
    std::string sub;
    if (j.order <= 4) {
        for (int i = 0; i < j.order; ++i) sub += 'x';
    } else {
        sub = "x^{" + std::to_string(j.order) + "}";
    }
    return base + "_{" + sub + "}";
}

}  // namespace

std::string to_text(const DiffPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : f.terms()) {
        Rational a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += (sgn(c) < 0) ? " - " : " + ";
        }
        std::string factors;
        append_factors_text(factors, k);
        if (factors.empty()) {
            out += rational_to_string(a);
        } else {
            if (a != 1) out += rational_to_string(a) + "*";
            out += factors;
        }
    }
    return out;
}

std::string to_latex(const DiffPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : f.terms()) {
        Rational a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += (sgn(c) < 0) ? " - " : " + ";
        }
        std::string factors;
        if (k.mu_pow > 0) {
            factors += "\\mu";
            if (k.mu_pow > 1) factors += "^{" + std::to_string(k.mu_pow) + "}";
        }
        for (const auto& [jet, exp] : k.even) {
            if (!factors.empty()) factors += ' ';
            factors += latex_jet(jet);
            if (exp > 1) factors += "^{" + std::to_string(exp) + "}";
        }
        for (const Jet& jet : k.odd.factors) {
            if (!factors.empty()) factors += ' ';
            factors += latex_jet(jet);
        }
        std::string coeff;
        if (a.get_den() == 1) {
            if (a != 1 || factors.empty()) coeff = a.get_num().get_str();
        } else {
            coeff = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
        }
        out += coeff;
        if (!coeff.empty() && !factors.empty()) out += ' ';
        out += factors;
    }
    return out;
}

nlohmann::json to_json(const DiffPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : f.terms()) {
        nlohmann::json even = nlohmann::json::array();
        for (const auto& [jet, exp] : k.even)
            even.push_back({field_name(jet.field), jet.order, exp});
        nlohmann::json odd = nlohmann::json::array();
        for (const Jet& jet : k.odd.factors)
            odd.push_back({field_name(jet.field), jet.order});
        terms.push_back({{"coeff", rational_to_string(c)},
                         {"mu", k.mu_pow},
                         {"even", even},
                         {"odd", odd}});
    }
    return nlohmann::json{{"terms", terms}};
}

DiffPoly diffpoly_from_json(const nlohmann::json& j) {
    DiffPoly out;
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("diffpoly_from_json: expected {\"terms\": [...]}");
    for (const auto& t : j["terms"]) {
        TermKey k;
        k.mu_pow = t.at("mu").get<int>();
        if (k.mu_pow < 0) throw std::invalid_argument("diffpoly_from_json: negative mu power");
        for (const auto& e : t.at("even")) {
            Field f = field_from_name(e.at(0).get<std::string>());
            int order = e.at(1).get<int>();
            int exp = e.at(2).get<int>();
            if (field_is_odd(f) || order < 0 || exp < 1)
                throw std::invalid_argument("diffpoly_from_json: bad even entry");
            k.even.emplace_back(Jet{f, order}, exp);
        }
        for (std::size_t i = 1; i < k.even.size(); ++i)
            if (!(k.even[i - 1].first < k.even[i].first))
                throw std::invalid_argument("diffpoly_from_json: even part not canonical");
        std::vector<Jet> odd;
        for (const auto& e : t.at("odd")) {
            Field f = field_from_name(e.at(0).get<std::string>());
            int order = e.at(1).get<int>();
            if (!field_is_odd(f) || order < 0)
                throw std::invalid_argument("diffpoly_from_json: bad odd entry");
            odd.push_back(Jet{f, order});
        }
        auto normalized = odd_normalize(odd);
        if (!normalized) throw std::invalid_argument("diffpoly_from_json: repeated odd jet");
        k.odd = normalized->word;
        Rational c = rational_from_string(t.at("coeff").get<std::string>());
        if (normalized->sign < 0) c = -c;
        out.add_term(k, c);
    }
    return out;
}

}  // namespace akns
