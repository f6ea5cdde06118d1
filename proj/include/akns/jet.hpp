#pragma once
// Jet variables of the differential ring.
//
// The ring is generated by the jets of six dependent fields over one spatial
// variable x: four even (commuting) fields p, q, r, s and two odd (Grassmann)
// fields alpha, beta. A jet is a field together with an x-derivative order:
// p_0 = p, p_1 = p_x, p_2 = p_xx, ...
//
// Canonical order on jets is (field, order) lexicographic with the field
// order p < q < r < s < alpha < beta. Restricted to odd jets this gives
// alpha < alpha_x < alpha_xx < ... < beta < beta_x < ..., the canonical
// order used to normalize Grassmann monomials.

#include <compare>
#include <cstdint>
#include <array>
#include <string>
#include <string_view>
#include <stdexcept>

namespace akns {

enum class Field : std::uint8_t { P = 0, Q = 1, R = 2, S = 3, Alpha = 4, Beta = 5 };

inline constexpr std::array<Field, 6> kAllFields{Field::P, Field::Q, Field::R,
                                                 Field::S, Field::Alpha, Field::Beta};
inline constexpr std::array<Field, 4> kEvenFields{Field::P, Field::Q, Field::R, Field::S};
inline constexpr std::array<Field, 2> kOddFields{Field::Alpha, Field::Beta};

constexpr bool field_is_odd(Field f) { return f == Field::Alpha || f == Field::Beta; }

constexpr const char* field_name(Field f) {
    switch (f) {
        case Field::P: return "p";
        case Field::Q: return "q";
        case Field::R: return "r";
        case Field::S: return "s";
        case Field::Alpha: return "alpha";
        case Field::Beta: return "beta";
    }
    return "?";
}

inline Field field_from_name(std::string_view name) {
    for (Field f : kAllFields)
        if (name == field_name(f)) return f;
    throw std::invalid_argument("unknown field name '" + std::string(name) + "'");
}

struct Jet {
    Field field{Field::P};
    int order{0};

    friend constexpr auto operator<=>(const Jet&, const Jet&) = default;
};

constexpr bool jet_is_odd(const Jet& j) { return field_is_odd(j.field); }

// Text form "p", "p_x", "p_xx", ...; orders above 4 printed as "p_x5".
inline std::string jet_name(const Jet& j) {
    std::string s = field_name(j.field);
    if (j.order == 0) return s;
    s += '_';
    if (j.order <= 4) {
        for (int i = 0; i < j.order; ++i) s += 'x';
    } else {
        s += 'x';
        s += std::to_string(j.order);
    }
    return s;
}

}  // namespace akns
