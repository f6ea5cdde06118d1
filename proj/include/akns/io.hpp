#pragma once
// Canonical serialization of differential polynomials: plain text, LaTeX and
// JSON. All three are deterministic (terms are emitted in the canonical map
// order), so equal polynomials always serialize identically.

#include "akns/diffpoly.hpp"

#include <json.hpp>

#include <string>

namespace akns {

// Plain text, e.g. "1/2*p_x - h*p" style without the h macro:
// "-1/2*mu*p*q_x^2*alpha*beta_x". Zero polynomial prints "0".
std::string to_text(const DiffPoly& f);

// LaTeX mirroring the conventional notation: \mu, \alpha, \beta, subscripts
// p_{xx}, rational prefix as \frac{..}{..}.
std::string to_latex(const DiffPoly& f);

// JSON schema:
// {"terms":[{"coeff":"-1/2","mu":0,
//            "even":[["p",0,1]],          // [field, order, exponent]
//            "odd":[["alpha",0]]}]}       // [field, order]
nlohmann::json to_json(const DiffPoly& f);
DiffPoly diffpoly_from_json(const nlohmann::json& j);

}  // namespace akns
