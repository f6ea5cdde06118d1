#pragma once
// Text parser for differential polynomials, plus the shared lexer reused by
// the nonlocal-operator parser.
//
// Grammar (whitespace ignored):
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ('^' uint)?
//   primary := rational | name | '(' expr ')'
// Names: p q r s alpha beta (optionally with derivative suffix _x, _xx, ...,
// or _x<k> for high orders), mu, and the macro h = mu*(p*s+q*r+r*s-2*alpha*beta)
// (h also accepts derivative suffixes).

#include "akns/diffpoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace akns {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

DiffPoly parse_poly(std::string_view src);

namespace detail {

struct Token {
    enum Kind { Num, Name, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    Rational num;      // for Num
    std::string name;  // for Name
};

std::vector<Token> lex(std::string_view src);

// Splits an identifier like "p_xx" or "alpha_x3" into base name and
// derivative order. Throws ParseError on a malformed suffix.
std::pair<std::string, int> split_derivative_suffix(const std::string& ident);

}  // namespace detail

}  // namespace akns
