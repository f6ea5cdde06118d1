#include "akns/parse.hpp"

#include <cctype>

namespace akns {

namespace detail {

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto peek = [&]() -> char { return i < src.size() ? src[i] : '\0'; };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (std::isdigit(static_cast<unsigned char>(peek()))) num += src[i++];
            if (peek() == '/') {
                // Only a rational literal if a digit follows immediately.
                std::size_t save = i;
                ++i;
                std::string den;
                while (std::isdigit(static_cast<unsigned char>(peek()))) den += src[i++];
                if (den.empty()) { i = save; }
                else num += "/" + den;
            }
            out.push_back(Token{Token::Num, rational_from_string(num), {}});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                name += src[i++];
            out.push_back(Token{Token::Name, Rational(0), std::move(name)});
            continue;
        }
        switch (c) {
            case '+': out.push_back(Token{Token::Plus, Rational(0), {}}); break;
            case '-': out.push_back(Token{Token::Minus, Rational(0), {}}); break;
            case '*': out.push_back(Token{Token::Star, Rational(0), {}}); break;
            case '^': out.push_back(Token{Token::Caret, Rational(0), {}}); break;
            case '(': out.push_back(Token{Token::LParen, Rational(0), {}}); break;
            case ')': out.push_back(Token{Token::RParen, Rational(0), {}}); break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "' in expression");
        }
        ++i;
    }
    out.push_back(Token{Token::End, Rational(0), {}});
    return out;
}

std::pair<std::string, int> split_derivative_suffix(const std::string& ident) {
    auto us = ident.find('_');
    if (us == std::string::npos) return {ident, 0};
    std::string base = ident.substr(0, us);
    std::string suffix = ident.substr(us + 1);
    if (suffix.empty() || suffix[0] != 'x')
        throw ParseError("malformed derivative suffix in '" + ident + "'");
    if (suffix.find_first_not_of('x') == std::string::npos)
        return {base, static_cast<int>(suffix.size())};
    // "x<digits>" form
    std::string digits = suffix.substr(1);
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("malformed derivative suffix in '" + ident + "'");
    if (digits.empty()) throw ParseError("malformed derivative suffix in '" + ident + "'");
    return {base, std::stoi(digits)};
}

}  // namespace detail

namespace {

using detail::Token;

class PolyParser {
public:
    explicit PolyParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    DiffPoly parse() {
        DiffPoly e = expr();
        expect(Token::End, "end of input");
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    void advance() { if (cur().kind != Token::End) ++pos_; }
    bool accept(Token::Kind k) {
        if (cur().kind == k) { advance(); return true; }
        return false;
    }
    void expect(Token::Kind k, const char* what) {
        if (!accept(k)) throw ParseError(std::string("expected ") + what);
    }

    DiffPoly expr() {
        bool neg = false;
        if (accept(Token::Minus)) neg = true;
        else accept(Token::Plus);
        DiffPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept(Token::Plus)) acc += term();
            else if (accept(Token::Minus)) acc -= term();
            else break;
        }
        return acc;
    }

    DiffPoly term() {
        DiffPoly acc = factor();
        while (accept(Token::Star)) acc = acc * factor();
        return acc;
    }

    DiffPoly factor() {
        DiffPoly base = primary();
        if (accept(Token::Caret)) {
            if (cur().kind != Token::Num || cur().num.get_den() != 1 || sgn(cur().num) < 0)
                throw ParseError("exponent must be a non-negative integer");
            unsigned e = static_cast<unsigned>(cur().num.get_num().get_ui());
            advance();
            base = base.pow(e);
        }
        return base;
    }

    DiffPoly primary() {
        if (cur().kind == Token::Num) {
            Rational v = cur().num;
            advance();
            return DiffPoly::constant(v);
        }
        if (accept(Token::LParen)) {
            DiffPoly e = expr();
            expect(Token::RParen, "')'");
            return e;
        }
        if (cur().kind == Token::Name) {
            auto [base, order] = detail::split_derivative_suffix(cur().name);
            advance();
            if (base == "mu") {
                if (order != 0) throw ParseError("mu takes no derivative suffix");
                return DiffPoly::mu();
            }
            if (base == "h") return d_total_n(make_h(), order);
            return DiffPoly::jet(field_from_name(base), order);
        }
        throw ParseError("expected a number, name or '('");
    }
};

}  // namespace

DiffPoly parse_poly(std::string_view src) {
    try {
        return PolyParser(detail::lex(src)).parse();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " while parsing '" + std::string(src) + "'");
    }
}

}  // namespace akns
