#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "jacsyz/polynomial.hpp"

namespace jacsyz {

namespace detail {

struct Lexer {
    explicit Lexer(const std::string& text) : text_(text) {}

    struct Token {
        enum class Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
        Kind kind;
        std::string text;
        int line;
        int col;
    };

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::Kind::End, "", line, col};
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                num += advance();
            return {Token::Kind::Number, num, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                id += advance();
            return {Token::Kind::Ident, id, line, col};
        }
        advance();
        switch (c) {
        case '+': return {Token::Kind::Plus, "+", line, col};
        case '-': return {Token::Kind::Minus, "-", line, col};
        case '*': return {Token::Kind::Star, "*", line, col};
        case '^': return {Token::Kind::Caret, "^", line, col};
        case '/': return {Token::Kind::Slash, "/", line, col};
        case '(': return {Token::Kind::LParen, "(", line, col};
        case ')': return {Token::Kind::RParen, ")", line, col};
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class PolyParser {
public:
    PolyParser(const std::string& text, RingPtr ring)
        : lexer_(text), ring_(std::move(ring)) {
        cur_ = lexer_.next();
    }

    Polynomial parse() {
        Polynomial p = expr();
        expect_end();
        return p;
    }

private:
    using Token = Lexer::Token;

    Polynomial expr() {
        bool neg = false;
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            if (cur_.kind == Token::Kind::Minus) neg = !neg;
            consume();
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            bool minus = cur_.kind == Token::Kind::Minus;
            consume();
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            if (cur_.kind == Token::Kind::Star) {
                consume();
                acc = acc * factor();
            } else if (cur_.kind == Token::Kind::Slash) {
                Token t = cur_;
                consume();
                Polynomial d = factor();
                if (!d.is_constant() || d.is_zero())
                    throw ParseError("division only by a nonzero constant", t.line, t.col);
                acc = acc.scaled(d.terms()[0].coeff.inverse());
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        while (cur_.kind == Token::Kind::Caret) {
            Token t = cur_;
            consume();
            bool neg = false;
            if (cur_.kind == Token::Kind::Minus) {
                neg = true;
                consume();
            }
            if (cur_.kind != Token::Kind::Number || neg)
                throw ParseError("exponent must be a non-negative integer", t.line, t.col);
            unsigned long e = std::stoul(cur_.text);
            consume();
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial primary() {
        switch (cur_.kind) {
        case Token::Kind::Number: {
            Rational q(cur_.text);
            consume();
            return Polynomial::constant(ring_, FieldElement(std::move(q)));
        }
        case Token::Kind::Ident: {
            int idx = ring_->var_index(cur_.text);
            if (idx < 0)
                throw ParseError("unknown variable '" + cur_.text + "'", cur_.line, cur_.col);
            consume();
            return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
        }
        case Token::Kind::Minus: {
            consume();
            return -primary();
        }
        case Token::Kind::LParen: {
            consume();
            Polynomial p = expr();
            if (cur_.kind != Token::Kind::RParen)
                throw ParseError("expected ')'", cur_.line, cur_.col);
            consume();
            return p;
        }
        default:
            throw ParseError("expected a number, variable, or '('", cur_.line, cur_.col);
        }
    }

    void consume() { cur_ = lexer_.next(); }
    void expect_end() {
        if (cur_.kind != Token::Kind::End)
            throw ParseError("trailing input after polynomial", cur_.line, cur_.col);
    }

    Lexer lexer_;
    RingPtr ring_;
    Token cur_;
};

} // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return detail::PolyParser(text, ring).parse();
}

// Field declaration: "Q" or "Q(alpha) minpoly t^2+1".
inline FieldPtr parse_field(const std::string& decl) {
    std::istringstream in(decl);
    std::string head;
    in >> head;
    if (head == "Q" || head == "q") return FieldDescriptor::rationals();
    if (head.rfind("Q(", 0) != 0 || head.back() != ')')
        throw PreconditionError("field declaration must be 'Q' or 'Q(name) minpoly <poly in t>'");
    std::string name = head.substr(2, head.size() - 3);
    if (name.empty()) throw PreconditionError("empty extension generator name");
    std::string kw;
    in >> kw;
    if (kw != "minpoly")
        throw PreconditionError("expected 'minpoly' after extension name");
    std::string rest;
    std::getline(in, rest);
    RingPtr tring = Ring::make({"t"});
    Polynomial m = parse_polynomial(rest, tring);
    int deg = m.degree();
    if (deg < 2) throw PreconditionError("minimal polynomial must have degree >= 2");
    std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (const auto& t : m.terms())
        coeffs[t.mono[0]] = t.coeff.rational_value();
    if (coeffs.back() != 1)
        throw PreconditionError("minimal polynomial must be monic");
    return FieldDescriptor::extension(std::move(coeffs), std::move(name));
}

// Coordinate expression over a (possibly extended) field, e.g. "-alpha" or "2/3".
inline FieldElement parse_field_element(const std::string& text, const FieldPtr& field) {
    if (field->is_rational()) {
        RingPtr r = Ring::make(std::vector<std::string>{"__none__"}, field);
        Polynomial p = parse_polynomial(text, r);
        if (!p.is_constant())
            throw PreconditionError("coordinate is not a constant: " + text);
        return p.is_zero() ? FieldElement::zero(field) : p.terms()[0].coeff;
    }
    RingPtr r = Ring::make(std::vector<std::string>{field->generator_name}, field);
    Polynomial p = parse_polynomial(text, r);
    return p.evaluate({FieldElement::generator(field)});
}

struct PolyFile {
    RingPtr ring;
    Polynomial f;
};

// .poly format: '#' comment lines, a header "ring x0..xN over <field decl>",
// then the polynomial itself (may span several lines).
inline PolyFile read_poly_stream(std::istream& in) {
    std::string line;
    RingPtr ring;
    std::string body;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        auto notspace = [](unsigned char c) { return !std::isspace(c); };
        trimmed.erase(trimmed.begin(),
                      std::find_if(trimmed.begin(), trimmed.end(), notspace));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (!ring) {
            std::istringstream hs(trimmed);
            std::string kw;
            hs >> kw;
            if (kw != "ring")
                throw PreconditionError(".poly file must start with a 'ring' header line");
            std::string varspec;
            hs >> varspec;
            std::string over;
            hs >> over;
            if (over != "over")
                throw PreconditionError("expected 'over' in ring header");
            std::string fielddecl;
            std::getline(hs, fielddecl);
            FieldPtr field = parse_field(fielddecl);
            std::vector<std::string> vars;
            auto dots = varspec.find("..");
            if (dots != std::string::npos) {
                // range form like x0..x3: shared alphabetic prefix, numeric suffices
                std::string lo = varspec.substr(0, dots), hi = varspec.substr(dots + 2);
                std::size_t p = 0;
                while (p < lo.size() && !std::isdigit(static_cast<unsigned char>(lo[p]))) ++p;
                std::string prefix = lo.substr(0, p);
                if (prefix.empty() || hi.rfind(prefix, 0) != 0)
                    throw PreconditionError("malformed variable range '" + varspec + "'");
                int a = std::stoi(lo.substr(p));
                int b = std::stoi(hi.substr(prefix.size()));
                for (int i = a; i <= b; ++i) vars.push_back(prefix + std::to_string(i));
            } else {
                std::string v;
                std::istringstream vs(varspec);
                while (std::getline(vs, v, ','))
                    if (!v.empty()) vars.push_back(v);
            }
            if (vars.size() < 2)
                throw PreconditionError("ring must have at least two variables");
            ring = Ring::make(std::move(vars), field);
        } else {
            body += line;
            body += "\n";
        }
    }
    if (!ring) throw PreconditionError("missing ring header in .poly input");
    Polynomial f = parse_polynomial(body, ring);
    // The declared-coefficient restriction: inputs are over Q even when the
    // point field is extended.
    for (const auto& t : f.terms())
        if (!t.coeff.is_rational_value())
            throw PreconditionError("input polynomial coefficients must be rational");
    return {ring, f};
}

inline PolyFile read_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open input file: " + path);
    return read_poly_stream(in);
}

// Points file: one point per line, coordinates separated by ':'.
inline std::vector<std::vector<FieldElement>> read_points_file(const std::string& path,
                                                               const FieldPtr& field,
                                                               std::size_t ncoords) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open points file: " + path);
    std::vector<std::vector<FieldElement>> points;
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::vector<FieldElement> coords;
        std::istringstream ls(trimmed);
        std::string part;
        while (std::getline(ls, part, ':'))
            coords.push_back(parse_field_element(part, field));
        if (coords.size() != ncoords)
            throw PreconditionError("point has " + std::to_string(coords.size()) +
                                    " coordinates, expected " + std::to_string(ncoords));
        points.push_back(std::move(coords));
    }
    return points;
}

} // namespace jacsyz
