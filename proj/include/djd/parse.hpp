#ifndef DJD_PARSE_HPP
#define DJD_PARSE_HPP

#include "djd/algebras.hpp"
#include "djd/distinguished.hpp"
#include "djd/element.hpp"
#include "djd/engine.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace djd {

/// Parse failure with the byte offset of the offending token.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// expr   := ('+'|'-')? term (('+'|'-') term)*
/// term   := factor ('*' factor)*
/// factor := atom ('^' signed-int)?
/// atom   := rational | name | '(' expr ')'
/// Whitespace-insensitive; rational literals are "p" or "p/q".
struct ExprAST {
    enum class Kind { Sum, Prod, Pow, Rational, Name };
    Kind kind = Kind::Rational;
    std::vector<ExprAST> children;
    std::vector<int> signs; // Sum only, one per child
    long exponent = 1;      // Pow only
    Scalar value = 0;       // Rational only
    std::string name;       // Name only
    std::size_t pos = 0;
};

namespace detail {

struct Token {
    enum class Kind { Num, Name, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    Scalar num;
    std::size_t pos;
};

inline std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto push = [&](Token::Kind k, std::size_t pos, std::string text = "",
                          Scalar num = 0) {
        out.push_back({k, std::move(text), std::move(num), pos});
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            Int num(src.substr(start, i - start));
            Int den = 1;
            if (i < src.size() && src[i] == '/' && i + 1 < src.size() &&
                std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
                ++i;
                const std::size_t dstart = i;
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
                den = Int(src.substr(dstart, i - dstart));
                if (den == 0) throw ParseError("zero denominator", dstart);
            }
            push(Token::Kind::Num, start, src.substr(start, i - start), Scalar(num, den));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = i;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                      src[i] == '_'))
                ++i;
            push(Token::Kind::Name, start, src.substr(start, i - start));
            continue;
        }
        // UTF-8 zeta (U+03B6) accepted as an input alias.
        if (static_cast<unsigned char>(c) == 0xCE && i + 1 < src.size() &&
            static_cast<unsigned char>(src[i + 1]) == 0xB6) {
            push(Token::Kind::Name, i, "zeta");
            i += 2;
            continue;
        }
        switch (c) {
            case '+': push(Token::Kind::Plus, i); break;
            case '-': push(Token::Kind::Minus, i); break;
            case '*': push(Token::Kind::Star, i); break;
            case '^': push(Token::Kind::Caret, i); break;
            case '(': push(Token::Kind::LParen, i); break;
            case ')': push(Token::Kind::RParen, i); break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        ++i;
    }
    push(Token::Kind::End, src.size());
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    ExprAST parse() {
        ExprAST e = expr();
        if (peek().kind != Token::Kind::End) throw ParseError("trailing input", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    const Token& take() { return toks_[i_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind == k) {
            ++i_;
            return true;
        }
        return false;
    }

    ExprAST expr() {
        ExprAST sum;
        sum.kind = ExprAST::Kind::Sum;
        sum.pos = peek().pos;
        int sign = 1;
        if (accept(Token::Kind::Minus))
            sign = -1;
        else
            accept(Token::Kind::Plus);
        sum.children.push_back(term());
        sum.signs.push_back(sign);
        while (true) {
            if (accept(Token::Kind::Plus))
                sign = 1;
            else if (accept(Token::Kind::Minus))
                sign = -1;
            else
                break;
            sum.children.push_back(term());
            sum.signs.push_back(sign);
        }
        return sum;
    }

    ExprAST term() {
        ExprAST prod;
        prod.kind = ExprAST::Kind::Prod;
        prod.pos = peek().pos;
        prod.children.push_back(factor());
        while (accept(Token::Kind::Star)) prod.children.push_back(factor());
        return prod;
    }

    ExprAST factor() {
        ExprAST base = atom();
        if (accept(Token::Kind::Caret)) {
            ExprAST pow;
            pow.kind = ExprAST::Kind::Pow;
            pow.pos = base.pos;
            long sign = 1;
            if (accept(Token::Kind::Minus)) sign = -1;
            if (peek().kind != Token::Kind::Num)
                throw ParseError("expected integer exponent", peek().pos);
            const Token& t = take();
            if (denominator(t.num) != 1)
                throw ParseError("exponent must be an integer", t.pos);
            if (numerator(t.num) > 4096)
                throw ParseError("exponent out of range", t.pos);
            pow.exponent = sign * static_cast<long>(numerator(t.num));
            pow.children.push_back(std::move(base));
            return pow;
        }
        return base;
    }

    ExprAST atom() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Num) {
            take();
            ExprAST e;
            e.kind = ExprAST::Kind::Rational;
            e.value = t.num;
            e.pos = t.pos;
            return e;
        }
        if (t.kind == Token::Kind::Name) {
            take();
            ExprAST e;
            e.kind = ExprAST::Kind::Name;
            e.name = t.text;
            e.pos = t.pos;
            return e;
        }
        if (accept(Token::Kind::LParen)) {
            ExprAST e = expr();
            if (!accept(Token::Kind::RParen)) throw ParseError("expected ')'", peek().pos);
            return e;
        }
        throw ParseError("expected rational, name or '('", t.pos);
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

/// Name tables per algebra tag (gi/ti/qi/zi denote inverse letters, dj
/// macro names expand to the distinguished elements).
inline Element resolve_name(const Presentation& p, const std::string& name, std::size_t pos) {
    if (&p == &dj_presentation()) {
        using namespace dj;
        if (name == "x") return Element::generator(p, X);
        if (name == "y") return Element::generator(p, Y);
        if (name == "g") return Element::generator(p, G);
        if (name == "gi") return Element::generator(p, G, -1);
        if (name == "zeta") return Element::generator(p, ZETA);
        if (name == "u") return Element::generator(p, U);
        if (name == "v") return Element::generator(p, V);
        if (name == "q") return distinguished().q;
        if (name == "z") return distinguished().z;
        if (name == "s") return distinguished().s;
        if (name == "theta") return distinguished().theta;
        if (name == "omega") return distinguished().omega;
    } else if (&p == &sl2_presentation()) {
        using namespace sl2;
        if (name == "e") return Element::generator(p, E);
        if (name == "f") return Element::generator(p, F);
        if (name == "h") return Element::generator(p, H);
    } else if (&p == &a2s_presentation()) {
        using namespace a2s;
        if (name == "z") return Element::generator(p, Z);
        if (name == "zi") return Element::generator(p, Z, -1);
        if (name == "zp") return Element::generator(p, ZP);
        if (name == "q") return Element::generator(p, Q);
        if (name == "qi") return Element::generator(p, Q, -1);
        if (name == "p") return Element::generator(p, P);
        if (name == "t") return Element::generator(p, T);
        if (name == "ti") return Element::generator(p, T, -1);
        if (name == "xi") return Element::generator(p, XI);
    }
    throw ParseError("unknown name '" + name + "' in algebra " + p.name(), pos);
}

/// Invert c * (monomial on invertible generators); anything else is not a
/// unit of the PBW algebra.
inline Element invert_element(const Presentation& p, const Element& e, std::size_t pos) {
    if (e.term_count() != 1)
        throw ParseError("cannot take a negative power of a non-monomial", pos);
    const auto& [m, c] = *e.terms().begin();
    Monomial inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!p.gen(i).invertible)
            throw ParseError("negative power of non-invertible generator " + p.gen(i).name,
                             pos);
        inv.set_exp(i, -m.exp(i));
    }
    return Element::monomial(p, inv, Scalar(1) / c);
}

} // namespace detail

inline ExprAST parse(const std::string& text) { return detail::Parser(text).parse(); }

inline Element eval(const ExprAST& ast, const Presentation& p) {
    switch (ast.kind) {
        case ExprAST::Kind::Rational: return Element::scalar(p, ast.value);
        case ExprAST::Kind::Name: return detail::resolve_name(p, ast.name, ast.pos);
        case ExprAST::Kind::Sum: {
            Element out(p);
            for (std::size_t i = 0; i < ast.children.size(); ++i)
                out += Scalar(ast.signs[i]) * eval(ast.children[i], p);
            return out;
        }
        case ExprAST::Kind::Prod: {
            Element out = Element::one(p);
            for (const ExprAST& c : ast.children) out = out * eval(c, p);
            return out;
        }
        case ExprAST::Kind::Pow: {
            const Element base = eval(ast.children[0], p);
            if (ast.exponent >= 0) return power(base, ast.exponent);
            return power(detail::invert_element(p, base, ast.pos), -ast.exponent);
        }
    }
    throw Error("unreachable");
}

inline Element parse_element(const std::string& text, const Presentation& p) {
    return eval(parse(text), p);
}

/// Exact scalar from "p", "-p", or "p/q" (used for CLI module parameters).
inline Scalar parse_scalar(const std::string& text) {
    const Element e = parse_element(text, dj_presentation());
    if (e.is_zero()) return 0;
    if (e.term_count() != 1 || !e.terms().begin()->first.is_unit())
        throw ParseError("expected a rational number, got '" + text + "'", 0);
    return e.terms().begin()->second;
}

} // namespace djd

#endif // DJD_PARSE_HPP
