#include "irrev/parse.hpp"

#include <cstdio>

namespace irrev {

namespace {

constexpr unsigned kMaxExponent = 64;
constexpr int kMaxDepth = 256;

struct Token {
    enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    Lexer(std::string_view src, int line, int col_offset)
        : src_(src), line_(line), col_(col_offset) {}

    Token next() {
        skip_ws();
        if (pos_ >= src_.size()) return {Token::Kind::end, "", line_, col_};
        char c = src_[pos_];
        int l = line_, co = col_;
        if (c >= '0' && c <= '9') {
            std::string num;
            while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') num += advance();
            return {Token::Kind::number, std::move(num), l, co};
        }
        if (is_ident_start(c)) {
            std::string id;
            while (pos_ < src_.size() && is_ident_char(src_[pos_])) id += advance();
            return {Token::Kind::ident, std::move(id), l, co};
        }
        advance();
        switch (c) {
            case '+': return {Token::Kind::plus, "+", l, co};
            case '-': return {Token::Kind::minus, "-", l, co};
            case '*': return {Token::Kind::star, "*", l, co};
            case '/': return {Token::Kind::slash, "/", l, co};
            case '^': return {Token::Kind::caret, "^", l, co};
            case '(': return {Token::Kind::lparen, "(", l, co};
            case ')': return {Token::Kind::rparen, ")", l, co};
            default: break;
        }
        throw ParseError("unexpected character '" + printable(c) + "'", l, co);
    }

  private:
    static bool is_ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
    static std::string printable(char c) {
        if (c >= 0x20 && c < 0x7f) return std::string(1, c);
        char buf[8];
        std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned char>(c));
        return buf;
    }
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
                advance();
            else
                break;
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_, col_;
};

class ExprParser {
  public:
    ExprParser(std::string_view src, const CoordinateChart& chart, int line, int col_offset)
        : lex_(src, line, col_offset), chart_(chart) {
        cur_ = lex_.next();
    }

    Polynomial parse() {
        Polynomial p = expr(0);
        if (cur_.kind != Token::Kind::end)
            throw err("unexpected token '" + cur_.text +
                      "' (implicit multiplication is not supported)");
        return p;
    }

  private:
    ParseError err(const std::string& msg) const { return ParseError(msg, cur_.line, cur_.col); }

    void advance() { cur_ = lex_.next(); }

    Polynomial expr(int depth) {
        guard(depth);
        Polynomial acc = term(depth + 1);
        while (cur_.kind == Token::Kind::plus || cur_.kind == Token::Kind::minus) {
            bool minus = cur_.kind == Token::Kind::minus;
            advance();
            Polynomial rhs = term(depth + 1);
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial term(int depth) {
        guard(depth);
        Polynomial acc = factor(depth + 1);
        while (cur_.kind == Token::Kind::star || cur_.kind == Token::Kind::slash) {
            bool divide = cur_.kind == Token::Kind::slash;
            advance();
            Token rhs_tok = cur_;
            Polynomial rhs = factor(depth + 1);
            if (divide) {
                if (!rhs.is_constant())
                    throw ParseError("division by non-literal divisor", rhs_tok.line,
                                     rhs_tok.col);
                Rational v = rhs.constant_value();
                if (v == 0) throw ParseError("division by zero literal", rhs_tok.line, rhs_tok.col);
                acc = acc.scaled(Rational(1) / v);
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    Polynomial factor(int depth) {
        guard(depth);
        Polynomial base = atom(depth + 1);
        if (cur_.kind == Token::Kind::caret) {
            advance();
            if (cur_.kind != Token::Kind::number)
                throw err("exponent must be an unsigned integer");
            unsigned long e = 0;
            for (char c : cur_.text) {
                e = e * 10 + static_cast<unsigned long>(c - '0');
                if (e > kMaxExponent)
                    throw err("exponent exceeds the limit of " + std::to_string(kMaxExponent));
            }
            advance();
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial atom(int depth) {
        guard(depth);
        switch (cur_.kind) {
            case Token::Kind::number: {
                auto r = rational_from_string(cur_.text);
                if (!r) throw err("malformed rational literal '" + cur_.text + "'");
                advance();
                return Polynomial::constant(chart_.dim(), *r);
            }
            case Token::Kind::ident: {
                long idx = chart_.index_of(cur_.text);
                if (idx < 0) throw err("unknown identifier '" + cur_.text + "'");
                advance();
                return Polynomial::variable(chart_.dim(), static_cast<std::size_t>(idx));
            }
            case Token::Kind::lparen: {
                Token open = cur_;
                advance();
                Polynomial inner = expr(depth + 1);
                if (cur_.kind != Token::Kind::rparen)
                    throw ParseError("unbalanced parentheses: '(' is never closed", open.line,
                                     open.col);
                advance();
                return inner;
            }
            case Token::Kind::minus: {
                advance();
                return -factor(depth + 1);
            }
            case Token::Kind::rparen:
                throw err("unbalanced parentheses: unmatched ')'");
            case Token::Kind::end:
                throw err("unexpected end of expression");
            default:
                throw err("unexpected token '" + cur_.text + "'");
        }
    }

    void guard(int depth) const {
        if (depth > kMaxDepth) throw err("expression nested too deeply");
    }

    Lexer lex_;
    const CoordinateChart& chart_;
    Token cur_;
};

} // namespace

Polynomial parse_expression(std::string_view text, const CoordinateChart& chart) {
    return parse_expression_at(text, chart, 1, 1);
}

Polynomial parse_expression_at(std::string_view text, const CoordinateChart& chart, int line,
                               int col_offset) {
    return ExprParser(text, chart, line, col_offset).parse();
}

} // namespace irrev
