#include "dvkit/parser.hpp"

#include <cctype>

namespace dvkit {

namespace {

struct Token {
    enum class Kind { Integer, Ident, Op, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string &text) : text_(&text) { advance(); }

    const Token &peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        const std::string &text = *text_;
        while (pos_ < text.size() && std::isspace(static_cast<unsigned char>(text[pos_]))) bump();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = text[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Kind::Integer;
            while (pos_ < text.size() && std::isdigit(static_cast<unsigned char>(text[pos_]))) {
                tok_.text += text[pos_];
                bump();
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok_.kind = Token::Kind::Ident;
            while (pos_ < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos_])) || text[pos_] == '_')) {
                tok_.text += text[pos_];
                bump();
            }
            return;
        }
        if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '(' || c == ')') {
            tok_.kind = Token::Kind::Op;
            tok_.text = std::string(1, c);
            bump();
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    void bump() {
        if ((*text_)[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string *text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
  public:
    Parser(const std::string &text, const ContextPtr &ctx, bool allow_division)
        : lex_(text), ctx_(ctx), allow_division_(allow_division) {}

    RationalFunction run() {
        RationalFunction v = expr();
        const Token &t = lex_.peek();
        if (t.kind != Token::Kind::End) throw ParseError("unexpected trailing input '" + t.text + "'", t.line, t.col);
        return v;
    }

  private:
    RationalFunction expr() {
        RationalFunction v = term();
        while (is_op("+") || is_op("-")) {
            Token op = lex_.take();
            RationalFunction rhs = term();
            v = op.text == "+" ? v + rhs : v - rhs;
        }
        return v;
    }

    RationalFunction term() {
        RationalFunction v = factor();
        for (;;) {
            if (is_op("*")) {
                lex_.take();
                v = v * factor();
            } else if (is_op("/")) {
                Token op = lex_.take();
                if (!allow_division_)
                    throw ParseError("division in a polynomial-only position", op.line, op.col);
                RationalFunction rhs = factor();
                if (rhs.is_zero()) throw ParseError("division by zero", op.line, op.col);
                v = v / rhs;
            } else {
                return v;
            }
        }
    }

    RationalFunction factor() {
        RationalFunction v = base();
        if (is_op("^")) {
            Token op = lex_.take();
            const Token &t = lex_.peek();
            if (t.kind != Token::Kind::Integer)
                throw ParseError("expected a natural number after '^'", op.line, op.col);
            Token n = lex_.take();
            if (n.text.size() > 4) throw ParseError("exponent too large", n.line, n.col);
            int e = std::stoi(n.text);
            RationalFunction r(Polynomial::rational(ctx_, Rational(1)));
            for (int i = 0; i < e; ++i) r = r * v;
            v = r;
        }
        return v;
    }

    RationalFunction base() {
        const Token &t = lex_.peek();
        if (t.kind == Token::Kind::Op && t.text == "-") {
            lex_.take();
            return -base();
        }
        if (t.kind == Token::Kind::Op && t.text == "(") {
            lex_.take();
            RationalFunction v = expr();
            const Token &close = lex_.peek();
            if (!(close.kind == Token::Kind::Op && close.text == ")"))
                throw ParseError("expected ')'", close.line, close.col);
            lex_.take();
            return v;
        }
        if (t.kind == Token::Kind::Integer) {
            Token n = lex_.take();
            mpz_class num(n.text);
            mpz_class den(1);
            // Rational literal: integer '/' positive-integer (both modes).
            if (is_op("/")) {
                Lexer save = lex_; // cheap: lexers are small value types
                Token slash = lex_.take();
                if (lex_.peek().kind == Token::Kind::Integer) {
                    Token d = lex_.take();
                    den = mpz_class(d.text);
                    if (den == 0) throw ParseError("zero denominator in rational literal", d.line, d.col);
                } else {
                    if (!allow_division_)
                        throw ParseError("division in a polynomial-only position", slash.line, slash.col);
                    lex_ = save;
                }
            }
            return RationalFunction(Polynomial::rational(ctx_, Rational::from_mpz(num, den)));
        }
        if (t.kind == Token::Kind::Ident) {
            Token id = lex_.take();
            int vi = ctx_->var_index(id.text);
            if (vi >= 0) return RationalFunction(Polynomial::variable(ctx_, vi));
            int pi = ctx_->param_index(id.text);
            if (pi >= 0) {
                ParamPoly c = ParamPoly::variable(ctx_->nparams(), pi, Rational(1));
                return RationalFunction(Polynomial::constant(ctx_, FieldElement(c)));
            }
            throw ParseError("unknown identifier '" + id.text + "'", id.line, id.col);
        }
        throw ParseError("expected an expression", t.line, t.col);
    }

    bool is_op(const char *s) const {
        return lex_.peek().kind == Token::Kind::Op && lex_.peek().text == s;
    }

    Lexer lex_;
    ContextPtr ctx_;
    bool allow_division_;
};

} // namespace

Polynomial parse_polynomial(const std::string &text, const ContextPtr &ctx) {
    RationalFunction v = Parser(text, ctx, false).run();
    return v.num(); // denominator is 1 in polynomial mode
}

RationalFunction parse_rational_function(const std::string &text, const ContextPtr &ctx) {
    return Parser(text, ctx, true).run();
}

FieldElement parse_field_element(const std::string &text, const ContextPtr &ctx) {
    RationalFunction v = Parser(text, ctx, true).run();
    if (!v.num().is_constant() || !v.den().is_constant())
        throw ParseError("expected a base-field expression (parameters and rationals only)", 1, 1);
    return v.num().constant_term() / v.den().constant_term();
}

} // namespace dvkit
