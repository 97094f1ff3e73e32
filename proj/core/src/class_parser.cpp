#include "lgint/class_parser.hpp"

#include <cctype>

namespace lgint {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
  public:
    Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

    ClassExpr parse() {
        ClassExpr out = expr();
        skip_ws();
        if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    unsigned long uint_literal(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(std::string("expected ") + what);
        unsigned long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (value > 1000000000UL) fail("integer literal too large");
            ++pos_;
        }
        return value;
    }

    ClassExpr expr() {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        ClassExpr out = term();
        if (negate) out = -out;
        while (true) {
            if (accept('+'))
                out += term();
            else if (accept('-'))
                out -= term();
            else
                return out;
        }
    }

    ClassExpr term() {
        ClassExpr out = factor();
        while (true) {
            if (accept('*')) {
                out = out * factor();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                unsigned long d = uint_literal("integer divisor");
                if (d == 0) throw ParseError("division by zero", at);
                out *= Rational(1, d);
            } else {
                return out;
            }
        }
    }

    ClassExpr factor() {
        ClassExpr base = atom();
        if (accept('^')) {
            unsigned long e = uint_literal("exponent");
            if (e > kMaxExponent) fail("exponent too large");
            return pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    ClassExpr atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == 's') {
            const std::size_t at = pos_;
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected generator index after 's'");
            unsigned long i = uint_literal("generator index");
            if (i < 1 || i > n_)
                throw ParseError("generator s" + std::to_string(i) + " outside s1..s" + std::to_string(n_),
                                 at);
            return ClassExpr::generator(i, n_);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return ClassExpr::constant(n_, Rational(uint_literal("integer")));
        if (accept('(')) {
            ClassExpr inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

ClassExpr parse_class_expr(std::string_view text, std::size_t n) { return Parser(text, n).parse(); }

}  // namespace lgint
