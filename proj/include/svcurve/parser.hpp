#pragma once

// Recursive-descent parser for the polynomial grammar shared with the CLI:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := 'X' | 'Y' | int | '(' expr ')'
//
// Implicit multiplication is not allowed. Integer literals are reduced mod
// p. Errors carry the byte offset. Printing (BivarPoly::to_text) emits
// canonical text in this grammar, so parse-print-parse is a fixed point.

#include <cctype>
#include <string>

#include "bivar.hpp"

namespace svcurve {

namespace parsedetail {

class Parser {
public:
    Parser(const std::string& text, FieldPtr field)
        : s_(text), field_(std::move(field)) {}

    BivarPoly run() {
        BivarPoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    BivarPoly expr() {
        BivarPoly acc = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = acc + term();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    BivarPoly term() {
        BivarPoly acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    BivarPoly factor() {
        BivarPoly b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            if (!is_digit(peek())) fail("exponent expected after '^'");
            std::uint64_t e = 0;
            while (is_digit(peek())) {
                e = e * 10 + static_cast<std::uint64_t>(peek() - '0');
                if (e > 1000000) throw parse_error("exponent too large", at);
                ++pos_;
            }
            BivarPoly acc = BivarPoly::constant(field_, field_->one());
            // square-and-multiply keeps large exponents cheap
            BivarPoly sq = b;
            while (e > 0) {
                if (e & 1) acc = acc * sq;
                e >>= 1;
                if (e) sq = sq * sq;
            }
            return acc;
        }
        return b;
    }

    BivarPoly base() {
        skip_ws();
        char c = peek();
        if (c == 'X') {
            ++pos_;
            return BivarPoly::var_u(field_);
        }
        if (c == 'Y') {
            ++pos_;
            return BivarPoly::var_v(field_);
        }
        if (c == '(') {
            ++pos_;
            BivarPoly r = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (is_digit(c)) {
            std::int64_t n = 0;
            while (is_digit(peek())) {
                n = n * 10 + (peek() - '0');
                n %= field_->p();  // reduce as we go; mod-p value is all we keep
                ++pos_;
            }
            return BivarPoly::constant(field_, field_->from_int(n));
        }
        if (c == '\0') fail("unexpected end of input");
        if (std::isalpha(static_cast<unsigned char>(c)))
            fail("unknown identifier (only X and Y are variables)");
        fail("unexpected character");
        return BivarPoly(field_);  // unreachable
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    const std::string& s_;
    std::size_t pos_ = 0;
    FieldPtr field_;
};

}  // namespace parsedetail

inline BivarPoly parse_poly(const std::string& text, const FieldPtr& field) {
    return parsedetail::Parser(text, field).run();
}

}  // namespace svcurve
