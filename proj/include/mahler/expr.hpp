/*
   Copyright 2026 the mahler-relations authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cctype>
#include <string>

#include "ratfunc.hpp"

namespace mahler {

/// Recursive-descent parser for the expression grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' uint)?
///   base   := uint | 't' | 'z' | '(' expr ')'
///
/// with unary minus. `t` is the field generator, `z` the series variable.
/// The result is a rational function over the ambient field; callers narrow
/// it to Poly or FieldElem as needed.
class ExprParser {
   public:
    ExprParser(std::string src, FieldPtr field) : src_(std::move(src)), field_(std::move(field)) {}

    RatFunc parse() {
        RatFunc v = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

   private:
    RatFunc parse_expr() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (take() == '-') neg = !neg;
            skip_ws();
        }
        RatFunc v = parse_term();
        if (neg) v = -v;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                take();
                RatFunc rhs = parse_term();
                v = (c == '+') ? v + rhs : v - rhs;
            } else
                break;
        }
        return v;
    }

    RatFunc parse_term() {
        RatFunc v = parse_factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*' || c == '/') {
                take();
                RatFunc rhs = parse_factor();
                if (c == '/') {
                    if (rhs.is_zero()) throw ParseError("division by zero polynomial", pos_);
                    v = v / rhs;
                } else
                    v = v * rhs;
            } else
                break;
        }
        return v;
    }

    RatFunc parse_factor() {
        RatFunc base = parse_base();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            size_t start = pos_;
            unsigned long e = parse_uint();
            (void)start;
            RatFunc acc = RatFunc(PolyK(FieldElem(1)));
            RatFunc b = base;
            while (e > 0) {
                if (e & 1) acc = acc * b;
                e >>= 1;
                if (e > 0) b = b * b;
            }
            return acc;
        }
        return base;
    }

    RatFunc parse_base() {
        skip_ws();
        char c = peek();
        if (c == '-' || c == '+') {
            // unary sign directly before a base, e.g. "2*-3" is rejected but "(-3)" works
            take();
            RatFunc v = parse_base();
            return c == '-' ? -v : v;
        }
        if (c == '(') {
            take();
            RatFunc v = parse_expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            take();
            return v;
        }
        if (c == 't') {
            take();
            if (!field_) throw ParseError("generator 't' used without an ambient field", pos_ - 1);
            return RatFunc(PolyK(FieldElem::generator(field_)));
        }
        if (c == 'z') {
            take();
            return RatFunc(PolyK::monomial(FieldElem(1), 1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long n = parse_uint();
            return RatFunc(PolyK(FieldElem(Rational(static_cast<long>(n)))));
        }
        throw ParseError(std::string("unexpected character '") + (c ? std::string(1, c) : "<end>") + "'", pos_);
    }

    unsigned long parse_uint() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected an integer", pos_);
        unsigned long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned long>(take() - '0');
            if (v > (1ul << 40)) throw ParseError("integer literal too large", pos_);
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char take() { return src_[pos_++]; }

    std::string src_;
    FieldPtr field_;
    size_t pos_ = 0;
};

/// Parse into a rational function (most general form).
inline RatFunc parse_ratfunc(const std::string& src, const FieldPtr& field) {
    return ExprParser(src, field).parse();
}

/// Parse an expression that must be polynomial in z.
inline PolyK parse_poly(const std::string& src, const FieldPtr& field) {
    RatFunc f = parse_ratfunc(src, field);
    if (!f.is_polynomial()) throw ParseError("expected a polynomial, got a proper rational function", 0);
    return f.num();
}

/// Parse an expression that must be a scalar (no z).
inline FieldElem parse_field_elem(const std::string& src, const FieldPtr& field) {
    RatFunc f = parse_ratfunc(src, field);
    if (!f.is_polynomial() || f.num().degree() > 0)
        throw ParseError("expected a scalar field element (no z)", 0);
    return f.num().is_zero() ? FieldElem(0) : f.num().coeff(0);
}

}  // namespace mahler
