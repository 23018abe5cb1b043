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

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace mahler {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rational rat_pow(const Rational& base, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return out;
}

inline Integer rat_ceil(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline Integer rat_floor(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

/// Parses "3", "-12/7" or a decimal literal like "-0.618" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational r;
        if (r.set_str(s, 10) != 0) throw ParseError("invalid rational literal '" + s + "'", 0);
        r.canonicalize();
        return r;
    }
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool negative = !head.empty() && head[0] == '-';
    if (negative) head = head.substr(1);
    if (!head.empty() && head[0] == '+') head = head.substr(1);
    if (head.empty()) head = "0";
    for (char c : tail)
        if (c < '0' || c > '9') throw ParseError("invalid decimal literal '" + s + "'", dot);
    Integer int_part(head), frac_part(tail.empty() ? std::string("0") : tail);
    Integer den = int_pow(Integer(10), tail.size());
    Rational r = Rational(int_part) + Rational(frac_part) / Rational(den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

/// Canonical text form: "p" or "p/q" with q > 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace mahler
