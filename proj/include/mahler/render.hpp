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

#include <string>

#include "ratfunc.hpp"

namespace mahler {

/// Renders a field element so that parse_field_elem reproduces it exactly.
inline std::string render(const FieldElem& x) { return x.str(); }

/// Renders a polynomial in z so that parse_poly reproduces it exactly.
inline std::string render(const PolyK& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i <= size_t(p.degree()); ++i) {
        FieldElem c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        std::string term;
        std::string var = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
        if (i == 0) {
            term = compound ? "(" + cs + ")" : cs;
        } else if (c.is_one()) {
            term = var;
        } else if ((-c).is_one()) {
            term = "-" + var;
        } else if (compound) {
            term = "(" + cs + ")*" + var;
        } else {
            term = cs + "*" + var;
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

/// Renders a rational function so that parse_ratfunc reproduces it exactly.
inline std::string render(const RatFunc& f) {
    if (f.is_polynomial()) return render(f.num());
    return "(" + render(f.num()) + ")/(" + render(f.den()) + ")";
}

}  // namespace mahler
