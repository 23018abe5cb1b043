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

#include <optional>

#include "interval.hpp"
#include "number_field.hpp"
#include "poly.hpp"
#include "ratfunc.hpp"

namespace mahler {

/// Outcome of poly_roots_modulus_lower_bound: either a certified positive
/// rational strictly below every nonzero root modulus, or "no nonzero roots".
struct ModulusLowerBound {
    std::optional<Rational> bound;  // nullopt = +infinity sentinel
    bool is_infinite() const { return !bound.has_value(); }
};

namespace detail {

/// Certified upper bound on |c| for a field element, as a rational.
inline Rational abs_upper(const FieldElem& c, mpfr_prec_t prec) {
    RealInterval a2 = abs_sq_ball(c, prec);
    Rational hi = a2.hi_rational();
    // a rational r with r^2 >= hi bounds |c| from above
    Rational r(1);
    if (hi <= 0) return Rational(0);
    while (r * r < hi) r *= 2;
    while ((r / 2) * (r / 2) >= hi) r /= 2;
    // tighten by bisection a few steps
    Rational lo = r / 2;
    for (int i = 0; i < 24; ++i) {
        Rational m = (lo + r) / 2;
        if (m * m >= hi)
            r = m;
        else
            lo = m;
    }
    return r;
}

/// Certified positive lower bound on |c| for a nonzero field element.
inline Rational abs_lower(const FieldElem& c, mpfr_prec_t start_prec = 128) {
    if (c.is_zero()) throw Error("abs_lower of zero");
    mpfr_prec_t prec = start_prec;
    while (true) {
        RealInterval a2 = abs_sq_ball(c, prec);
        Rational lo = a2.lo_rational();
        if (lo > 0) {
            Rational r(1);
            while (r * r > lo) r /= 2;
            return r;
        }
        prec *= 2;
        if (prec > 1 << 16) throw PrecisionError("cannot separate element from zero");
    }
}

/// One Graeffe root-squaring step: q(z^2) = +- p(z) p(-z); roots of q are
/// the squares of the roots of p.
inline PolyK graeffe_step(const PolyK& p) {
    PolyK pm = p;
    std::vector<FieldElem> c = pm.coeffs();
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    PolyK prod = p * PolyK(std::move(c));
    // prod is even; contract z^2 -> z
    std::vector<FieldElem> out((prod.degree() / 2) + 1, FieldElem(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = prod.coeff(2 * i);
    return PolyK(std::move(out));
}

/// Cauchy-type lower bound: every root of p satisfies
/// |z| >= |a_0| / (|a_0| + max_{i>=1} |a_i|); requires a_0 != 0.
inline Rational cauchy_lower(const PolyK& p, mpfr_prec_t prec) {
    Rational a0_lo = abs_lower(p.coeff(0));
    Rational max_hi(0);
    for (size_t i = 1; i <= size_t(p.degree()); ++i) {
        if (p.coeff(i).is_zero()) continue;
        Rational u = abs_upper(p.coeff(i), prec);
        if (u > max_hi) max_hi = u;
    }
    if (max_hi == 0) return Rational(1);  // constant: no roots at all
    return a0_lo / (a0_lo + max_hi);
}

/// Largest rational r (dyadic search) with r^(2^k) <= x, given 0 < x <= 1.
inline Rational root_2k_lower(const Rational& x, unsigned k) {
    if (x >= 1) return Rational(1);
    unsigned long e = 1ul << k;
    Rational lo(0), hi(1);
    for (int i = 0; i < 40; ++i) {
        Rational m = (lo + hi) / 2;
        if (rat_pow(m, e) <= x)
            lo = m;
        else
            hi = m;
    }
    return lo;
}

}  // namespace detail

/// Certified positive rational strictly below the modulus of every nonzero
/// complex root of p (over any embedding of the coefficient field into C,
/// using the field's designated one for magnitude bounds). Returns the
/// +infinity sentinel when p has no nonzero roots.
///
/// Method: strip z^v, take the squarefree part, apply Graeffe root-squaring
/// a few times and take the 2^k-th root of the Cauchy-type bound; this
/// converges quickly to the true minimum modulus from below.
inline ModulusLowerBound poly_roots_modulus_lower_bound(const PolyK& p, unsigned graeffe_rounds = 6) {
    if (p.is_zero()) throw PreconditionError("modulus bound of the zero polynomial");
    PolyK q = p.shift_down(p.valuation());
    if (q.degree() == 0) return ModulusLowerBound{std::nullopt};
    q = squarefree_part(q);
    mpfr_prec_t prec = 128;
    PolyK cur = q;
    Rational best(0);
    for (unsigned k = 0; k <= graeffe_rounds; ++k) {
        Rational c = detail::cauchy_lower(cur, prec);
        Rational cand = detail::root_2k_lower(c, k);
        if (cand > best) best = cand;
        if (k < graeffe_rounds) cur = detail::graeffe_step(cur);
    }
    // The Cauchy bound is strict for finite polynomials, and the 2^k-th-root
    // search never exceeds it, so `best` is strictly below every root modulus.
    return ModulusLowerBound{best};
}

}  // namespace mahler
