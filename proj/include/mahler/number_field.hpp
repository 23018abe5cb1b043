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

#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "interval.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace mahler {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field k = Q[t]/(minpoly), represented by its
/// coefficient vector mod minpoly. A null field pointer means a plain
/// rational constant, which lifts implicitly into any ambient field.
class FieldElem {
   public:
    FieldElem() : coeffs_{Rational(0)} {}
    explicit FieldElem(Rational r) : coeffs_{std::move(r)} {}
    FieldElem(long n) : coeffs_{Rational(n)} {}
    FieldElem(FieldPtr field, std::vector<Rational> coeffs);

    static FieldElem generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_one() const {
        if (coeffs_[0] != 1) return false;
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    /// The rational value; only valid when is_rational().
    Rational rational_value() const {
        if (!is_rational()) throw Error("field element is not rational");
        return coeffs_[0];
    }

    FieldElem zero_like() const { return with_field(field_, Rational(0)); }
    FieldElem one_like() const { return with_field(field_, Rational(1)); }

    FieldElem operator-() const {
        FieldElem r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const { return *this + (-o); }
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator*(long s) const {
        FieldElem r = *this;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }
    FieldElem inverse() const;
    FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem pow(const Integer& e) const;

    std::string str() const;

   private:
    static FieldElem with_field(const FieldPtr& f, Rational c);
    static void align(FieldElem& a, FieldElem& b);

    FieldPtr field_;  // null: plain rational
    std::vector<Rational> coeffs_;
    friend class NumberField;
};

namespace detail {

/// Exact complex rational point, for evaluating rational polynomials at box midpoints.
struct QComplex {
    Rational re, im;
    QComplex operator+(const QComplex& o) const { return {re + o.re, im + o.im}; }
    QComplex operator*(const QComplex& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
};

}  // namespace detail

/// The ambient number field: a monic squarefree minimal polynomial over Q
/// together with one designated (refinable) root enclosure.
///
/// Irreducibility is not checked; a reducible minpoly surfaces later as an
/// inversion failure that names the discovered factor.
class NumberField {
   public:
    /// minpoly coefficients are rational (null-field) elements, monic of degree >= 1.
    static FieldPtr create(const Poly<FieldElem>& minpoly, const Rational& hint_re,
                           const Rational& hint_im = Rational(0)) {
        auto f = std::shared_ptr<NumberField>(new NumberField(minpoly, hint_re, hint_im));
        f->isolate_root();
        return f;
    }

    size_t degree() const { return size_t(minpoly_.size()) - 1; }
    /// Rational minpoly coefficients, constant term first, length degree()+1.
    const std::vector<Rational>& minpoly() const { return minpoly_; }
    bool root_is_real() const { return real_mode_; }

    /// Certified enclosure of the designated root with width <= 2^-prec.
    ComplexBox root_box(mpfr_prec_t prec) const;

    std::string minpoly_str() const;

   private:
    NumberField(const Poly<FieldElem>& minpoly, const Rational& hint_re, const Rational& hint_im)
        : hint_re_(hint_re), hint_im_(hint_im) {
        if (minpoly.degree() < 1) throw Error("minpoly must have degree >= 1");
        if (!minpoly.is_monic()) throw Error("minpoly must be monic");
        minpoly_.reserve(minpoly.coeffs().size());
        for (const auto& c : minpoly.coeffs()) {
            if (c.field() || !c.is_rational()) throw Error("minpoly coefficients must be rational");
            minpoly_.push_back(c.rational_value());
        }
        check_squarefree();
        build_reduction_rows();
    }

    void check_squarefree() const;
    void build_reduction_rows();
    void isolate_root();
    void refine_to(const Rational& width) const;

    Rational eval_minpoly(const Rational& x) const {
        Rational acc = minpoly_.back();
        for (size_t i = minpoly_.size() - 1; i-- > 0;) acc = acc * x + minpoly_[i];
        return acc;
    }
    detail::QComplex eval_q(const std::vector<Rational>& p, const detail::QComplex& x) const {
        detail::QComplex acc{p.back(), Rational(0)};
        for (size_t i = p.size() - 1; i-- > 0;) acc = acc * x + detail::QComplex{p[i], Rational(0)};
        return acc;
    }
    ComplexBox eval_box(const std::vector<Rational>& p, const ComplexBox& x, mpfr_prec_t prec) const {
        ComplexBox acc = ComplexBox::from_rational(p.back(), prec);
        for (size_t i = p.size() - 1; i-- > 0;) acc = acc * x + ComplexBox::from_rational(p[i], prec);
        return acc;
    }
    int sturm_variations(const Rational& x) const;
    long sturm_count(const Rational& a, const Rational& b) const;

    std::vector<Rational> minpoly_;
    std::vector<Rational> deriv_;
    // reduction_[j] = coefficients of t^{degree+j} mod minpoly, j = 0..degree-2
    std::vector<std::vector<Rational>> reduction_;
    std::vector<std::vector<Rational>> sturm_;
    Rational hint_re_, hint_im_;

    bool real_mode_ = true;
    // Real mode: [lo, hi] with a sign change (or exact point lo == hi).
    // Complex mode: Newton-verified box.
    mutable Rational lo_, hi_;
    mutable Rational im_lo_, im_hi_;
    mutable bool exact_point_ = false;
    mutable std::mutex mutex_;

    friend class FieldElem;
};

// ---- FieldElem implementation ----

inline FieldElem::FieldElem(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw Error("FieldElem: null field in field constructor");
    if (coeffs_.size() > field_->degree()) throw Error("FieldElem: coefficient vector longer than field degree");
    coeffs_.resize(field_->degree(), Rational(0));
}

inline FieldElem FieldElem::generator(const FieldPtr& field) {
    if (field->degree() == 1) {
        // Q[t]/(t - a): the generator is the rational number a.
        return with_field(field, -field->minpoly()[0]);
    }
    std::vector<Rational> c(field->degree(), Rational(0));
    c[1] = 1;
    return FieldElem(field, std::move(c));
}

inline FieldElem FieldElem::with_field(const FieldPtr& f, Rational c) {
    if (!f) return FieldElem(std::move(c));
    std::vector<Rational> v(f->degree(), Rational(0));
    v[0] = std::move(c);
    return FieldElem(f, std::move(v));
}

inline void FieldElem::align(FieldElem& a, FieldElem& b) {
    if (a.field_ == b.field_) return;
    if (!a.field_ && b.field_) {
        a = with_field(b.field_, a.coeffs_[0]);
        return;
    }
    if (a.field_ && !b.field_) {
        b = with_field(a.field_, b.coeffs_[0]);
        return;
    }
    throw Error("field elements from different ambient fields");
}

inline FieldElem FieldElem::operator+(const FieldElem& o) const {
    FieldElem a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

inline FieldElem FieldElem::operator*(const FieldElem& o) const {
    FieldElem a = *this, b = o;
    align(a, b);
    if (!a.field_) return FieldElem(a.coeffs_[0] * b.coeffs_[0]);
    size_t d = a.field_->degree();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + d);
    for (size_t j = 0; j + d < prod.size() + 0; ++j) {
        const Rational& c = prod[d + j];
        if (c == 0) continue;
        const auto& row = a.field_->reduction_[j];
        for (size_t i = 0; i < d; ++i) out[i] += c * row[i];
    }
    return FieldElem(a.field_, std::move(out));
}

inline bool FieldElem::operator==(const FieldElem& o) const {
    FieldElem a = *this, b = o;
    align(a, b);
    return a.coeffs_ == b.coeffs_;
}

inline FieldElem FieldElem::inverse() const {
    if (is_zero()) throw Error("division by zero field element");
    if (!field_ || is_rational()) {
        FieldElem r = *this;
        Rational inv = Rational(1) / r.coeffs_[0];
        for (auto& c : r.coeffs_) c = 0;
        r.coeffs_[0] = inv;
        return r;
    }
    // Extended Euclid for gcd(e, minpoly) over Q[x].
    size_t d = field_->degree();
    std::vector<Rational> r0 = field_->minpoly_;
    std::vector<Rational> r1 = coeffs_;
    auto strip = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    strip(r1);
    std::vector<Rational> s0{}, s1{Rational(1)};  // Bezout coefficients against e
    while (true) {
        // divide r0 by r1
        std::vector<Rational> q;
        std::vector<Rational> rem = r0;
        strip(rem);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, Rational(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) rem[i + shift] -= c * r1[i];
            rem.pop_back();
            strip(rem);
        }
        // s_next = s0 - q * s1
        std::vector<Rational> s_next = s0;
        if (!q.empty()) {
            s_next.resize(std::max(s_next.size(), q.size() + s1.size() - 1), Rational(0));
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (size_t j = 0; j < s1.size(); ++j) s_next[i + j] -= q[i] * s1[j];
            }
        }
        strip(s_next);
        if (rem.empty()) break;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_next);
    }
    if (r1.size() != 1) {
        std::ostringstream os;
        os << "minpoly is reducible: discovered factor of degree " << (r1.size() - 1)
           << " while inverting a nonzero element";
        throw Error(os.str());
    }
    Rational g = r1[0];
    std::vector<Rational> out(d, Rational(0));
    for (size_t i = 0; i < s1.size() && i < d; ++i) out[i] = s1[i] / g;
    return FieldElem(field_, std::move(out));
}

inline FieldElem FieldElem::pow(const Integer& e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem base = *this;
    FieldElem acc = one_like();
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

inline std::string FieldElem::str() const {
    // Grammar-compatible rendering: "0", "1/2", "t", "-1/2 + 3*t", "2*t^2".
    std::string out;
    bool any = false;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = c > 0 ? c : Rational(-c);
        std::string term;
        if (i == 0) {
            term = to_string(a);
        } else {
            std::string var = i == 1 ? "t" : "t^" + std::to_string(i);
            term = (a == 1) ? var : to_string(a) + "*" + var;
        }
        if (!any) {
            out = (c < 0 ? "-" : "") + term;
        } else {
            out += (c < 0 ? " - " : " + ") + term;
        }
        any = true;
    }
    return any ? out : "0";
}

// ---- NumberField implementation ----

inline void NumberField::check_squarefree() const {
    // gcd(p, p') must be constant.
    std::vector<Rational> a = minpoly_, b;
    for (size_t i = 1; i < minpoly_.size(); ++i) b.push_back(minpoly_[i] * long(i));
    auto strip = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    strip(a);
    strip(b);
    while (!b.empty()) {
        std::vector<Rational> rem = a;
        while (rem.size() >= b.size() && !rem.empty()) {
            Rational c = rem.back() / b.back();
            size_t shift = rem.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) rem[i + shift] -= c * b[i];
            rem.pop_back();
            strip(rem);
        }
        a = std::move(b);
        b = std::move(rem);
    }
    if (a.size() != 1) throw Error("minpoly is not squarefree");
}

inline void NumberField::build_reduction_rows() {
    size_t d = degree();
    deriv_.clear();
    for (size_t i = 1; i < minpoly_.size(); ++i) deriv_.push_back(minpoly_[i] * long(i));
    reduction_.clear();
    if (d < 2) {
        // Sturm chain still needed for root isolation.
    } else {
        // t^d = -(m_0 + m_1 t + ... + m_{d-1} t^{d-1})
        std::vector<Rational> cur(d);
        for (size_t i = 0; i < d; ++i) cur[i] = -minpoly_[i];
        reduction_.push_back(cur);
        for (size_t j = 1; j + 1 < d; ++j) {
            std::vector<Rational> nxt(d, Rational(0));
            // multiply by t, then reduce the overflow coefficient
            Rational top = cur[d - 1];
            for (size_t i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
            nxt[0] = 0;
            if (top != 0)
                for (size_t i = 0; i < d; ++i) nxt[i] += top * reduction_[0][i];
            reduction_.push_back(nxt);
            cur = std::move(nxt);
        }
    }
    // Sturm sequence of minpoly.
    sturm_.clear();
    std::vector<Rational> p0 = minpoly_, p1 = deriv_;
    auto strip = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    strip(p0);
    strip(p1);
    sturm_.push_back(p0);
    if (!p1.empty()) sturm_.push_back(p1);
    while (sturm_.size() >= 2 && !sturm_.back().empty()) {
        const auto& a = sturm_[sturm_.size() - 2];
        const auto& b = sturm_.back();
        std::vector<Rational> rem = a;
        while (rem.size() >= b.size() && !rem.empty()) {
            Rational c = rem.back() / b.back();
            size_t shift = rem.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) rem[i + shift] -= c * b[i];
            rem.pop_back();
            strip(rem);
        }
        if (rem.empty()) break;
        for (auto& c : rem) c = -c;
        sturm_.push_back(rem);
    }
}

inline int NumberField::sturm_variations(const Rational& x) const {
    int var = 0, prev = 0;
    for (const auto& p : sturm_) {
        Rational acc = 0;
        for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
        int s = acc > 0 ? 1 : (acc < 0 ? -1 : 0);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

inline long NumberField::sturm_count(const Rational& a, const Rational& b) const {
    return sturm_variations(a) - sturm_variations(b);
}

inline void NumberField::isolate_root() {
    if (hint_im_ != 0) {
        real_mode_ = false;
    } else {
        // Look for one real root near the hint.
        Rational c = hint_re_;
        Rational delta(1, 8);
        real_mode_ = false;
        for (int attempt = 0; attempt < 80; ++attempt) {
            Rational a = c - delta, b = c + delta;
            if (eval_minpoly(a) == 0) a -= delta / 64;  // nudge off exact roots at endpoints
            if (eval_minpoly(b) == 0) b += delta / 64;
            long count = sturm_count(a, b);
            if (count == 1) {
                lo_ = a;
                hi_ = b;
                real_mode_ = true;
                break;
            }
            if (count == 0)
                delta *= 2;
            else
                delta /= 2;
        }
        if (real_mode_) {
            // Exact rational root collapses to a point interval.
            if (eval_minpoly(lo_) == 0) {
                hi_ = lo_;
                exact_point_ = true;
            } else if (eval_minpoly(hi_) == 0) {
                lo_ = hi_;
                exact_point_ = true;
            } else if (eval_minpoly(lo_) * eval_minpoly(hi_) > 0) {
                // Sturm says one root inside but no sign change: can only be an
                // interior rational root of even ... impossible for squarefree;
                // fall through to bisection search for the sign change.
                Rational m = (lo_ + hi_) / 2;
                if (eval_minpoly(m) == 0) {
                    lo_ = hi_ = m;
                    exact_point_ = true;
                }
            }
            return;
        }
    }
    // Complex mode: verify the hint box by Newton contraction.
    im_lo_ = hint_im_ - Rational(1, 8);
    im_hi_ = hint_im_ + Rational(1, 8);
    lo_ = hint_re_ - Rational(1, 8);
    hi_ = hint_re_ + Rational(1, 8);
    mpfr_prec_t prec = 128;
    for (int attempt = 0; attempt < 64; ++attempt) {
        ComplexBox box{RealInterval::from_endpoints(lo_, hi_, prec),
                       RealInterval::from_endpoints(im_lo_, im_hi_, prec)};
        detail::QComplex mid{(lo_ + hi_) / 2, (im_lo_ + im_hi_) / 2};
        detail::QComplex pm = eval_q(minpoly_, mid);
        ComplexBox dp = eval_box(deriv_, box, prec);
        try {
            ComplexBox pm_box{RealInterval::from_rational(pm.re, prec), RealInterval::from_rational(pm.im, prec)};
            ComplexBox mid_box = ComplexBox{RealInterval::from_rational(mid.re, prec),
                                            RealInterval::from_rational(mid.im, prec)};
            ComplexBox next = mid_box - pm_box / dp;
            if (box.contains(next)) {
                lo_ = next.re().lo_rational();
                hi_ = next.re().hi_rational();
                im_lo_ = next.im().lo_rational();
                im_hi_ = next.im().hi_rational();
                return;
            }
            // keep the part of the Newton image inside the box, else shrink toward hint
            lo_ = std::max(lo_, next.re().lo_rational());
            hi_ = std::min(hi_, next.re().hi_rational());
            im_lo_ = std::max(im_lo_, next.im().lo_rational());
            im_hi_ = std::min(im_hi_, next.im().hi_rational());
            if (lo_ > hi_ || im_lo_ > im_hi_) break;
        } catch (const PrecisionError&) {
            prec *= 2;
            if (prec > 8192) break;
        }
    }
    throw Error("embedding hint does not isolate a root of the minpoly");
}

inline void NumberField::refine_to(const Rational& width) const {
    if (exact_point_) return;
    if (real_mode_) {
        // Bisection with exact signs; Newton could be used but bisection is
        // robust and the cost is logarithmic in the requested width.
        int slo = eval_minpoly(lo_) > 0 ? 1 : -1;
        while (hi_ - lo_ > width) {
            Rational m = (lo_ + hi_) / 2;
            Rational v = eval_minpoly(m);
            if (v == 0) {
                lo_ = hi_ = m;
                exact_point_ = true;
                return;
            }
            if ((v > 0 ? 1 : -1) == slo)
                lo_ = m;
            else
                hi_ = m;
        }
        return;
    }
    mpfr_prec_t prec = 256;
    while (hi_ - lo_ > width || im_hi_ - im_lo_ > width) {
        ComplexBox box{RealInterval::from_endpoints(lo_, hi_, prec),
                       RealInterval::from_endpoints(im_lo_, im_hi_, prec)};
        detail::QComplex mid{(lo_ + hi_) / 2, (im_lo_ + im_hi_) / 2};
        detail::QComplex pm = eval_q(minpoly_, mid);
        try {
            ComplexBox dp = eval_box(deriv_, box, prec);
            ComplexBox pm_box{RealInterval::from_rational(pm.re, prec), RealInterval::from_rational(pm.im, prec)};
            ComplexBox mid_box{RealInterval::from_rational(mid.re, prec), RealInterval::from_rational(mid.im, prec)};
            ComplexBox next = mid_box - pm_box / dp;
            Rational nlo = std::max(lo_, next.re().lo_rational());
            Rational nhi = std::min(hi_, next.re().hi_rational());
            Rational nimlo = std::max(im_lo_, next.im().lo_rational());
            Rational nimhi = std::min(im_hi_, next.im().hi_rational());
            if (nlo > nhi || nimlo > nimhi) throw PrecisionError("Newton image escaped the enclosure");
            bool progress = (nhi - nlo) < (hi_ - lo_) * Rational(3, 4) ||
                            (nimhi - nimlo) < (im_hi_ - im_lo_) * Rational(3, 4);
            lo_ = nlo;
            hi_ = nhi;
            im_lo_ = nimlo;
            im_hi_ = nimhi;
            if (!progress) prec *= 2;
        } catch (const PrecisionError&) {
            prec *= 2;
        }
        if (prec > 1 << 20) throw PrecisionError("root refinement stalled (root lost?)");
    }
}

inline ComplexBox NumberField::root_box(mpfr_prec_t prec) const {
    std::lock_guard<std::mutex> lock(mutex_);
    Rational width = Rational(1) / rat_pow(Rational(2), (unsigned long)prec);
    refine_to(width);
    return ComplexBox{RealInterval::from_endpoints(lo_, hi_, prec + 32),
                      real_mode_ ? RealInterval::from_rational(Rational(0), prec + 32)
                                 : RealInterval::from_endpoints(im_lo_, im_hi_, prec + 32)};
}

inline std::string NumberField::minpoly_str() const {
    std::string out;
    for (size_t i = minpoly_.size(); i-- > 0;) {
        const Rational& c = minpoly_[i];
        if (c == 0) continue;
        Rational a = c > 0 ? c : Rational(-c);
        std::string term;
        if (i == 0)
            term = to_string(a);
        else {
            std::string var = i == 1 ? "z" : "z^" + std::to_string(i);
            term = a == 1 ? var : to_string(a) + "*" + var;
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

/// Certified complex enclosure of x under the designated embedding of its field.
/// Rational constants embed exactly. Doubling the precision never widens the box.
inline ComplexBox embed_ball(const FieldElem& x, mpfr_prec_t precision) {
    if (!x.field() || x.is_rational()) return ComplexBox::from_rational(x.coeffs()[0], precision);
    ComplexBox t = x.field()->root_box(precision);
    mpfr_prec_t work = precision + 32;
    ComplexBox acc = ComplexBox::from_rational(x.coeffs().back(), work);
    for (size_t i = x.coeffs().size() - 1; i-- > 0;)
        acc = acc * t + ComplexBox::from_rational(x.coeffs()[i], work);
    return acc;
}

/// |x|^2 as a certified interval.
inline RealInterval abs_sq_ball(const FieldElem& x, mpfr_prec_t precision) {
    return embed_ball(x, precision).abs_sq();
}

}  // namespace mahler
