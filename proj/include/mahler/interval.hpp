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

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "rational.hpp"

namespace mahler {

/// One binary floating-point number at a fixed precision (thin RAII wrap of mpfr_t).
class Fp {
   public:
    explicit Fp(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); }
    Fp(const Fp& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Fp(Fp&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Fp& operator=(const Fp& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Fp& operator=(Fp&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Fp() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

   private:
    mpfr_t v_;
};

/// Closed real interval [lo, hi] with outward-rounded endpoints.
///
/// Every operation encloses the exact result; decisions are made only when
/// the interval certifies them (sign known, comparisons strict).
class RealInterval {
   public:
    RealInterval() : RealInterval(64) {}
    explicit RealInterval(mpfr_prec_t prec) : lo_(prec), hi_(prec), prec_(prec) {
        mpfr_set_zero(lo_.get(), 1);
        mpfr_set_zero(hi_.get(), 1);
    }

    static RealInterval from_rational(const Rational& x, mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_set_q(r.lo_.get(), x.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_.get(), x.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static RealInterval from_endpoints(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_set_q(r.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    mpfr_prec_t precision() const { return prec_; }

    /// Exact rational values of the stored endpoints (binary floats are dyadic).
    Rational lo_rational() const {
        Rational q;
        mpfr_get_q(q.get_mpq_t(), lo_.get());
        return q;
    }
    Rational hi_rational() const {
        Rational q;
        mpfr_get_q(q.get_mpq_t(), hi_.get());
        return q;
    }

    bool contains_zero() const {
        return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
    }
    bool contains(const Rational& x) const {
        return mpfr_cmp_q(lo_.get(), x.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), x.get_mpq_t()) >= 0;
    }
    bool contains(const RealInterval& o) const {
        return mpfr_cmp(lo_.get(), o.lo_.get()) <= 0 && mpfr_cmp(hi_.get(), o.hi_.get()) >= 0;
    }
    /// Certified strict comparison: every point of *this < every point of o.
    bool certainly_less(const RealInterval& o) const { return mpfr_cmp(hi_.get(), o.lo_.get()) < 0; }
    bool certainly_less(const Rational& x) const { return mpfr_cmp_q(hi_.get(), x.get_mpq_t()) < 0; }
    bool certainly_greater(const Rational& x) const { return mpfr_cmp_q(lo_.get(), x.get_mpq_t()) > 0; }
    int certified_sign() const {
        if (mpfr_sgn(lo_.get()) > 0) return 1;
        if (mpfr_sgn(hi_.get()) < 0) return -1;
        return 0;  // undecided
    }

    RealInterval operator-() const {
        RealInterval r(prec_);
        mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
        mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
        return r;
    }
    RealInterval operator+(const RealInterval& o) const {
        RealInterval r(std::max(prec_, o.prec_));
        mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
        return r;
    }
    RealInterval operator-(const RealInterval& o) const { return *this + (-o); }
    RealInterval operator*(const RealInterval& o) const {
        RealInterval r(std::max(prec_, o.prec_));
        Fp c(r.prec_);
        bool first = true;
        auto consider = [&](mpfr_srcptr a, mpfr_srcptr b) {
            mpfr_mul(c.get(), a, b, MPFR_RNDD);
            if (first || mpfr_cmp(c.get(), r.lo_.get()) < 0) mpfr_set(r.lo_.get(), c.get(), MPFR_RNDD);
            mpfr_mul(c.get(), a, b, MPFR_RNDU);
            if (first || mpfr_cmp(c.get(), r.hi_.get()) > 0) mpfr_set(r.hi_.get(), c.get(), MPFR_RNDU);
            first = false;
        };
        consider(lo_.get(), o.lo_.get());
        consider(lo_.get(), o.hi_.get());
        consider(hi_.get(), o.lo_.get());
        consider(hi_.get(), o.hi_.get());
        return r;
    }
    /// Division; o must not contain zero.
    RealInterval operator/(const RealInterval& o) const {
        if (o.contains_zero()) throw PrecisionError("interval division by interval containing zero");
        RealInterval inv(o.prec_);
        mpfr_ui_div(inv.lo_.get(), 1, o.hi_.get(), MPFR_RNDD);
        mpfr_ui_div(inv.hi_.get(), 1, o.lo_.get(), MPFR_RNDU);
        return *this * inv;
    }

    RealInterval hull(const RealInterval& o) const {
        RealInterval r(std::max(prec_, o.prec_));
        mpfr_min(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_max(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
        return r;
    }
    /// Intersection; requires nonempty overlap.
    RealInterval intersect(const RealInterval& o) const {
        RealInterval r(std::max(prec_, o.prec_));
        mpfr_max(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_min(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
        if (mpfr_cmp(r.lo_.get(), r.hi_.get()) > 0) throw PrecisionError("empty interval intersection");
        return r;
    }

    RealInterval abs() const {
        RealInterval r(prec_);
        if (mpfr_sgn(lo_.get()) >= 0) return *this;
        if (mpfr_sgn(hi_.get()) <= 0) return -*this;
        mpfr_set_zero(r.lo_.get(), 1);
        Fp na(prec_);
        mpfr_neg(na.get(), lo_.get(), MPFR_RNDU);
        mpfr_max(r.hi_.get(), na.get(), hi_.get(), MPFR_RNDU);
        return r;
    }
    RealInterval sqr() const { return *this * *this; }

    Rational width() const { return hi_rational() - lo_rational(); }
    RealInterval midpoint_interval() const {
        Rational m = (lo_rational() + hi_rational()) / 2;
        return from_rational(m, prec_);
    }
    Rational midpoint() const { return (lo_rational() + hi_rational()) / 2; }

    std::string str() const {
        double lo = mpfr_get_d(lo_.get(), MPFR_RNDD), hi = mpfr_get_d(hi_.get(), MPFR_RNDU);
        return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    }

   private:
    Fp lo_, hi_;
    mpfr_prec_t prec_;
};

/// Complex rectangle re + i*im with interval sides.
class ComplexBox {
   public:
    ComplexBox() = default;
    ComplexBox(RealInterval re, RealInterval im) : re_(std::move(re)), im_(std::move(im)) {}
    static ComplexBox from_rational(const Rational& x, mpfr_prec_t prec) {
        return {RealInterval::from_rational(x, prec), RealInterval::from_rational(Rational(0), prec)};
    }

    const RealInterval& re() const { return re_; }
    const RealInterval& im() const { return im_; }

    ComplexBox operator+(const ComplexBox& o) const { return {re_ + o.re_, im_ + o.im_}; }
    ComplexBox operator-(const ComplexBox& o) const { return {re_ - o.re_, im_ - o.im_}; }
    ComplexBox operator*(const ComplexBox& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    ComplexBox operator-() const { return {-re_, -im_}; }
    /// Division by a box whose |denominator|^2 interval excludes zero.
    ComplexBox operator/(const ComplexBox& o) const {
        RealInterval n = o.re_.sqr() + o.im_.sqr();
        if (n.contains_zero()) throw PrecisionError("complex box division by box containing zero");
        ComplexBox conj{o.re_, -o.im_};
        ComplexBox num = *this * conj;
        return {num.re_ / n, num.im_ / n};
    }

    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool contains(const ComplexBox& o) const { return re_.contains(o.re_) && im_.contains(o.im_); }

    /// |z|^2 as an interval (for magnitude comparisons without square roots).
    RealInterval abs_sq() const { return re_.sqr() + im_.sqr(); }

    ComplexBox hull(const ComplexBox& o) const { return {re_.hull(o.re_), im_.hull(o.im_)}; }

    std::string str() const { return re_.str() + " + i*" + im_.str(); }

   private:
    RealInterval re_, im_;
};

}  // namespace mahler
