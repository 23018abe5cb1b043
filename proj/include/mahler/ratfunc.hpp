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

#include <utility>

#include "number_field.hpp"
#include "poly.hpp"

namespace mahler {

using PolyK = Poly<FieldElem>;

/// Rational function over the ambient number field, kept reduced with a
/// monic denominator at every step.
class RatFunc {
   public:
    RatFunc() : num_(), den_(PolyK(FieldElem(1))) {}
    RatFunc(PolyK num, PolyK den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error("rational function with zero denominator");
        reduce();
    }
    explicit RatFunc(PolyK num) : num_(std::move(num)), den_(PolyK(FieldElem(1))) {}
    explicit RatFunc(FieldElem c) : num_(PolyK(std::move(c))), den_(PolyK(FieldElem(1))) {}

    const PolyK& num() const { return num_; }
    const PolyK& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc zero_like() const { return RatFunc(); }
    RatFunc one_like() const { return RatFunc(PolyK(FieldElem(1))); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw Error("division by zero rational function");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    /// Substitute z -> z^m.
    RatFunc compose_power(size_t m) const { return RatFunc(num_.compose_power(m), den_.compose_power(m)); }

    /// Evaluate at a field point; throws PoleHitError(0) on a denominator root.
    FieldElem eval(const FieldElem& x) const {
        FieldElem d = den_.eval(x);
        if (d.is_zero()) throw PoleHitError("evaluation at a pole", 0);
        return num_.eval(x) / d;
    }

    bool has_pole_at(const FieldElem& x) const { return den_.eval(x).is_zero(); }

   private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = PolyK(FieldElem(1));
            return;
        }
        PolyK g = PolyK::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        FieldElem lead = den_.leading();
        if (!lead.is_one()) {
            num_ = num_ / lead;
            den_ = den_ / lead;
        }
    }

    PolyK num_, den_;
};

inline RatFunc operator*(const FieldElem& s, const RatFunc& f) { return RatFunc(PolyK(s)) * f; }

}  // namespace mahler
