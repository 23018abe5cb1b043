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

#include <limits>
#include <vector>

#include "errors.hpp"

namespace mahler {

/// Degree of the zero polynomial (acts as -infinity in degree arithmetic).
inline constexpr int kDegNegInf = std::numeric_limits<int>::min() / 2;

/// Dense univariate polynomial over a field-like coefficient type T.
///
/// T must provide +, -, *, /, ==, a default constructor giving 0, and
/// is_zero()/is_one(). Coefficients are canonical: no trailing zeros.
template <class T>
class Poly {
   public:
    Poly() = default;
    explicit Poly(T c) : coeffs_{std::move(c)} { strip(); }
    explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

    static Poly zero() { return Poly(); }
    static Poly monomial(T c, size_t e) {
        if (c.is_zero()) return Poly();
        std::vector<T> v(e + 1, c.zero_like());
        v[e] = std::move(c);
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kDegNegInf : int(coeffs_.size()) - 1; }
    /// z-adic valuation; degree sentinel for the zero polynomial.
    int valuation() const {
        if (coeffs_.empty()) return kDegNegInf;
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return int(i);
        return kDegNegInf;
    }

    const std::vector<T>& coeffs() const { return coeffs_; }
    /// Coefficient of z^i (zero beyond the stored range).
    T coeff(size_t i) const {
        if (i >= coeffs_.size()) return leading_or_default().zero_like();
        return coeffs_[i];
    }
    const T& leading() const {
        if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    const T& constant_term() const {
        if (coeffs_.empty()) throw Error("constant term of zero polynomial requires a field context");
        return coeffs_.front();
    }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    Poly zero_like() const { return Poly(); }
    Poly one_like() const {
        return Poly((coeffs_.empty() ? T() : coeffs_[0]).one_like());
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    Poly operator+(const Poly& o) const {
        std::vector<T> v(std::max(coeffs_.size(), o.coeffs_.size()));
        for (size_t i = 0; i < v.size(); ++i) {
            if (i < coeffs_.size() && i < o.coeffs_.size())
                v[i] = coeffs_[i] + o.coeffs_[i];
            else if (i < coeffs_.size())
                v[i] = coeffs_[i];
            else
                v[i] = o.coeffs_[i];
        }
        return Poly(std::move(v));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> v(coeffs_.size() + o.coeffs_.size() - 1, coeffs_[0].zero_like());
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < o.coeffs_.size(); ++j) {
                if (o.coeffs_[j].is_zero()) continue;
                v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
            }
        }
        return Poly(std::move(v));
    }
    Poly operator*(const T& s) const {
        if (s.is_zero()) return Poly();
        Poly r = *this;
        for (auto& c : r.coeffs_) c = c * s;
        r.strip();
        return r;
    }
    Poly operator/(const T& s) const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = c / s;
        return r;
    }
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Euclidean division; the divisor must be nonzero.
    static std::pair<Poly, Poly> div_rem(Poly a, const Poly& b) {
        if (b.is_zero()) throw Error("polynomial division by zero");
        Poly q;
        if (a.degree() >= b.degree()) {
            q.coeffs_.assign(a.degree() - b.degree() + 1, b.leading().zero_like());
            while (!a.is_zero() && a.degree() >= b.degree()) {
                T c = a.leading() / b.leading();
                int shift = a.degree() - b.degree();
                q.coeffs_[shift] = c;
                for (size_t i = 0; i < b.coeffs_.size(); ++i)
                    a.coeffs_[i + shift] = a.coeffs_[i + shift] - c * b.coeffs_[i];
                a.coeffs_.pop_back();
                a.strip();
            }
            q.strip();
        }
        return {std::move(q), std::move(a)};
    }
    Poly operator/(const Poly& o) const { return div_rem(*this, o).first; }
    Poly operator%(const Poly& o) const { return div_rem(*this, o).second; }

    /// Monic gcd.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = div_rem(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) a = a / a.leading();
        return a;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<T> v(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * long(i);
        return Poly(std::move(v));
    }

    T eval(const T& x) const {
        if (coeffs_.empty()) return x.zero_like();
        T acc = coeffs_.back();
        for (size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// p(z) -> p(z^m).
    Poly compose_power(size_t m) const {
        if (is_zero() || m == 1) return *this;
        std::vector<T> v((coeffs_.size() - 1) * m + 1, coeffs_[0].zero_like());
        for (size_t i = 0; i < coeffs_.size(); ++i) v[i * m] = coeffs_[i];
        return Poly(std::move(v));
    }

    /// p(z) -> z^m * p(z).
    Poly shift_up(size_t m) const {
        if (is_zero() || m == 0) return *this;
        std::vector<T> v(coeffs_.size() + m, coeffs_[0].zero_like());
        for (size_t i = 0; i < coeffs_.size(); ++i) v[i + m] = coeffs_[i];
        return Poly(std::move(v));
    }

    /// Exact division by z^m; fails if the valuation is smaller.
    Poly shift_down(size_t m) const {
        if (is_zero()) return *this;
        if (valuation() < int(m)) throw Error("shift_down below valuation");
        return Poly(std::vector<T>(coeffs_.begin() + m, coeffs_.end()));
    }

    /// Multiplicity of x as a root (0 if not a root).
    size_t root_multiplicity(const T& x) const {
        if (is_zero()) throw Error("root multiplicity in zero polynomial");
        Poly p = *this;
        Poly lin(std::vector<T>{-x, x.one_like()});
        size_t m = 0;
        while (true) {
            auto [q, r] = div_rem(p, lin);
            if (!r.is_zero()) return m;
            ++m;
            p = std::move(q);
            if (p.is_zero()) return m;
        }
    }

   private:
    T leading_or_default() const { return coeffs_.empty() ? T() : coeffs_.back(); }
    void strip() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<T> coeffs_;
};

template <class T>
Poly<T> operator*(const T& s, const Poly<T>& p) {
    return p * s;
}

/// Monic lcm of two polynomials.
template <class T>
Poly<T> poly_lcm(const Poly<T>& a, const Poly<T>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<T>();
    Poly<T> g = Poly<T>::gcd(a, b);
    Poly<T> l = (a / g) * b;
    return l / l.leading();
}

/// Squarefree part: p / gcd(p, p').
template <class T>
Poly<T> squarefree_part(const Poly<T>& p) {
    if (p.is_zero()) return p;
    Poly<T> g = Poly<T>::gcd(p, p.derivative());
    Poly<T> s = p / g;
    return s / s.leading();
}

}  // namespace mahler
