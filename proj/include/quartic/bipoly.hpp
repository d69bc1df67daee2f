/*
   Copyright 2026 The quartic authors

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

#ifndef QUARTIC_BIPOLY_HPP
#define QUARTIC_BIPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "quartic/rational.hpp"

namespace quartic {

/// Sparse exact polynomial in two variables s and t. Keys are exponent
/// pairs (deg_s, deg_t); zero coefficients are never stored, so the zero
/// polynomial is the empty map.
class BiPoly {
  public:
    using Exponents = std::pair<unsigned, unsigned>;
    using Terms = std::map<Exponents, Rational>;

    BiPoly() = default;
    BiPoly(int c) { set(0, 0, Rational(c)); }
    BiPoly(const Rational& c) { set(0, 0, c); }

    static BiPoly var_s() { return monomial(1, 0, Rational(1)); }
    static BiPoly var_t() { return monomial(0, 1, Rational(1)); }
    static BiPoly monomial(unsigned ds, unsigned dt, const Rational& c) {
        BiPoly p;
        p.set(ds, dt, c);
        return p;
    }

    void set(unsigned ds, unsigned dt, const Rational& c) {
        if (c.is_zero())
            terms_.erase({ds, dt});
        else
            terms_[{ds, dt}] = c;
    }
    void add_term(unsigned ds, unsigned dt, const Rational& c) { set(ds, dt, coeff(ds, dt) + c); }

    Rational coeff(unsigned ds, unsigned dt) const {
        auto it = terms_.find({ds, dt});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree, -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first + e.second));
        return d;
    }

    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }

    BiPoly& operator+=(const BiPoly& b) { *this = *this + b; return *this; }
    BiPoly& operator-=(const BiPoly& b) { *this = *this - b; return *this; }
    BiPoly& operator*=(const BiPoly& b) { *this = *this * b; return *this; }

    BiPoly scaled(const Rational& s) const {
        BiPoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
        return r;
    }

    BiPoly pow(unsigned exp) const {
        BiPoly r(1);
        BiPoly b = *this;
        while (exp > 0) {
            if (exp & 1) r *= b;
            b *= b;
            exp >>= 1;
        }
        return r;
    }

    Rational eval(const Rational& s, const Rational& t) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::string str() const;

  private:
    Terms terms_;
};

} // namespace quartic

#endif // QUARTIC_BIPOLY_HPP
