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

#ifndef QUARTIC_UNIPOLY_HPP
#define QUARTIC_UNIPOLY_HPP

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "quartic/quadext.hpp"
#include "quartic/rational.hpp"

namespace quartic {

/// Dense univariate polynomial over an exact scalar ring (Rational,
/// QuadExtElem, or another polynomial ring). Coefficient index = degree.
/// The zero polynomial is the empty coefficient sequence.
template <class T>
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(int c) : c_{T(c)} { trim(); }
    UniPoly(const T& c) : c_{c} { trim(); }
    UniPoly(std::initializer_list<T> ascending) : c_(ascending) { trim(); }
    explicit UniPoly(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }

    static UniPoly variable() { return UniPoly{T(0), T(1)}; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^i (zero beyond the stored range).
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& leading() const {
        if (c_.empty()) throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
        return c_.back();
    }
    const std::vector<T>& coeffs() const { return c_; }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }

    UniPoly& operator+=(const UniPoly& b) { *this = *this + b; return *this; }
    UniPoly& operator-=(const UniPoly& b) { *this = *this - b; return *this; }
    UniPoly& operator*=(const UniPoly& b) { *this = *this * b; return *this; }

    UniPoly scaled(const T& s) const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = c * s;
        r.trim();
        return r;
    }

    UniPoly pow(unsigned exp) const {
        UniPoly r(1);
        UniPoly b = *this;
        while (exp > 0) {
            if (exp & 1) r *= b;
            b *= b;
            exp >>= 1;
        }
        return r;
    }

    /// Horner evaluation; S must absorb T by multiplication (e.g. evaluating
    /// a rational polynomial at a quadratic-extension point).
    template <class S = T>
    S eval(const S& x) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
        return acc;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == T(0)) continue;
            if (!first) os << " + ";
            os << "(" << c_[i] << ")";
            if (i >= 1) os << "*" << var;
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

struct TwoRational {
    Rational first;  // smaller root
    Rational second; // larger root (equal when the discriminant is zero)
};
struct OneRational {
    Rational root;
};
struct ConjugatePair {
    QuadExtElem root; // the branch with positive irrational part; the other root is conj(root)
};
struct NoRoot {};

using RootSet = std::variant<TwoRational, OneRational, ConjugatePair, NoRoot>;

/// Exact roots of a polynomial of degree <= 2. Quadratics with a rational
/// square discriminant yield TwoRational (sorted ascending); otherwise the
/// ConjugatePair root is (-b + sqrt(disc)) / 2a with d = disc kept literal.
RootSet solve_quadratic(const UniPoly<Rational>& p);

/// All rational roots, each listed once, sorted ascending. Clears
/// denominators, strips the power of the variable, then uses closed forms
/// for degree <= 2 and divisor candidates of the end coefficients beyond.
std::vector<Rational> rational_roots(const UniPoly<Rational>& p);

} // namespace quartic

#endif // QUARTIC_UNIPOLY_HPP
