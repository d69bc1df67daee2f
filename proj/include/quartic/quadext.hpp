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

#ifndef QUARTIC_QUADEXT_HPP
#define QUARTIC_QUADEXT_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "quartic/rational.hpp"

namespace quartic {

/// Element re + im*sqrt(d) of a quadratic extension of the rationals.
///
/// d is the literal (non-square) discriminant of the extension; two elements
/// with nonzero irrational part can only be combined when their d agree.
/// Elements with im = 0 are plain rationals and combine with any extension;
/// they are normalized to d = 0.
class QuadExtElem {
  public:
    QuadExtElem() = default;
    QuadExtElem(int n) : re_(n) {}
    QuadExtElem(const Rational& r) : re_(r) {}
    QuadExtElem(Rational re, Rational im, Rational d)
        : re_(std::move(re)), im_(std::move(im)), d_(std::move(d)) {
        if (im_.is_zero()) {
            d_ = Rational(0);
        } else {
            if (d_.is_zero()) throw std::domain_error("QuadExtElem: zero discriminant");
            if (rat_is_square(d_)) throw std::domain_error("QuadExtElem: discriminant is a rational square");
        }
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    const Rational& d() const { return d_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_rational() const { return im_.is_zero(); }

    /// The rational value of a purely rational element.
    Rational as_rational() const {
        if (!is_rational()) throw std::domain_error("QuadExtElem: not a rational value");
        return re_;
    }

    QuadExtElem conj() const { return is_rational() ? *this : QuadExtElem(re_, -im_, d_); }

    /// e * conj(e) = re^2 - d*im^2, always rational.
    Rational norm() const { return re_ * re_ - d_ * im_ * im_; }

    QuadExtElem operator-() const {
        QuadExtElem r;
        r.re_ = -re_;
        r.im_ = -im_;
        r.d_ = d_;
        return r;
    }

    friend QuadExtElem operator+(const QuadExtElem& a, const QuadExtElem& b) {
        Rational d = merged_d(a, b);
        return make(a.re_ + b.re_, a.im_ + b.im_, d);
    }
    friend QuadExtElem operator-(const QuadExtElem& a, const QuadExtElem& b) {
        Rational d = merged_d(a, b);
        return make(a.re_ - b.re_, a.im_ - b.im_, d);
    }
    friend QuadExtElem operator*(const QuadExtElem& a, const QuadExtElem& b) {
        Rational d = merged_d(a, b);
        return make(a.re_ * b.re_ + d * a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_, d);
    }
    friend QuadExtElem operator/(const QuadExtElem& a, const QuadExtElem& b) { return a * b.inverse(); }

    QuadExtElem& operator+=(const QuadExtElem& b) { *this = *this + b; return *this; }
    QuadExtElem& operator-=(const QuadExtElem& b) { *this = *this - b; return *this; }
    QuadExtElem& operator*=(const QuadExtElem& b) { *this = *this * b; return *this; }
    QuadExtElem& operator/=(const QuadExtElem& b) { *this = *this / b; return *this; }

    QuadExtElem inverse() const {
        if (is_zero()) throw std::domain_error("QuadExtElem: inversion of zero");
        Rational n = norm();
        if (n.is_zero()) throw std::domain_error("QuadExtElem: zero norm");
        return make(re_ / n, -(im_ / n), d_);
    }

    friend bool operator==(const QuadExtElem& a, const QuadExtElem& b) {
        return a.re_ == b.re_ && a.im_ == b.im_ && a.d_ == b.d_;
    }
    friend bool operator!=(const QuadExtElem& a, const QuadExtElem& b) { return !(a == b); }

    /// Re-expresses the element over sqrt(new_d); exact when d/new_d is the
    /// square of a rational (the positive branch of the root is taken).
    std::optional<QuadExtElem> rebased(const Rational& new_d) const {
        if (is_rational()) return *this;
        auto f = rat_is_square(d_ / new_d);
        if (!f) return std::nullopt;
        return QuadExtElem(re_, im_ * *f, new_d);
    }

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const QuadExtElem& e);

  private:
    static QuadExtElem make(Rational re, Rational im, Rational d) {
        QuadExtElem r;
        r.re_ = std::move(re);
        r.im_ = std::move(im);
        r.d_ = r.im_.is_zero() ? Rational(0) : std::move(d);
        return r;
    }

    static Rational merged_d(const QuadExtElem& a, const QuadExtElem& b) {
        if (a.is_rational()) return b.d_;
        if (b.is_rational()) return a.d_;
        if (a.d_ != b.d_) throw std::domain_error("QuadExtElem: mismatched discriminants");
        return a.d_;
    }

    Rational re_{0};
    Rational im_{0};
    Rational d_{0};
};

QuadExtElem pow(const QuadExtElem& base, unsigned long exp);

} // namespace quartic

#endif // QUARTIC_QUADEXT_HPP
