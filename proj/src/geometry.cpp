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

#include "quartic/geometry.hpp"

#include <array>

namespace quartic {

TangentDouble tangent_double_ex(const CubicPoint& c, const CurveParams& p) {
    if (!curve_residual(c, p).is_zero())
        throw std::invalid_argument("tangent_double: point is not on the curve");

    struct Template {
        CubicPoint fixed;
        CubicPoint free; // multiplied by k
    };
    static const std::array<Template, 4> templates{{
        {{Rational(0), Rational(1), Rational(2)}, {Rational(1), Rational(0), Rational(0)}}, // (k,1,2)
        {{Rational(0), Rational(1), Rational(0)}, {Rational(1), Rational(0), Rational(0)}}, // (k,1,0)
        {{Rational(0), Rational(0), Rational(1)}, {Rational(1), Rational(0), Rational(0)}}, // (k,0,1)
        {{Rational(0), Rational(0), Rational(1)}, {Rational(0), Rational(1), Rational(0)}}, // (0,k,1)
    }};

    for (int i = 0; i < static_cast<int>(templates.size()); ++i) {
        const auto& tpl = templates[i];
        auto dir_at = [&](const Rational& k) {
            return CubicPoint{tpl.fixed.m + k * tpl.free.m, tpl.fixed.n + k * tpl.free.n,
                              tpl.fixed.r + k * tpl.free.r};
        };

        // The g^2 coefficient is linear in k; sample at k = 0 and k = 1.
        CubicPoint d0 = dir_at(Rational(0));
        CubicPoint d1 = dir_at(Rational(1));
        if (proportional(c, d0) || proportional(c, d1)) continue;
        Rational alpha = line_poly(c, d0, p).coeff(2);
        Rational beta = line_poly(c, d1, p).coeff(2) - alpha;
        if (beta.is_zero()) continue;

        Rational k = -(alpha / beta);
        CubicPoint dir = dir_at(k);
        if (proportional(c, dir)) continue;
        UniPoly<Rational> poly = line_poly(c, dir, p);
        if (!poly.coeff(3).is_zero() || !poly.coeff(2).is_zero())
            throw std::logic_error("tangent_double: tuned line polynomial is not linear");
        Rational a1 = poly.coeff(1);
        if (a1.is_zero()) continue;
        Rational g = -(poly.coeff(0) / a1);

        CubicPoint doubled = scale_add(g, c, dir);
        if (!curve_residual(doubled, p).is_zero())
            throw std::logic_error("tangent_double: result fails the curve residual");
        return {doubled, k, g, dir, i};
    }
    throw degenerate_error("tangent_double: all direction templates degenerate");
}

CubicPoint tangent_double(const CubicPoint& c, const CurveParams& p) {
    return tangent_double_ex(c, p).point;
}

CubicPoint ext_re(const ExtCubicPoint& e) { return {e.m.re(), e.n.re(), e.r.re()}; }

CubicPoint ext_im(const ExtCubicPoint& e) { return {e.m.im(), e.n.im(), e.r.im()}; }

Rational ext_discriminant(const ExtCubicPoint& e) {
    Rational d(0);
    for (const QuadExtElem* c : {&e.m, &e.n, &e.r}) {
        if (c->is_rational()) continue;
        if (d.is_zero())
            d = c->d();
        else if (d != c->d())
            throw std::domain_error("ExtCubicPoint: coordinates in different extensions");
    }
    if (d.is_zero()) throw std::domain_error("ExtCubicPoint: point is rational");
    return d;
}

ExtCubicPoint ext_conj(const ExtCubicPoint& e) { return {e.m.conj(), e.n.conj(), e.r.conj()}; }

ExtCubicPoint to_ext(const CubicPoint& c) {
    return {QuadExtElem(c.m), QuadExtElem(c.n), QuadExtElem(c.r)};
}

CubicPoint conj_descend(const ExtCubicPoint& e, const CurveParams& p) {
    const Rational d = ext_discriminant(e); // throws when e is rational
    if (!(curve_residual(e, p) == QuadExtElem(0)))
        throw std::invalid_argument("conj_descend: point is not on the curve");

    const CubicPoint re = ext_re(e);
    const CubicPoint im = ext_im(e);
    if (proportional(im, re))
        throw degenerate_error("conj_descend: point is an extension multiple of a rational point");

    // e and conj(e) sit at u = +-sqrt(d) on the rational line u*Im(e)+Re(e),
    // so the residual cubic must carry the factor u^2 - d.
    UniPoly<Rational> poly = line_poly(im, re, p);
    const Rational c3 = poly.coeff(3), c2 = poly.coeff(2), c1 = poly.coeff(1), c0 = poly.coeff(0);

    if (c3.is_zero()) {
        if (!c1.is_zero() || c2.is_zero() || c0 != -(d * c2))
            throw degenerate_error("conj_descend: chord degenerates off the conjugate pair");
        return im; // third intersection at the u = infinity end of the line
    }
    if (c1 != -(d * c3) || c0 != -(d * c2))
        throw std::logic_error("conj_descend: residual cubic lacks the conjugate factor u^2 - d");

    const Rational u3 = -(c2 / c3);
    CubicPoint out = scale_add(u3, im, re);
    if (!curve_residual(out, p).is_zero())
        throw std::logic_error("conj_descend: descended point fails the curve residual");
    return out;
}

} // namespace quartic
