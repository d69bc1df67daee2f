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

#ifndef QUARTIC_GEOMETRY_HPP
#define QUARTIC_GEOMETRY_HPP

#include "quartic/curve.hpp"

namespace quartic {

/// Coefficients of curve_residual(g*base + dir, p) as a polynomial in the
/// line parameter g (degree <= 3). Computed by exact evaluation at
/// g in {0, 1, -1, 2} and solving the induced linear system; the leading
/// coefficient equals curve_residual(base, p) and the constant equals
/// curve_residual(dir, p).
template <class S>
UniPoly<S> line_poly(const CubicPointT<S>& base, const CubicPointT<S>& dir, const CurveParams& p) {
    if (proportional(base, dir)) throw std::invalid_argument("line_poly: proportional points");

    auto at = [&](int g) { return curve_residual(scale_add(S(g), base, dir), p); };
    const S f0 = at(0), f1 = at(1), fm1 = at(-1), f2 = at(2);

    const S c0 = f0;
    const S c2 = (f1 + fm1) / S(2) - c0;
    const S odd = (f1 - fm1) / S(2); // c1 + c3
    const S c3 = (f2 - c0 - S(4) * c2 - S(2) * odd) / S(6);
    const S c1 = odd - c3;
    return UniPoly<S>{c0, c1, c2, c3};
}

template <class S>
struct ChordResult {
    CubicPointT<S> point;
    S g; // line parameter of the third intersection (g*p1 + p2)
};

/// Third intersection of the chord through two on-curve points, as
/// (-a1/a2) * p1 + p2 from the reduced line polynomial g(a2 g + a1).
/// When a2 = 0 the chord is tangent at p1 and p1 is returned.
template <class S>
ChordResult<S> chord_third_ex(const CubicPointT<S>& p1, const CubicPointT<S>& p2, const CurveParams& p) {
    if (proportional(p1, p2)) throw std::invalid_argument("chord_third: proportional points");
    if (!(curve_residual(p1, p) == S(0)) || !(curve_residual(p2, p) == S(0)))
        throw std::invalid_argument("chord_third: both points must lie on the curve");

    UniPoly<S> poly = line_poly(p1, p2, p);
    if (poly.is_zero())
        throw degenerate_error("chord_third: line contained in the curve");
    const S a2 = poly.coeff(2), a1 = poly.coeff(1);
    if (a2 == S(0)) return {p1, S(0)};
    const S g = -(a1 / a2);
    return {scale_add(g, p1, p2), g};
}

template <class S>
CubicPointT<S> chord_third(const CubicPointT<S>& p1, const CubicPointT<S>& p2, const CurveParams& p) {
    return chord_third_ex(p1, p2, p).point;
}

struct TangentDouble {
    CubicPoint point;
    Rational k;         // tuned free coordinate of the direction
    Rational g;         // line parameter of the third intersection
    CubicPoint dir;     // the tuned direction (k substituted)
    int template_index; // which direction template succeeded
};

/// Third intersection of the tangent line at an on-curve rational point,
/// built by choosing the direction's free coordinate k so that the g^2
/// coefficient of the line polynomial vanishes. Direction templates
/// (k,1,2), (k,1,0), (k,0,1), (0,k,1) are tried in order.
TangentDouble tangent_double_ex(const CubicPoint& c, const CurveParams& p);

CubicPoint tangent_double(const CubicPoint& c, const CurveParams& p);

/// Real and irrational parts of an extension point, as rational points.
CubicPoint ext_re(const ExtCubicPoint& e);
CubicPoint ext_im(const ExtCubicPoint& e);

/// The shared discriminant of the genuinely irrational coordinates.
Rational ext_discriminant(const ExtCubicPoint& e);

ExtCubicPoint ext_conj(const ExtCubicPoint& e);

ExtCubicPoint to_ext(const CubicPoint& c);

/// Rational third intersection of the chord through e and conj(e). The line
/// is parametrized rationally as u*Im(e) + Re(e), under which the residual
/// cubic factors exactly as c3 (u^2 - d)(u - u3); both certificates
/// c1 = -d*c3 and c0 = -d*c2 are checked before returning u3*Im(e) + Re(e).
CubicPoint conj_descend(const ExtCubicPoint& e, const CurveParams& p);

} // namespace quartic

#endif // QUARTIC_GEOMETRY_HPP
