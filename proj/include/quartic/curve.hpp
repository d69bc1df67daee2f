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

#ifndef QUARTIC_CURVE_HPP
#define QUARTIC_CURVE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "quartic/bipoly.hpp"
#include "quartic/quadext.hpp"
#include "quartic/surface.hpp"
#include "quartic/unipoly.hpp"

namespace quartic {

/// Parameters (s, t) selecting one member of the two-parameter family of
/// plane cubics. Most constructions additionally need s != +-t (and the
/// Euler point needs s*t != 0); the operations check what they use.
struct CurveParams {
    Rational s, t;

    bool degenerate() const { return s == t || s == -t; }

    friend bool operator==(const CurveParams& a, const CurveParams& b) { return a.s == b.s && a.t == b.t; }
};

/// Projective point (m, n, r) with coordinates in a scalar field S
/// (Rational or QuadExtElem).
template <class S>
struct CubicPointT {
    S m, n, r;

    friend bool operator==(const CubicPointT& a, const CubicPointT& b) {
        return a.m == b.m && a.n == b.n && a.r == b.r;
    }
    friend bool operator!=(const CubicPointT& a, const CubicPointT& b) { return !(a == b); }
};

using CubicPoint = CubicPointT<Rational>;
using ExtCubicPoint = CubicPointT<QuadExtElem>;

template <class S>
CubicPointT<S> scale_add(const S& g, const CubicPointT<S>& base, const CubicPointT<S>& dir) {
    return {g * base.m + dir.m, g * base.n + dir.n, g * base.r + dir.r};
}

template <class S>
CubicPointT<S> scale_point(const S& c, const CubicPointT<S>& p) {
    return {c * p.m, c * p.n, c * p.r};
}

template <class S>
bool proportional(const CubicPointT<S>& a, const CubicPointT<S>& b) {
    return a.m * b.n - a.n * b.m == S(0) && a.m * b.r - a.r * b.m == S(0) &&
           a.n * b.r - a.r * b.n == S(0);
}

/// The defining polynomial of the family, LHS - RHS of
///   A * 2(s+t)(m^2 - nrs + nrt) = B * 2(s-t)(n^2 - mrs - mrt)
/// where A and B are the two linear-in-(m,n,r) forms below. Works over any
/// commutative ring T, so the same expression serves exact evaluation over
/// Q and its quadratic extensions, collection as a polynomial in r or in a
/// line parameter, and fully symbolic identities in (s, t).
template <class T>
T cubic_family_residual(const T& m, const T& n, const T& r, const T& s, const T& t) {
    const T s2 = s * s, t2 = t * t;
    const T sum2 = s2 + t2, diff2 = s2 - t2;
    const T A = T(2) * m * sum2 - T(2) * n * diff2 + r * (s - t) * diff2;
    const T B = T(2) * n * sum2 - T(2) * m * diff2 + r * (s + t) * diff2;
    const T F1 = m * m - n * r * (s - t);
    const T F2 = n * n - m * r * (s + t);
    return A * (T(2) * (s + t)) * F1 - B * (T(2) * (s - t)) * F2;
}

template <class S>
S curve_residual(const CubicPointT<S>& c, const CurveParams& p) {
    return cubic_family_residual<S>(c.m, c.n, c.r, S(p.s), S(p.t));
}

/// g from the first system equation: A / (2(s-t)(n^2 - mrs - mrt)).
/// Absent when the denominator vanishes (base locus / degenerate point).
std::optional<Rational> g_from_first(const CubicPoint& c, const CurveParams& p);

/// g from the second system equation: B / (2(s+t)(m^2 - nrs + nrt)).
std::optional<Rational> g_from_second(const CubicPoint& c, const CurveParams& p);

/// The line x = mg+s, y = ng+t, z = mg-t, w = ng+s. Produces a verified
/// solution exactly when g is a root of g_polynomial(m, n, p).
QuarticPoint lift(const CubicPoint& c, const CurveParams& p, const Rational& g);

/// Exact expansion of (mg+s)^4 + (ng+t)^4 - (mg-t)^4 - (ng+s)^4 in g. The
/// g^4 and constant coefficients vanish identically, leaving
///   g * [ 4(m^3(s+t) - n^3(s-t)) g^2 + 6(m^2-n^2)(s^2-t^2) g
///         + 4((m-n)s^3 + (m+n)t^3) ].
UniPoly<Rational> g_polynomial(const Rational& m, const Rational& n, const CurveParams& p);

struct FiberSolution {
    Rational g;
    QuarticPoint point; // raw lift, not canonicalized
};

/// All rational nonzero roots of the fiber polynomial paired with their
/// lifts, sorted by g. Throws degenerate_error when the fiber polynomial is
/// identically zero.
std::vector<FiberSolution> fiber_solutions(const CubicPoint& c, const CurveParams& p);

/// The g = 1 image of a verified non-trivial solution:
///   m = (x-w+y+z)/2,  n = (y+z-x+w)/2,  s = x-m,  t = y-n,
///   r = (x^2+z^2)/(w^2-y^2) - (s^2+t^2)/(s^2-t^2).
/// Guarantees curve membership and lift(image, 1) = q.
std::pair<CubicPoint, CurveParams> image_of_quartic(const QuarticPoint& q);

/// The rational point lying on every family member:
///   m = -(s^5 - s^3 t^2 - s^2 t^3 + t^5) / (4 s^2 t^2),
///   n = -(s^5 - s^3 t^2 + s^2 t^3 - t^5) / (4 s^2 t^2),  r = 1.
CubicPoint euler_point(const CurveParams& p);

/// The classical degree-7 parametric solution; total in (s, t).
QuarticPoint euler_solution(const CurveParams& p);

/// The second solution on the fiber of the (canonicalized) input: maps the
/// canonical form to its cubic image and lifts the other nonzero fiber
/// root. Returns the canonical form of that solution.
QuarticPoint pair_of(const QuarticPoint& q);

/// xf^4 + yf^4 - zf^4 - wf^4 as an exact bivariate polynomial; the zero
/// polynomial certifies the family as an identity.
BiPoly verify_parametric_family(const BiPoly& xf, const BiPoly& yf, const BiPoly& zf, const BiPoly& wf);

} // namespace quartic

#endif // QUARTIC_CURVE_HPP
