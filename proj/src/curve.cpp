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

#include "quartic/curve.hpp"

#include <algorithm>

namespace quartic {

namespace {

struct FamilyForms {
    Rational A, B, F1, F2;
};

FamilyForms family_forms(const CubicPoint& c, const CurveParams& p) {
    const Rational s2 = p.s * p.s, t2 = p.t * p.t;
    const Rational sum2 = s2 + t2, diff2 = s2 - t2;
    FamilyForms f;
    f.A = Rational(2) * c.m * sum2 - Rational(2) * c.n * diff2 + c.r * (p.s - p.t) * diff2;
    f.B = Rational(2) * c.n * sum2 - Rational(2) * c.m * diff2 + c.r * (p.s + p.t) * diff2;
    f.F1 = c.m * c.m - c.n * c.r * (p.s - p.t);
    f.F2 = c.n * c.n - c.m * c.r * (p.s + p.t);
    return f;
}

} // namespace

std::optional<Rational> g_from_first(const CubicPoint& c, const CurveParams& p) {
    FamilyForms f = family_forms(c, p);
    Rational den = Rational(2) * (p.s - p.t) * f.F2;
    if (den.is_zero()) return std::nullopt;
    return f.A / den;
}

std::optional<Rational> g_from_second(const CubicPoint& c, const CurveParams& p) {
    FamilyForms f = family_forms(c, p);
    Rational den = Rational(2) * (p.s + p.t) * f.F1;
    if (den.is_zero()) return std::nullopt;
    return f.B / den;
}

QuarticPoint lift(const CubicPoint& c, const CurveParams& p, const Rational& g) {
    return {c.m * g + p.s, c.n * g + p.t, c.m * g - p.t, c.n * g + p.s};
}

UniPoly<Rational> g_polynomial(const Rational& m, const Rational& n, const CurveParams& p) {
    const Rational s = p.s, t = p.t;
    const Rational c3 = Rational(4) * (m * m * m * (s + t) - n * n * n * (s - t));
    const Rational c2 = Rational(6) * (m * m - n * n) * (s * s - t * t);
    const Rational c1 = Rational(4) * ((m - n) * s * s * s + (m + n) * t * t * t);
    return UniPoly<Rational>{Rational(0), c1, c2, c3};
}

std::vector<FiberSolution> fiber_solutions(const CubicPoint& c, const CurveParams& p) {
    UniPoly<Rational> poly = g_polynomial(c.m, c.n, p);
    if (poly.is_zero())
        throw degenerate_error("fiber_solutions: fiber polynomial is identically zero");
    std::vector<FiberSolution> out;
    for (const Rational& g : rational_roots(poly)) {
        if (g.is_zero()) continue;
        QuarticPoint q = lift(c, p, g);
        if (!is_solution(q)) throw std::logic_error("fiber_solutions: lift failed residual check");
        out.push_back({g, q});
    }
    return out;
}

std::pair<CubicPoint, CurveParams> image_of_quartic(const QuarticPoint& q) {
    if (!is_solution(q)) throw std::invalid_argument("image_of_quartic: not a solution");
    if (is_trivial(q))
        throw degenerate_error("image_of_quartic: trivial-orbit point (see is_trivial)");

    const Rational two(2);
    Rational m = (q.x - q.w + q.y + q.z) / two;
    Rational n = (q.y + q.z - q.x + q.w) / two;
    CurveParams p{q.x - m, q.y - n};
    if (p.degenerate())
        throw degenerate_error("image_of_quartic: derived parameters satisfy s = +-t");

    Rational r = (q.x * q.x + q.z * q.z) / (q.w * q.w - q.y * q.y) -
                 (p.s * p.s + p.t * p.t) / (p.s * p.s - p.t * p.t);
    CubicPoint c{m, n, r};
    if (!curve_residual(c, p).is_zero() || lift(c, p, Rational(1)) != q)
        throw std::logic_error("image_of_quartic: internal consistency check failed");
    return {c, p};
}

CubicPoint euler_point(const CurveParams& p) {
    if (p.s.is_zero() || p.t.is_zero() || p.degenerate())
        throw degenerate_error("euler_point: needs s*t != 0 and s != +-t");
    const Rational s = p.s, t = p.t;
    const Rational s2 = s * s, t2 = t * t, s3 = s2 * s, t3 = t2 * t, s5 = s3 * s2, t5 = t3 * t2;
    const Rational den = Rational(4) * s2 * t2;
    Rational m = -((s5 - s3 * t2 - s2 * t3 + t5) / den);
    Rational n = -((s5 - s3 * t2 + s2 * t3 - t5) / den);
    return {m, n, Rational(1)};
}

QuarticPoint euler_solution(const CurveParams& p) {
    const Rational s = p.s, t = p.t;
    const Rational s2 = s * s, t2 = t * t;
    const Rational s4 = s2 * s2, t4 = t2 * t2;
    const Rational s5 = s4 * s, t5 = t4 * t;
    const Rational s6 = s4 * s2, t6 = t4 * t2;
    Rational x = s * (s6 + s4 * t2 - Rational(2) * s2 * t4 - Rational(3) * s * t5 + t6);
    Rational y = t * (s6 + Rational(3) * s5 * t - Rational(2) * s4 * t2 + s2 * t4 + t6);
    Rational z = -(t * (s6 - Rational(3) * s5 * t - Rational(2) * s4 * t2 + s2 * t4 + t6));
    Rational w = s * (s6 + s4 * t2 - Rational(2) * s2 * t4 + Rational(3) * s * t5 + t6);
    return {x, y, z, w};
}

QuarticPoint pair_of(const QuarticPoint& q) {
    QuarticPoint canon = canonicalize(q);
    if (is_trivial(canon)) throw degenerate_error("pair_of: trivial-orbit point has no pair");

    auto [c, p] = image_of_quartic(canon);
    std::vector<FiberSolution> fiber = fiber_solutions(c, p);
    if (fiber.size() < 2)
        throw degenerate_error("pair_of: fiber has no second rational nonzero root");
    for (const FiberSolution& fs : fiber) {
        QuarticPoint cand = canonicalize(fs.point);
        if (cand != canon) return cand;
    }
    // Both nonzero roots land in the input's orbit: the pair is the point itself.
    return canon;
}

BiPoly verify_parametric_family(const BiPoly& xf, const BiPoly& yf, const BiPoly& zf, const BiPoly& wf) {
    return xf.pow(4) + yf.pow(4) - zf.pow(4) - wf.pow(4);
}

} // namespace quartic
