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

#include "quartic/surface.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace quartic {

bool operator<(const QuarticPoint& a, const QuarticPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    if (a.z != b.z) return a.z < b.z;
    return a.w < b.w;
}

std::string QuarticPoint::str() const {
    return "(" + x.str() + ", " + y.str() + ", " + z.str() + ", " + w.str() + ")";
}

std::string QuarticPoint::equation() const {
    std::ostringstream os;
    os << x << "^4 + " << y << "^4 = " << z << "^4 + " << w << "^4";
    return os.str();
}

Rational quartic_residual(const QuarticPoint& p) {
    return pow(p.x, 4) + pow(p.y, 4) - pow(p.z, 4) - pow(p.w, 4);
}

bool is_solution(const QuarticPoint& p) { return quartic_residual(p).is_zero(); }

std::pair<Rational, Rational> system_residuals(const SystemPoint& p) {
    Rational x2 = p.x * p.x, y2 = p.y * p.y, z2 = p.z * p.z, w2 = p.w * p.w;
    Rational r1 = p.a * x2 - p.b * y2 - p.a * z2 - p.b * w2;
    Rational r2 = p.b * x2 + p.a * y2 + p.b * z2 - p.a * w2;
    return {r1, r2};
}

std::pair<Rational, Rational> ab_from_quartic(const QuarticPoint& p) {
    if (!is_solution(p)) throw std::invalid_argument("ab_from_quartic: not a solution");
    Rational y2 = p.y * p.y, w2 = p.w * p.w;
    if (w2 == y2)
        throw degenerate_error("ab_from_quartic: w^2 = y^2 (trivial orbit, no b = 1 normalization)");
    Rational a = (p.x * p.x + p.z * p.z) / (w2 - y2);
    return {a, Rational(1)};
}

QuarticPoint canonicalize(const QuarticPoint& p) {
    if (!is_solution(p)) throw std::invalid_argument("canonicalize: not a solution");
    if (p.x.is_zero() && p.y.is_zero() && p.z.is_zero() && p.w.is_zero())
        throw std::invalid_argument("canonicalize: zero point");

    std::array<Rational, 4> c{p.x, p.y, p.z, p.w};

    Integer scale(1);
    for (const auto& v : c) scale = lcm(scale, v.den());
    std::array<Integer, 4> n;
    for (int i = 0; i < 4; ++i) {
        n[i] = c[i].num() * (scale / c[i].den());
        n[i] = ::abs(n[i]);
    }
    Integer g(0);
    for (const auto& v : n) g = gcd(g, v);
    for (auto& v : n) v /= g;

    if (n[1] < n[0]) std::swap(n[0], n[1]);
    if (n[3] < n[2]) std::swap(n[2], n[3]);
    if (n[2] < n[0] || (n[2] == n[0] && n[3] < n[1])) {
        std::swap(n[0], n[2]);
        std::swap(n[1], n[3]);
    }
    return {Rational(n[0]), Rational(n[1]), Rational(n[2]), Rational(n[3])};
}

bool is_trivial(const QuarticPoint& p) {
    if (!is_solution(p)) throw std::invalid_argument("is_trivial: not a solution");
    if (p.x.is_zero() && p.y.is_zero() && p.z.is_zero() && p.w.is_zero()) return true;
    QuarticPoint c = canonicalize(p);
    return c.x == c.z && c.y == c.w;
}

} // namespace quartic
