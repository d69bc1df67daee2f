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

#ifndef QUARTIC_SURFACE_HPP
#define QUARTIC_SURFACE_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "quartic/rational.hpp"

namespace quartic {

/// A construction that cannot proceed but that callers are expected to
/// branch on (trivial orbits, vanishing denominators, collapsed cells).
class degenerate_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Rational quadruple (x, y, z, w), a solution candidate for
/// x^4 + y^4 = z^4 + w^4.
struct QuarticPoint {
    Rational x, y, z, w;

    friend bool operator==(const QuarticPoint& a, const QuarticPoint& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z && a.w == b.w;
    }
    friend bool operator!=(const QuarticPoint& a, const QuarticPoint& b) { return !(a == b); }
    friend bool operator<(const QuarticPoint& a, const QuarticPoint& b);

    std::string str() const;

    /// "x^4 + y^4 = z^4 + w^4" with the coordinates substituted.
    std::string equation() const;
};

/// Six-tuple (a, b, x, y, z, w) for the pair of degree-3 equations
///   a*x^2 - b*y^2 = a*z^2 + b*w^2
///   b*x^2 + a*y^2 = -b*z^2 + a*w^2
struct SystemPoint {
    Rational a, b, x, y, z, w;
};

/// x^4 + y^4 - z^4 - w^4, exactly.
Rational quartic_residual(const QuarticPoint& p);

bool is_solution(const QuarticPoint& p);

/// Left-minus-right residuals of the two system equations.
std::pair<Rational, Rational> system_residuals(const SystemPoint& p);

/// Normalization b = 1, a = (x^2 + z^2) / (w^2 - y^2) of a quartic solution
/// into a verified SystemPoint. Requires w^2 != y^2; the excluded points are
/// exactly the trivial orbit (see is_trivial).
std::pair<Rational, Rational> ab_from_quartic(const QuarticPoint& p);

/// True iff the solution lies in the symmetry orbit of (m,n,m,n) or
/// (s,t,-t,s): per-coordinate sign flips, x<->y, z<->w, side swap, scaling.
bool is_trivial(const QuarticPoint& p);

/// The primitive-integer orbit representative: all coordinates nonnegative,
/// |x| <= |y|, |z| <= |w|, and (x,y) <= (z,w) lexicographically. Idempotent.
QuarticPoint canonicalize(const QuarticPoint& p);

} // namespace quartic

#endif // QUARTIC_SURFACE_HPP
