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

#ifndef QUARTIC_FAMILIES_HPP
#define QUARTIC_FAMILIES_HPP

#include <string>
#include <vector>

#include "quartic/bipoly.hpp"
#include "quartic/surface.hpp"

namespace quartic {

/// A parametric solution family: four polynomials in (s, t) intended to
/// satisfy x^4 + y^4 = z^4 + w^4 identically.
struct ParametricFamily {
    std::string name;
    BiPoly x, y, z, w;

    QuarticPoint at(const Rational& s, const Rational& t) const {
        return {x.eval(s, t), y.eval(s, t), z.eval(s, t), w.eval(s, t)};
    }
};

/// Euler's classical degree-7 solution.
ParametricFamily euler_family();

/// The degree-19 family on the same fiber as Euler's solution.
ParametricFamily euler_pair_family();

/// The degree-13 family obtained by tangent-doubling the Euler image.
ParametricFamily double_family();

/// The degree-19 family paired with the doubled one.
ParametricFamily double_pair_family();

const std::vector<ParametricFamily>& builtin_families();

} // namespace quartic

#endif // QUARTIC_FAMILIES_HPP
