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

#include "doctest.h"

#include "quartic/bipoly.hpp"
#include "quartic/families.hpp"
#include "test_util.hpp"

using namespace quartic;

namespace {
BiPoly rand_bipoly(int max_deg = 3, int terms = 5) {
    BiPoly p;
    for (int i = 0; i < terms; ++i)
        p.add_term(testutil::rand_int(0, max_deg), testutil::rand_int(0, max_deg),
                   testutil::rand_rational(-5, 5, 3));
    return p;
}
} // namespace

TEST_CASE("binomial square") {
    BiPoly s = BiPoly::var_s(), t = BiPoly::var_t();
    BiPoly sq = (s + t).pow(2);
    BiPoly expect;
    expect.set(2, 0, Rational(1));
    expect.set(1, 1, Rational(2));
    expect.set(0, 2, Rational(1));
    CHECK(sq == expect);
}

TEST_CASE("no stored zero coefficients") {
    BiPoly p = rand_bipoly();
    BiPoly z = p - p;
    CHECK(z.is_zero());
    CHECK(z.term_count() == 0);
    p.set(1, 1, Rational(5));
    p.add_term(1, 1, Rational(-5));
    CHECK(p.coeff(1, 1) == Rational(0));
    for (const auto& [e, c] : p.terms()) CHECK_FALSE(c.is_zero());
}

TEST_CASE("evaluating the classical degree-7 x form") {
    // s(s^6 + s^4 t^2 - 2 s^2 t^4 - 3 s t^5 + t^6) at (2,1)
    BiPoly x = euler_family().x;
    CHECK(x.eval(Rational(2), Rational(1)) == Rational(134));
    CHECK(x.degree() == 7);
}

TEST_CASE("ring axioms and evaluation homomorphism") {
    for (int i = 0; i < 30; ++i) {
        BiPoly a = rand_bipoly(), b = rand_bipoly(), c = rand_bipoly();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        Rational s = testutil::rand_rational(-4, 4, 3), t = testutil::rand_rational(-4, 4, 3);
        CHECK((a * b).eval(s, t) == a.eval(s, t) * b.eval(s, t));
        CHECK((a + b).eval(s, t) == a.eval(s, t) + b.eval(s, t));
    }
}

TEST_CASE("fourth powers of the degree-19 forms stay small and homogeneous") {
    BiPoly x = euler_pair_family().x;
    CHECK(x.degree() == 19);
    BiPoly x4 = x.pow(4);
    CHECK(x4.degree() == 76);
    for (const auto& [e, c] : x4.terms()) CHECK(e.first + e.second == 76u);
}
