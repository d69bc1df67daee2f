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

#ifndef QUARTIC_TEST_UTIL_HPP
#define QUARTIC_TEST_UTIL_HPP

#include <random>

#include "quartic/rational.hpp"

namespace quartic::testutil {

inline std::mt19937& rng() {
    static std::mt19937 gen(20260808u);
    return gen;
}

inline long rand_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

/// Random nonzero-denominator rational with small entries.
inline Rational rand_rational(long lo = -20, long hi = 20, long den_max = 12) {
    long num = rand_int(lo, hi);
    long den = rand_int(1, den_max);
    return Rational(num, den);
}

inline Rational rand_nonzero_rational(long lo = -20, long hi = 20, long den_max = 12) {
    Rational q = rand_rational(lo, hi, den_max);
    while (q.is_zero()) q = rand_rational(lo, hi, den_max);
    return q;
}

} // namespace quartic::testutil

#endif // QUARTIC_TEST_UTIL_HPP
