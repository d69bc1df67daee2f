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

#include "quartic/families.hpp"

namespace quartic {

namespace {

struct Term {
    unsigned ds, dt;
    long c;
};

BiPoly build(std::initializer_list<Term> terms) {
    BiPoly p;
    for (const Term& t : terms) p.set(t.ds, t.dt, Rational(t.c));
    return p;
}

} // namespace

ParametricFamily euler_family() {
    ParametricFamily f;
    f.name = "euler";
    // x = s(s^6 + s^4 t^2 - 2 s^2 t^4 - 3 s t^5 + t^6)
    f.x = build({{7, 0, 1}, {5, 2, 1}, {3, 4, -2}, {2, 5, -3}, {1, 6, 1}});
    // y = t(s^6 + 3 s^5 t - 2 s^4 t^2 + s^2 t^4 + t^6)
    f.y = build({{6, 1, 1}, {5, 2, 3}, {4, 3, -2}, {2, 5, 1}, {0, 7, 1}});
    // z = -t(s^6 - 3 s^5 t - 2 s^4 t^2 + s^2 t^4 + t^6)
    f.z = build({{6, 1, -1}, {5, 2, 3}, {4, 3, 2}, {2, 5, -1}, {0, 7, -1}});
    // w = s(s^6 + s^4 t^2 - 2 s^2 t^4 + 3 s t^5 + t^6)
    f.w = build({{7, 0, 1}, {5, 2, 1}, {3, 4, -2}, {2, 5, 3}, {1, 6, 1}});
    return f;
}

ParametricFamily euler_pair_family() {
    ParametricFamily f;
    f.name = "euler-pair";
    f.x = build({{18, 1, -1}, {17, 2, -3}, {16, 3, 15},  {15, 4, -15}, {14, 5, -6},
                 {13, 6, 45}, {12, 7, -82}, {11, 8, 15}, {10, 9, 123}, {9, 10, -171},
                 {8, 11, 159}, {7, 12, -159}, {6, 13, 98}, {5, 14, -30}, {4, 15, 12},
                 {2, 17, -3}, {0, 19, -1}});
    f.y = build({{19, 0, -1}, {18, 1, 1},  {17, 2, 3},   {16, 3, 3},  {15, 4, -21},
                 {14, 5, 12}, {13, 6, 44}, {12, 7, -86}, {11, 8, 93}, {10, 9, -87},
                 {9, 10, -3}, {8, 11, 135}, {7, 12, -142}, {6, 13, 100}, {5, 14, -72},
                 {4, 15, 36}, {3, 16, -12}, {2, 17, 9}, {1, 18, -1}, {0, 19, 1}});
    f.z = build({{18, 1, 1},  {17, 2, -3}, {16, 3, 3},  {15, 4, 21}, {14, 5, -60},
                 {13, 6, 27}, {12, 7, 58}, {11, 8, -75}, {10, 9, 57}, {9, 10, -63},
                 {8, 11, 63}, {7, 12, -87}, {6, 13, 100}, {5, 14, -66}, {4, 15, 36},
                 {3, 16, -18}, {2, 17, 9}, {0, 19, 1}});
    f.w = build({{19, 0, -1}, {18, 1, 1}, {17, 2, 3},   {16, 3, 3},   {15, 4, -21},
                 {14, 5, 6},  {13, 6, 44}, {12, 7, -62}, {11, 8, -15}, {10, 9, 129},
                 {9, 10, -165}, {8, 11, 129}, {7, 12, -88}, {6, 13, 46}, {5, 14, -18},
                 {4, 15, 6}, {3, 16, -12}, {2, 17, 3}, {1, 18, -1}, {0, 19, 1}});
    return f;
}

ParametricFamily double_family() {
    ParametricFamily f;
    f.name = "double";
    f.x = build({{13, 0, 1},  {12, 1, 1},  {11, 2, 2},  {10, 3, -4}, {9, 4, -3},
                 {8, 5, 3},   {7, 6, 7},   {6, 7, 4},   {5, 8, -12}, {4, 9, -6},
                 {3, 10, 5},  {2, 11, -1}, {1, 12, 1},  {0, 13, 1}});
    f.y = build({{13, 0, -1}, {12, 1, 1},  {11, 2, 1},  {10, 3, 5},  {9, 4, 6},
                 {8, 5, -12}, {7, 6, -4},  {6, 7, 7},   {5, 8, -3},  {4, 9, -3},
                 {3, 10, 4},  {2, 11, 2},  {1, 12, -1}, {0, 13, 1}});
    f.z = build({{13, 0, -1}, {12, 1, -1}, {11, 2, 1},  {10, 3, -5}, {9, 4, 6},
                 {8, 5, 12},  {7, 6, -4},  {6, 7, -7},  {5, 8, -3},  {4, 9, 3},
                 {3, 10, 4},  {2, 11, -2}, {1, 12, -1}, {0, 13, -1}});
    f.w = build({{13, 0, 1},  {12, 1, -1}, {11, 2, 2},  {10, 3, 4},  {9, 4, -3},
                 {8, 5, -3},  {7, 6, 7},   {6, 7, -4},  {5, 8, -12}, {4, 9, 6},
                 {3, 10, 5},  {2, 11, 1},  {1, 12, 1},  {0, 13, -1}});
    return f;
}

ParametricFamily double_pair_family() {
    ParametricFamily f;
    f.name = "double-pair";
    f.x = build({{18, 1, 2},  {17, 2, -6}, {16, 3, -3}, {15, 4, -3}, {14, 5, -9},
                 {13, 6, 27}, {12, 7, 32}, {11, 8, -33}, {10, 9, -39}, {9, 10, 27},
                 {8, 11, 21}, {7, 12, -3}, {6, 13, 2},  {5, 14, -6}, {4, 15, -12},
                 {2, 17, 3},  {0, 19, 2}});
    f.y = build({{19, 0, -2}, {17, 2, -3}, {15, 4, 12}, {14, 5, -6}, {13, 6, -2},
                 {12, 7, -3}, {11, 8, -21}, {10, 9, 27}, {9, 10, 39}, {8, 11, -33},
                 {7, 12, -32}, {6, 13, 27}, {5, 14, 9}, {4, 15, -3}, {3, 16, 3},
                 {2, 17, -6}, {1, 18, -2}});
    f.z = build({{19, 0, -2}, {17, 2, -3}, {15, 4, 12}, {14, 5, 6},  {13, 6, -2},
                 {12, 7, 3},  {11, 8, -21}, {10, 9, -27}, {9, 10, 39}, {8, 11, 33},
                 {7, 12, -32}, {6, 13, -27}, {5, 14, 9}, {4, 15, 3}, {3, 16, 3},
                 {2, 17, 6},  {1, 18, -2}});
    f.w = build({{18, 1, -2}, {17, 2, -6}, {16, 3, 3},  {15, 4, -3}, {14, 5, 9},
                 {13, 6, 27}, {12, 7, -32}, {11, 8, -33}, {10, 9, 39}, {9, 10, 27},
                 {8, 11, -21}, {7, 12, -3}, {6, 13, -2}, {5, 14, -6}, {4, 15, 12},
                 {2, 17, -3}, {0, 19, -2}});
    return f;
}

const std::vector<ParametricFamily>& builtin_families() {
    static const std::vector<ParametricFamily> fams{euler_family(), double_family(),
                                                    euler_pair_family(), double_pair_family()};
    return fams;
}

} // namespace quartic
