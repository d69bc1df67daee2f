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

#ifndef QUARTIC_JSON_IO_HPP
#define QUARTIC_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "quartic/bipoly.hpp"
#include "quartic/curve.hpp"
#include "quartic/families.hpp"
#include "quartic/quadext.hpp"
#include "quartic/search.hpp"
#include "quartic/surface.hpp"

namespace quartic {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings (the "/q" omitted when q = 1).
inline void to_json(Json& j, const Rational& q) { j = q.str(); }
inline void from_json(const Json& j, Rational& q) { q = Rational::parse(j.get<std::string>()); }

inline void to_json(Json& j, const QuadExtElem& e) {
    j = Json{{"re", e.re()}, {"im", e.im()}, {"d", e.d()}};
}
inline void from_json(const Json& j, QuadExtElem& e) {
    e = QuadExtElem(j.at("re").get<Rational>(), j.at("im").get<Rational>(), j.at("d").get<Rational>());
}

inline void to_json(Json& j, const QuarticPoint& p) {
    j = Json{{"x", p.x}, {"y", p.y}, {"z", p.z}, {"w", p.w}};
}
inline void from_json(const Json& j, QuarticPoint& p) {
    p = {j.at("x").get<Rational>(), j.at("y").get<Rational>(), j.at("z").get<Rational>(),
         j.at("w").get<Rational>()};
}

inline void to_json(Json& j, const CubicPoint& c) { j = Json{{"m", c.m}, {"n", c.n}, {"r", c.r}}; }
inline void from_json(const Json& j, CubicPoint& c) {
    c = {j.at("m").get<Rational>(), j.at("n").get<Rational>(), j.at("r").get<Rational>()};
}

inline void to_json(Json& j, const ExtCubicPoint& c) { j = Json{{"m", c.m}, {"n", c.n}, {"r", c.r}}; }

inline void to_json(Json& j, const CurveParams& p) { j = Json{{"s", p.s}, {"t", p.t}}; }
inline void from_json(const Json& j, CurveParams& p) {
    p = {j.at("s").get<Rational>(), j.at("t").get<Rational>()};
}

// UniPoly: coefficient array, index = degree.
inline void to_json(Json& j, const UniPoly<Rational>& p) {
    j = Json::array();
    for (const Rational& c : p.coeffs()) j.push_back(c);
}
inline void from_json(const Json& j, UniPoly<Rational>& p) {
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(v.get<Rational>());
    p = UniPoly<Rational>(std::move(c));
}

// BiPoly: coefficient map keyed "degS,degT".
inline void to_json(Json& j, const BiPoly& p) {
    j = Json::object();
    for (const auto& [e, c] : p.terms())
        j[std::to_string(e.first) + "," + std::to_string(e.second)] = c;
}
inline void from_json(const Json& j, BiPoly& p) {
    p = BiPoly();
    for (const auto& [key, val] : j.items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("BiPoly: key '" + key + "' is not 'degS,degT'");
        unsigned ds = std::stoul(key.substr(0, comma));
        unsigned dt = std::stoul(key.substr(comma + 1));
        p.add_term(ds, dt, val.get<Rational>());
    }
}

inline void to_json(Json& j, const ParametricFamily& f) {
    j = Json{{"x", f.x}, {"y", f.y}, {"z", f.z}, {"w", f.w}};
}
inline void from_json(const Json& j, ParametricFamily& f) {
    f.x = j.at("x").get<BiPoly>();
    f.y = j.at("y").get<BiPoly>();
    f.z = j.at("z").get<BiPoly>();
    f.w = j.at("w").get<BiPoly>();
    f.name = j.value("name", "");
}

inline void to_json(Json& j, const SolutionRecord& rec) {
    j = Json{{"solution", rec.solution},
             {"equation", rec.solution.equation()},
             {"cell", Json{{"m", rec.cell.m}, {"n", rec.cell.n}, {"s", rec.cell.s}, {"t", rec.cell.t}}},
             {"branch", rec.branch == SolutionRecord::Branch::step1 ? "step1" : "step2"},
             {"g", rec.g},
             {"ordinal", rec.ordinal}};
    if (const auto* rr = std::get_if<Rational>(&rec.r))
        j["r"] = *rr;
    else
        j["r"] = std::get<QuadExtElem>(rec.r);
}

inline void to_json(Json& j, const SearchSummary& s) {
    j = Json{{"type", "summary"},
             {"cells_total", s.cells_total},
             {"cells_skipped", s.cells_skipped},
             {"cells_step1", s.cells_step1},
             {"cells_step2", s.cells_step2},
             {"cells_degenerate", s.cells_degenerate},
             {"solutions", s.solutions}};
}

} // namespace quartic

#endif // QUARTIC_JSON_IO_HPP
