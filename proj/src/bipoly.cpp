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

#include "quartic/bipoly.hpp"

#include <sstream>

namespace quartic {

Rational BiPoly::eval(const Rational& s, const Rational& t) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * quartic::pow(s, e.first) * quartic::pow(t, e.second);
    return acc;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c << ")";
        if (e.first > 0) os << "*s^" << e.first;
        if (e.second > 0) os << "*t^" << e.second;
        first = false;
    }
    return os.str();
}

} // namespace quartic
