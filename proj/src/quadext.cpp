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

#include "quartic/quadext.hpp"

#include <ostream>

namespace quartic {

std::string QuadExtElem::str() const {
    if (is_rational()) return re_.str();
    std::string s = re_.is_zero() ? "" : re_.str() + " + ";
    return s + "(" + im_.str() + ")*sqrt(" + d_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadExtElem& e) { return os << e.str(); }

QuadExtElem pow(const QuadExtElem& base, unsigned long exp) {
    QuadExtElem r(1);
    QuadExtElem b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

} // namespace quartic
