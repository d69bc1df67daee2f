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

#ifndef QUARTIC_SEARCH_HPP
#define QUARTIC_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quartic/curve.hpp"
#include "quartic/geometry.hpp"

namespace quartic {

struct CellRange {
    long lo = 0, hi = 0; // inclusive

    long size() const { return hi - lo + 1; }
};

struct SearchConfig {
    CellRange m, n, s, t;
    bool emit_trivial = false;
    unsigned workers = 1;
    std::string checkpoint_path; // empty disables checkpointing
    bool resume = false;
};

struct Cell {
    long m = 0, n = 0, s = 0, t = 0;
};

/// Cells where the family collapses: s = +-t, s*t = 0, or m = n = 0.
bool cell_skipped(const Cell& c);

struct SolutionRecord {
    QuarticPoint solution; // canonical form
    Cell cell;
    enum class Branch { step1, step2 } branch = Branch::step1;
    std::variant<Rational, QuadExtElem> r; // the r-root this solution came through
    Rational g;                            // the fiber root
    std::uint64_t ordinal = 0;             // discovery order, assigned at emission
};

/// Intermediates of the extension-field descent, kept for diagnostics.
struct Step2Trace {
    QuadExtElem r_root;       // chosen conjugate root (positive irrational part)
    ExtCubicPoint conj_point; // (m, n, r_root)
    CubicPoint euler_image;
    QuadExtElem chord_param;  // k with chord point = k*conj_point + euler_image
    ExtCubicPoint chord_point;
    CubicPoint descended;
};

struct CellOutcome {
    enum class Branch { step1, step2, degenerate } branch = Branch::degenerate;
    std::vector<SolutionRecord> records;
    std::optional<Step2Trace> trace;
    std::string diagnostic;
};

/// curve_residual((m, n, r), p) collected as an exact polynomial in r
/// (degree <= 2; lower degrees and the zero polynomial mark degenerate
/// cells — the caller branches on is_zero).
UniPoly<Rational> r_quadratic(const Rational& m, const Rational& n, const CurveParams& p);

/// One cell of the enumeration: dispatch on the r discriminant, produce
/// canonical nontrivial solutions via direct roots (step 1) or conjugate
/// descent through the Euler point (step 2). Never throws on degenerate
/// geometry; such cells come back as Branch::degenerate with a diagnostic.
CellOutcome scan_cell(long m, long n, const CurveParams& p, bool emit_trivial = false);

struct SearchSummary {
    std::uint64_t cells_total = 0;
    std::uint64_t cells_skipped = 0;
    std::uint64_t cells_step1 = 0;
    std::uint64_t cells_step2 = 0;
    std::uint64_t cells_degenerate = 0;
    std::uint64_t solutions = 0;
};

/// Lexicographic scan over (m, n, s, t); deduplicates by canonical point
/// across the whole run and verifies every record before emission. The
/// emit callback is invoked under the collector lock (emission order may
/// vary with the worker count; the emitted set may not).
SearchSummary run_search(const SearchConfig& cfg, const std::function<void(const SolutionRecord&)>& emit);

/// Independent oracle: all canonical nontrivial primitive solutions with
/// max |coordinate| <= bound, by direct enumeration of x^4 + y^4 values
/// with a hash join.
std::vector<QuarticPoint> brute_force_oracle(long bound);

} // namespace quartic

#endif // QUARTIC_SEARCH_HPP
