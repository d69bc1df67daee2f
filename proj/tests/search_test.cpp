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

#include <cstdio>
#include <set>

#include "quartic/search.hpp"
#include "test_util.hpp"

using namespace quartic;

namespace {

const CurveParams kP49{Rational(-49), Rational(-25)};
const CurveParams kP113{Rational(1), Rational(13)};

std::set<QuarticPoint> collect(const SearchConfig& cfg) {
    std::set<QuarticPoint> out;
    run_search(cfg, [&](const SolutionRecord& rec) { out.insert(rec.solution); });
    return out;
}

SearchConfig small_box() {
    SearchConfig cfg;
    cfg.m = {-2, 2};
    cfg.n = {-2, 2};
    cfg.s = {1, 6};
    cfg.t = {1, 6};
    return cfg;
}

} // namespace

TEST_CASE("r_quadratic matches the (108,183) fixture up to scale") {
    UniPoly<Rational> q = r_quadratic(Rational(108), Rational(183), kP49);
    REQUIRE(q.degree() == 2);
    // proportional to 72339650100 + 8604986400 r - 1419379200 r^2
    Rational scale = q.coeff(0) / Rational(72339650100L);
    CHECK(q.coeff(1) == scale * Rational(8604986400L));
    CHECK(q.coeff(2) == scale * Rational(-1419379200L));

    RootSet rs = solve_quadratic(q);
    auto* two = std::get_if<TwoRational>(&rs);
    REQUIRE(two != nullptr);
    CHECK(two->first == Rational(-2797, 592));
    CHECK(two->second == Rational(3193, 296));
}

TEST_CASE("r_quadratic of the extension cell") {
    UniPoly<Rational> q = r_quadratic(Rational(1), Rational(1), kP113);
    REQUIRE(q.degree() == 2);
    CHECK(q.coeff(1) == Rational(0));
    // proportional to r^2 + 169/7056
    CHECK(q.coeff(0) / q.coeff(2) == Rational(169, 7056));
}

TEST_CASE("r_quadratic degenerate cells") {
    // m = n, s = -t leaves a nonzero constant: no cubic point in the cell
    UniPoly<Rational> constant = r_quadratic(Rational(2), Rational(2), {Rational(5), Rational(-5)});
    CHECK(constant.degree() == 0);
    CellOutcome out = scan_cell(2, 2, {Rational(5), Rational(-5)});
    CHECK(out.branch == CellOutcome::Branch::degenerate);

    // m = n = 0 collapses the residual outright
    CHECK(r_quadratic(Rational(0), Rational(0), {Rational(5), Rational(2)}).is_zero());
    CHECK(r_quadratic(Rational(0), Rational(7), {Rational(3), Rational(3)}).is_zero());
}

TEST_CASE("cell skip rules") {
    CHECK(cell_skipped({1, 1, 3, 3}));
    CHECK(cell_skipped({1, 1, 3, -3}));
    CHECK(cell_skipped({1, 1, 0, 5}));
    CHECK(cell_skipped({1, 1, 5, 0}));
    CHECK(cell_skipped({0, 0, 2, 5}));
    CHECK_FALSE(cell_skipped({0, 1, 2, 5}));
    CHECK_FALSE(cell_skipped({1, 1, 1, 13}));
}

TEST_CASE("scan_cell step 1 on the (108,183) cell") {
    CellOutcome out = scan_cell(108, 183, kP49);
    CHECK(out.branch == CellOutcome::Branch::step1);
    REQUIRE(out.records.size() == 2);

    std::set<QuarticPoint> sols;
    for (const auto& rec : out.records) {
        sols.insert(rec.solution);
        CHECK(quartic_residual(rec.solution) == Rational(0));
        CHECK(rec.branch == SolutionRecord::Branch::step1);
        REQUIRE(std::holds_alternative<Rational>(rec.r));
    }
    CHECK(sols.count(canonicalize({Rational(59), Rational(158), Rational(133), Rational(134)})) == 1);
    CHECK(sols.count(canonicalize(
              {Rational(-134413), Rational(-34813), Rational(111637), Rational(-114613)})) == 1);

    // each record is attributed to the r-root whose g-formula produced it
    for (const auto& rec : out.records) {
        Rational r = std::get<Rational>(rec.r);
        CubicPoint c{Rational(108), Rational(183), r};
        auto g = g_from_first(c, kP49);
        REQUIRE(g.has_value());
        CHECK(*g == rec.g);
    }
}

TEST_CASE("scan_cell step 2 on the extension cell") {
    CellOutcome out = scan_cell(1, 1, kP113);
    CHECK(out.branch == CellOutcome::Branch::step2);
    REQUIRE(out.trace.has_value());
    const Step2Trace& tr = *out.trace;

    CHECK(tr.r_root.im() > Rational(0));
    auto r0 = tr.r_root.rebased(Rational(-1));
    REQUIRE(r0.has_value());
    CHECK(*r0 == QuadExtElem(Rational(0), Rational(13, 84), Rational(-1)));

    CHECK(tr.euler_image == CubicPoint{Rational(-92232, 169), Rational(92316, 169), Rational(1)});
    CHECK(tr.descended == CubicPoint{Rational::parse("-2450514024/4855033"),
                                     Rational::parse("2851182012/4855033"),
                                     Rational::parse("-810875183/9710066")});

    REQUIRE(out.records.size() == 2);
    for (const auto& rec : out.records) {
        CHECK(rec.branch == SolutionRecord::Branch::step2);
        CHECK(std::holds_alternative<QuadExtElem>(rec.r));
    }
    CHECK(out.records[0].solution ==
          canonicalize({Rational::parse("31557461"), Rational::parse("2941868"),
                        Rational::parse("1827989"), Rational::parse("31557968")}));
}

TEST_CASE("scan_cell degenerate outcomes") {
    CellOutcome zero = scan_cell(2, 2, {Rational(5), Rational(-5)});
    CHECK(zero.branch == CellOutcome::Branch::degenerate);
    CHECK_FALSE(zero.diagnostic.empty());

    // degenerate parameters reach the Euler construction and are diagnosed
    CellOutcome no_euler = scan_cell(1, 2, {Rational(5), Rational(0)});
    CHECK(no_euler.branch == CellOutcome::Branch::degenerate);
    CHECK(no_euler.records.empty());
}

TEST_CASE("trivial solutions are filtered unless requested") {
    // step-1 cells lift the g = 0 seed only through nonzero roots, so compare
    // a whole small box with and without the flag.
    SearchConfig cfg = small_box();
    auto filtered = collect(cfg);
    cfg.emit_trivial = true;
    auto with_trivial = collect(cfg);
    CHECK(with_trivial.size() >= filtered.size());
    for (const QuarticPoint& q : filtered) {
        CHECK_FALSE(is_trivial(q));
        CHECK(with_trivial.count(q) == 1);
    }
}

TEST_CASE("run_search determinism across reruns and worker counts") {
    SearchConfig cfg = small_box();
    auto one = collect(cfg);
    auto again = collect(cfg);
    CHECK(one == again);
    cfg.workers = 4;
    auto parallel = collect(cfg);
    CHECK(one == parallel);
    CHECK_FALSE(one.empty());
}

TEST_CASE("every emission is a verified canonical nontrivial solution") {
    SearchConfig cfg = small_box();
    std::set<std::uint64_t> ordinals;
    run_search(cfg, [&](const SolutionRecord& rec) {
        CHECK(quartic_residual(rec.solution) == Rational(0));
        CHECK(rec.solution == canonicalize(rec.solution));
        CHECK_FALSE(is_trivial(rec.solution));
        CHECK(ordinals.insert(rec.ordinal).second);
    });
}

TEST_CASE("oracle containment for small emissions") {
    auto oracle = brute_force_oracle(200);
    std::set<QuarticPoint> oracle_set(oracle.begin(), oracle.end());
    SearchConfig cfg = small_box();
    run_search(cfg, [&](const SolutionRecord& rec) {
        const QuarticPoint& q = rec.solution;
        Rational bound(200);
        if (abs(q.x) <= bound && abs(q.y) <= bound && abs(q.z) <= bound && abs(q.w) <= bound)
            CHECK(oracle_set.count(q) == 1);
    });
}

TEST_CASE("checkpoint and resume") {
    std::string path = "search_checkpoint_test.json";
    SearchConfig cfg = small_box();
    cfg.checkpoint_path = path;
    auto full = collect(cfg);

    // resuming from a completed run emits nothing new
    cfg.resume = true;
    std::set<QuarticPoint> more;
    SearchSummary sum = run_search(cfg, [&](const SolutionRecord& rec) { more.insert(rec.solution); });
    CHECK(more.empty());
    CHECK(sum.solutions == 0);
    std::remove(path.c_str());
}

TEST_CASE("the box around cell (1,1,(1,13)) emits its solutions") {
    SearchConfig cfg;
    cfg.m = {1, 1};
    cfg.n = {1, 1};
    cfg.s = {1, 2};
    cfg.t = {12, 13};
    auto got = collect(cfg);
    CHECK(got.count(canonicalize({Rational::parse("31557461"), Rational::parse("2941868"),
                                  Rational::parse("1827989"), Rational::parse("31557968")})) == 1);
    CHECK(got.count(canonicalize({Rational::parse("324997193816543"), Rational::parse("283678931194359"),
                                  Rational::parse("329177166160259"), Rational::parse("277041948785757")})) ==
          1);
}

TEST_CASE("empty stream after skip rules") {
    SearchConfig cfg;
    cfg.m = {0, 0};
    cfg.n = {0, 0};
    cfg.s = {1, 2};
    cfg.t = {1, 2};
    std::size_t calls = 0;
    SearchSummary sum = run_search(cfg, [&](const SolutionRecord&) { ++calls; });
    CHECK(calls == 0);
    CHECK(sum.cells_skipped == sum.cells_total);
}

TEST_CASE("brute_force_oracle") {
    CHECK(brute_force_oracle(50).empty());
    auto found = brute_force_oracle(200);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == QuarticPoint{Rational(59), Rational(158), Rational(133), Rational(134)});
    for (const QuarticPoint& q : found) {
        CHECK(quartic_residual(q) == Rational(0));
        CHECK(q == canonicalize(q));
    }
    CHECK_THROWS_AS(brute_force_oracle(0), std::invalid_argument);
}
