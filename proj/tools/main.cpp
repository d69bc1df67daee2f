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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "quartic/families.hpp"
#include "quartic/geometry.hpp"
#include "quartic/json_io.hpp"
#include "quartic/search.hpp"

namespace {

using namespace quartic;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDegenerate = 2;

struct Ctx {
    bool pretty = false;
    int exit_code = kExitOk;
};

void print_json(const Json& j, const Ctx& ctx) {
    std::cout << (ctx.pretty ? j.dump(2) : j.dump()) << "\n";
}

int fail(Ctx& ctx, const std::string& status, const std::string& message, int code) {
    print_json(Json{{"status", status}, {"message", message}}, ctx);
    ctx.exit_code = code;
    return code;
}

QuarticPoint parse_point(const std::vector<std::string>& args) {
    return {Rational::parse(args[0]), Rational::parse(args[1]), Rational::parse(args[2]),
            Rational::parse(args[3])};
}

Json fiber_json(const std::vector<FiberSolution>& fiber) {
    Json arr = Json::array();
    for (const FiberSolution& fs : fiber) {
        QuarticPoint canon = canonicalize(fs.point);
        arr.push_back(Json{{"g", fs.g},
                           {"point", fs.point},
                           {"canonical", canon},
                           {"equation", canon.equation()},
                           {"trivial", is_trivial(fs.point)}});
    }
    return arr;
}

void cmd_verify(Ctx& ctx, const std::vector<std::string>& args) {
    QuarticPoint q = parse_point(args);
    Rational res = quartic_residual(q);
    if (!res.is_zero()) {
        print_json(Json{{"status", "error"},
                        {"message", "not a solution"},
                        {"point", q},
                        {"residual", res}},
                   ctx);
        ctx.exit_code = kExitError;
        return;
    }
    print_json(Json{{"status", "ok"},
                    {"point", q},
                    {"residual", res},
                    {"trivial", is_trivial(q)},
                    {"canonical", canonicalize(q)},
                    {"equation", canonicalize(q).equation()}},
               ctx);
}

void cmd_map(Ctx& ctx, const std::vector<std::string>& args) {
    QuarticPoint q = parse_point(args);
    auto [c, p] = image_of_quartic(q);
    print_json(Json{{"status", "ok"},
                    {"point", c},
                    {"params", p},
                    {"curve_residual", curve_residual(c, p)},
                    {"lift_at_1", lift(c, p, Rational(1))}},
               ctx);
}

void cmd_lift(Ctx& ctx, const std::vector<std::string>& args) {
    CubicPoint c{Rational::parse(args[0]), Rational::parse(args[1]), Rational::parse(args[2])};
    CurveParams p{Rational::parse(args[3]), Rational::parse(args[4])};
    Rational res = curve_residual(c, p);
    if (!res.is_zero()) {
        print_json(Json{{"status", "error"},
                        {"message", "point is not on the curve"},
                        {"curve_residual", res}},
                   ctx);
        ctx.exit_code = kExitError;
        return;
    }
    print_json(Json{{"status", "ok"},
                    {"point", c},
                    {"params", p},
                    {"fiber_polynomial", g_polynomial(c.m, c.n, p)},
                    {"fiber", fiber_json(fiber_solutions(c, p))}},
               ctx);
}

void cmd_euler(Ctx& ctx, const std::vector<std::string>& args) {
    CurveParams p{Rational::parse(args[0]), Rational::parse(args[1])};
    CubicPoint e = euler_point(p);
    QuarticPoint sol = euler_solution(p);
    Json j{{"status", "ok"},
           {"params", p},
           {"point", e},
           {"curve_residual", curve_residual(e, p)},
           {"solution", sol},
           {"residual", quartic_residual(sol)}};
    if (!is_trivial(sol)) {
        j["canonical"] = canonicalize(sol);
        j["equation"] = canonicalize(sol).equation();
    } else {
        j["trivial"] = true;
    }
    print_json(j, ctx);
}

void cmd_double(Ctx& ctx, const std::vector<std::string>& args) {
    QuarticPoint q = parse_point(args);
    auto [c, p] = image_of_quartic(q);
    TangentDouble td = tangent_double_ex(c, p);
    print_json(Json{{"status", "ok"},
                    {"image", c},
                    {"params", p},
                    {"k", td.k},
                    {"g", td.g},
                    {"doubled", td.point},
                    {"fiber", fiber_json(fiber_solutions(td.point, p))}},
               ctx);
}

void cmd_pair(Ctx& ctx, const std::vector<std::string>& args) {
    QuarticPoint q = parse_point(args);
    QuarticPoint pr = pair_of(q);
    print_json(Json{{"status", "ok"},
                    {"point", canonicalize(q)},
                    {"pair", pr},
                    {"equation", pr.equation()},
                    {"residual", quartic_residual(pr)}},
               ctx);
}

bool parse_ranges(const std::string& text, SearchConfig& cfg) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto eq = part.find('=');
        auto dots = part.find("..");
        if (eq == std::string::npos || dots == std::string::npos || dots < eq) return false;
        std::string var = part.substr(0, eq);
        long lo = std::stol(part.substr(eq + 1, dots - eq - 1));
        long hi = std::stol(part.substr(dots + 2));
        CellRange r{lo, hi};
        if (var == "m")
            cfg.m = r;
        else if (var == "n")
            cfg.n = r;
        else if (var == "s")
            cfg.s = r;
        else if (var == "t")
            cfg.t = r;
        else
            return false;
    }
    return true;
}

void cmd_search(Ctx& ctx, const std::string& ranges, unsigned workers, const std::string& output,
                const std::string& checkpoint, bool resume, bool emit_trivial) {
    SearchConfig cfg;
    cfg.m = {-3, 3};
    cfg.n = {-3, 3};
    cfg.s = {1, 13};
    cfg.t = {1, 13};
    if (!ranges.empty() && !parse_ranges(ranges, cfg))
        throw std::invalid_argument("cannot parse --ranges (expected m=lo..hi,n=lo..hi,s=lo..hi,t=lo..hi)");
    cfg.workers = workers;
    cfg.checkpoint_path = checkpoint;
    cfg.resume = resume;
    cfg.emit_trivial = emit_trivial;

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!output.empty()) {
        file.open(output, resume ? std::ios::app : std::ios::out);
        if (!file) throw std::runtime_error("cannot open output file " + output);
        os = &file;
    }

    SearchSummary sum = run_search(cfg, [&](const SolutionRecord& rec) {
        Json j = rec;
        *os << j.dump() << "\n";
        if (ctx.pretty) std::cerr << rec.solution.equation() << "\n";
    });
    Json js = sum;
    *os << js.dump() << "\n";
    if (ctx.pretty)
        std::cerr << "cells: " << sum.cells_total << " (skipped " << sum.cells_skipped << ", step1 "
                  << sum.cells_step1 << ", step2 " << sum.cells_step2 << ", degenerate "
                  << sum.cells_degenerate << "), solutions: " << sum.solutions << "\n";
}

void cmd_paramcheck(Ctx& ctx, const std::string& file, const std::string& family_name,
                    const std::string& dump_path) {
    ParametricFamily fam;
    if (!family_name.empty()) {
        bool found = false;
        for (const ParametricFamily& f : builtin_families())
            if (f.name == family_name) {
                fam = f;
                found = true;
            }
        if (!found) throw std::invalid_argument("unknown family '" + family_name + "'");
    } else if (!file.empty()) {
        std::ifstream is(file);
        if (!is) throw std::runtime_error("cannot open " + file);
        Json j;
        is >> j;
        fam = j.get<ParametricFamily>();
    } else {
        throw std::invalid_argument("paramcheck needs a JSON file or --family");
    }

    if (!dump_path.empty()) {
        std::ofstream os(dump_path);
        if (!os) throw std::runtime_error("cannot open " + dump_path);
        Json j = fam;
        os << j.dump(2) << "\n";
    }

    BiPoly residual = verify_parametric_family(fam.x, fam.y, fam.z, fam.w);
    Json j{{"status", "ok"}, {"identity", residual.is_zero()}};
    if (!residual.is_zero()) j["residual"] = residual;
    print_json(j, ctx);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational points on x^4 + y^4 = z^4 + w^4 via a family of plane cubics"};
    app.require_subcommand(1);

    Ctx ctx;
    app.add_flag("--pretty", ctx.pretty, "indent JSON and echo human-readable lines");

    std::vector<std::string> point_args, lift_args, euler_args;
    auto add_point_cmd = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("coords", point_args, "x y z w (rationals as p/q; put -- before negatives)")
            ->expected(4)
            ->required();
        return sub;
    };

    CLI::App* verify = add_point_cmd("verify", "check x^4 + y^4 = z^4 + w^4 and print the residual");
    CLI::App* map = app.add_subcommand("map", "map a solution to its cubic image (m,n,r) and (s,t)");
    map->add_option("coords", point_args, "x y z w")->expected(4)->required();
    CLI::App* liftc = app.add_subcommand("lift", "fiber solutions of an on-curve point");
    liftc->add_option("coords", lift_args, "m n r s t")->expected(5)->required();
    CLI::App* euler = app.add_subcommand("euler", "Euler point and solution for parameters (s,t)");
    euler->add_option("coords", euler_args, "s t")->expected(2)->required();
    CLI::App* dbl = app.add_subcommand("double", "tangent-double the image of a solution and lift");
    dbl->add_option("coords", point_args, "x y z w")->expected(4)->required();
    CLI::App* pair = app.add_subcommand("pair", "the second solution on the same fiber");
    pair->add_option("coords", point_args, "x y z w")->expected(4)->required();

    CLI::App* search = app.add_subcommand("search", "enumerate (m,n,s,t) cells and stream solutions as JSONL");
    std::string ranges, output, checkpoint;
    unsigned workers = 1;
    bool resume = false, emit_trivial = false;
    search->add_option("--ranges", ranges, "m=lo..hi,n=lo..hi,s=lo..hi,t=lo..hi (default m,n -3..3, s,t 1..13)");
    search->add_option("--workers", workers, "worker threads (default 1)");
    search->add_option("--output", output, "write JSONL here instead of stdout");
    search->add_option("--checkpoint", checkpoint, "checkpoint file for resumable runs");
    search->add_flag("--resume", resume, "continue from the checkpoint file");
    search->add_flag("--emit-trivial", emit_trivial, "also emit trivial-orbit solutions");

    CLI::App* pc = app.add_subcommand("paramcheck", "verify a parametric family is an identity");
    std::string pc_file, pc_family, pc_dump;
    pc->add_option("file", pc_file, "JSON file {\"x\":{\"degS,degT\":\"p/q\",...},\"y\":...,\"z\":...,\"w\":...}");
    pc->add_option("--family", pc_family, "builtin family: euler, double, euler-pair, double-pair");
    pc->add_option("--dump", pc_dump, "write the checked family as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cout << Json{{"status", "error"}, {"message", e.what()}}.dump() << "\n";
        return kExitError;
    }

    try {
        if (verify->parsed()) cmd_verify(ctx, point_args);
        if (map->parsed()) cmd_map(ctx, point_args);
        if (liftc->parsed()) cmd_lift(ctx, lift_args);
        if (euler->parsed()) cmd_euler(ctx, euler_args);
        if (dbl->parsed()) cmd_double(ctx, point_args);
        if (pair->parsed()) cmd_pair(ctx, point_args);
        if (search->parsed()) cmd_search(ctx, ranges, workers, output, checkpoint, resume, emit_trivial);
        if (pc->parsed()) cmd_paramcheck(ctx, pc_file, pc_family, pc_dump);
    } catch (const degenerate_error& e) {
        return fail(ctx, "degenerate", e.what(), kExitDegenerate);
    } catch (const std::exception& e) {
        return fail(ctx, "error", e.what(), kExitError);
    }
    return ctx.exit_code;
}
