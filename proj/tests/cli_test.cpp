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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef QUARTIC_CLI_PATH
#error "QUARTIC_CLI_PATH must point at the built binary"
#endif

namespace {

using Json = nlohmann::ordered_json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QUARTIC_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

Json first_json(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    REQUIRE(std::getline(is, line));
    return Json::parse(line);
}

} // namespace

TEST_CASE("verify accepts solutions and rejects non-solutions") {
    RunResult ok = run_cli("verify 59 158 133 134");
    CHECK(ok.exit_code == 0);
    Json j = first_json(ok.out);
    CHECK(j.at("status") == "ok");
    CHECK(j.at("residual") == "0");
    CHECK(j.at("trivial") == false);

    RunResult big = run_cli("verify -- -3535404127283 -132758926000 3343735015475 -2363831080408");
    CHECK(big.exit_code == 0);
    CHECK(first_json(big.out).at("status") == "ok");

    RunResult bad = run_cli("verify 1 1 1 2");
    CHECK(bad.exit_code == 1);
    Json jb = first_json(bad.out);
    CHECK(jb.at("status") == "error");
    CHECK(jb.at("residual") == "-15");

    CHECK(run_cli("verify 1 1 1 x").exit_code == 1);
}

TEST_CASE("map prints the cubic image") {
    RunResult r = run_cli("map 59 158 133 134");
    CHECK(r.exit_code == 0);
    Json j = first_json(r.out);
    CHECK(j.at("point").at("m") == "108");
    CHECK(j.at("point").at("n") == "183");
    CHECK(j.at("point").at("r") == "-2797/592");
    CHECK(j.at("params").at("s") == "-49");
    CHECK(j.at("params").at("t") == "-25");
    CHECK(j.at("curve_residual") == "0");

    RunResult round = run_cli("map 134 133 59 158");
    CHECK(round.exit_code == 0);
    Json j2 = first_json(round.out);
    CHECK(j2.at("lift_at_1").at("x") == "134");

    RunResult trivial = run_cli("map 7 11 7 11");
    CHECK(trivial.exit_code == 2);
    CHECK(first_json(trivial.out).at("status") == "degenerate");
}

TEST_CASE("lift prints the fiber") {
    RunResult r = run_cli("lift 108 183 -2797/592 -- -49 -25");
    CHECK(r.exit_code == 0);
    Json j = first_json(r.out);
    bool found = false;
    for (const auto& entry : j.at("fiber"))
        if (entry.at("g") == "1" && entry.at("point").at("x") == "59") found = true;
    CHECK(found);

    // the Euler point's fiber carries the classical solution
    RunResult eu = run_cli("lift -- -21/16 -27/16 1 2 1");
    CHECK(eu.exit_code == 0);
    Json je = first_json(eu.out);
    bool classical = false;
    for (const auto& entry : je.at("fiber"))
        if (entry.at("point").at("x") == "134/25" && entry.at("canonical").at("x") == "59")
            classical = true;
    CHECK(classical);
    CHECK(je.at("fiber_polynomial").is_array());

    RunResult off = run_cli("lift 1 0 0 2 1");
    CHECK(off.exit_code == 1);
    Json jo = first_json(off.out);
    CHECK(jo.at("status") == "error");
    CHECK(jo.at("curve_residual") != "0");
}

TEST_CASE("euler prints point and solution") {
    RunResult r = run_cli("euler 2 1");
    CHECK(r.exit_code == 0);
    Json j = first_json(r.out);
    CHECK(j.at("point").at("m") == "-21/16");
    CHECK(j.at("solution").at("x") == "134");
    CHECK(j.at("residual") == "0");

    CHECK(run_cli("euler 1 1").exit_code == 2);
}

TEST_CASE("double lifts the ten-digit fixture solutions") {
    RunResult r = run_cli("double 59 158 133 134");
    CHECK(r.exit_code == 0);
    Json j = first_json(r.out);
    CHECK(j.at("doubled").at("m") == "-97052654280770532/738848464503259");
    bool found = false;
    for (const auto& entry : j.at("fiber"))
        if (entry.at("canonical").at("x") == "8450072351") found = true;
    CHECK(found);
}

TEST_CASE("pair of the reference solution") {
    RunResult r = run_cli("pair 59 158 133 134");
    CHECK(r.exit_code == 0);
    Json j = first_json(r.out);
    CHECK(j.at("pair").at("x") == "34813");
    CHECK(j.at("pair").at("y") == "134413");
    CHECK(j.at("residual") == "0");

    CHECK(run_cli("pair 7 11 7 11").exit_code == 2);
}

TEST_CASE("search streams JSONL records plus a summary") {
    RunResult r = run_cli("search --ranges m=1..1,n=1..1,s=1..1,t=13..13");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::vector<Json> lines;
    while (std::getline(is, line))
        if (!line.empty()) lines.push_back(Json::parse(line));
    REQUIRE(lines.size() >= 2);
    Json summary = lines.back();
    CHECK(summary.at("type") == "summary");
    CHECK(summary.at("cells_step2") == 1);
    bool found = false;
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        CHECK(lines[i].at("branch") == "step2");
        CHECK(lines[i].at("cell") == Json{{"m", 1}, {"n", 1}, {"s", 1}, {"t", 13}});
        if (lines[i].at("solution").at("w") == "31557461") found = true;
    }
    CHECK(found);
}

TEST_CASE("paramcheck on builtin families and JSON files") {
    RunResult ok = run_cli("paramcheck --family euler");
    CHECK(ok.exit_code == 0);
    CHECK(first_json(ok.out).at("identity") == true);

    std::string dumped = "cli_test_family.json";
    RunResult dump = run_cli("paramcheck --family double --dump " + dumped);
    CHECK(dump.exit_code == 0);
    RunResult reread = run_cli("paramcheck " + dumped);
    CHECK(reread.exit_code == 0);
    CHECK(first_json(reread.out).at("identity") == true);
    std::remove(dumped.c_str());

    // a broken family is reported, not an error
    std::string broken = "cli_test_broken.json";
    {
        std::ofstream os(broken);
        os << R"({"x":{"1,0":"1"},"y":{"0,1":"1"},"z":{"0,1":"1"},"w":{"1,0":"2"}})";
    }
    RunResult rep = run_cli("paramcheck " + broken);
    CHECK(rep.exit_code == 0);
    Json j = first_json(rep.out);
    CHECK(j.at("identity") == false);
    CHECK(j.contains("residual"));
    std::remove(broken.c_str());

    CHECK(run_cli("paramcheck --family nope").exit_code == 1);
    CHECK(run_cli("paramcheck no_such_file.json").exit_code == 1);
}

TEST_CASE("checked-in euler family data file") {
    RunResult r = run_cli("paramcheck " QUARTIC_DATA_DIR "/euler.json");
    CHECK(r.exit_code == 0);
    CHECK(first_json(r.out).at("identity") == true);
}
