/*
   Copyright 2026 The lacunary authors

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

#include "lacunary/run.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace lacunary;

namespace {

nlohmann::json report_of(const RunResult& r) { return nlohmann::json::parse(r.report); }

Request command(Command c)
{
    Request r;
    r.command = c;
    return r;
}

}  // namespace

TEST_CASE("zero-test exit codes")
{
    const std::string zero = "kind binom\nfield Q\nbase 1 1\n1 1 1\n-1 1 0\n-1 2 0\n";
    const auto r = run(command(Command::ZeroTest), zero);
    CHECK(r.exit_code == kExitOk);
    const auto j = report_of(r);
    CHECK(j["verdict"] == "Zero");
    CHECK(j["certainty"] == "Deterministic");

    const auto nz = run(command(Command::ZeroTest), "kind binom\nfield Q\nbase 1 1\n1 0 4\n");
    CHECK(nz.exit_code == kExitViolated);
    CHECK(report_of(nz)["witness_verified"] == true);

    CHECK(run(command(Command::ZeroTest), "kind binom\nfield Q\n").exit_code == kExitInput);
    const auto pre = run(command(Command::ZeroTest), "kind binom\nfield GF 2\nbase 1 1\n1 0 8\n1 0 16\n");
    CHECK(pre.exit_code == kExitPrecondition);
}

TEST_CASE("generated family minus its monomial is zero")
{
    Request g = command(Command::GenerateHajos);
    g.k = 3;
    const auto gen = run(g, "");
    CHECK(gen.exit_code == kExitOk);
    const auto r = run(command(Command::ZeroTest), gen.report + "-1 9 0\n");
    CHECK(r.exit_code == kExitOk);
    CHECK(report_of(r)["verdict"] == "Zero");
}

TEST_CASE("factor report")
{
    // (Y - 2X - 3)(X^16 + Y^16 + 7)
    const std::string doc =
        "kind lacunary\nfield Q\n1 0 17\n-2 1 16\n-3 0 16\n1 16 1\n-2 17 0\n-3 16 0\n7 0 1\n-14 1 0\n-21 0 0\n";
    const auto r = run(command(Command::Factor), doc);
    CHECK(r.exit_code == kExitOk);
    const auto j = report_of(r);
    bool found = false;
    for (const auto& f : j["factors"])
        if (f["u"] == "-2" && f["v"] == "1" && f["w"] == "-3" && f["multiplicity"] == "1") found = true;
    CHECK(found);
    CHECK(j["reverified"] == true);

    Request bad = command(Command::Factor);
    bad.form = "x-minus-a";
    CHECK(run(bad, "kind lacunary\nfield GF 101\n1 1 0\n1 0 1\n1 0 0\n").exit_code == kExitPrecondition);
}

TEST_CASE("bounds and checks")
{
    Request b = command(Command::Bound);
    const auto r = run(b, "kind binom\nfield Q\nbase 1 1\n1 0 3\n-1 0 0\n");
    CHECK(r.exit_code == kExitOk);
    CHECK(report_of(r)["holds"] == true);

    Request g = command(Command::Bound);
    g.bound = BoundKind::Generalized;
    const auto gr = run(g, R"({"degrees": [1, 1], "multiplicities": [1, 0], "alpha": [[0, 2, 7], [4, 1, 3]]})");
    CHECK(gr.exit_code == kExitOk);
    CHECK(report_of(gr)["bound"] == "7");

    Request wz = command(Command::CheckWz);
    wz.k = 4;
    CHECK(run(wz, "").exit_code == kExitOk);
    wz.k = 2;
    CHECK(run(wz, "").exit_code == kExitInput);
}

TEST_CASE("reports are deterministic")
{
    const std::string doc = "kind binom\nfield Q\nbase 0 3/2\n9 1 1000000000000\n-4 1 1000000000002\n3 5 3\n";
    Request r = command(Command::ZeroTest);
    r.seed = 9;
    CHECK(run(r, doc).report == run(r, doc).report);
    Request f = command(Command::Factor);
    f.multilinear = true;
    const std::string p = "kind lacunary\nfield Q\n1 1 1\n2 0 1\n-3 1 0\n-5 0 0\n";
    CHECK(run(f, p).report == run(f, p).report);
}
