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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv)
{
    using lacunary::Command;
    lacunary::Request req;
    std::string input;

    CLI::App app{"Identity testing and factor extraction for lacunary bivariate polynomials"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", req.seed, "Seed for every random choice");
    app.add_option("--lambda", req.lambda, "Monte Carlo error exponent")->check(CLI::Range(1, 4096));
    app.add_option("--oracle-cap", req.oracle_cap, "Degree cap for dense expansions");
    app.add_option("--threads", req.threads, "OpenMP threads (1 runs the serial kernels)")->check(CLI::Range(1, 1024));
    app.add_flag("--timings", req.timings, "Add wall-clock timings to the report");

    auto* zt = app.add_subcommand("zero-test", "Decide whether a polynomial is identically zero");
    zt->add_option("file", input, "Document (default: stdin)");

    auto* fa = app.add_subcommand("factor", "Linear or multilinear factors with multiplicities");
    auto* lin = fa->add_flag("--linear", "Linear factors (default)");
    fa->add_flag("--multilinear", req.multilinear, "Also multilinear factors")->excludes(lin);
    fa->add_option("--form", req.form, "Factor shape over F_q: general, x-minus-a, y-minus-b, y-minus-ux");
    fa->add_option("file", input, "Document (default: stdin)");

    auto* bo = app.add_subcommand("bound", "Valuation and multiplicity bounds");
    auto* thm1 = bo->add_flag("--thm1", "max_j alpha_j + C(k+1-j, 2)");
    auto* w2 = bo->add_flag("--weight2", "The weight-2 variant");
    auto* gen = bo->add_flag("--generalized", "Multiplicity bound for product families (JSON input)");
    thm1->excludes(w2)->excludes(gen);
    w2->excludes(gen);
    bo->add_flag("--order-opt", req.order_opt, "Sort columns before bounding (--generalized)");
    bo->add_option("file", input, "Document (default: stdin)");

    auto* gs = app.add_subcommand("gap-split", "Split a polynomial at exponent gaps");
    gs->add_option("--weight", req.weight, "Gap weight")->check(CLI::IsMember({1, 2}));
    gs->add_option("file", input, "Document (default: stdin)");

    auto* ge = app.add_subcommand("generate", "Generate instances");
    ge->require_subcommand(1);
    auto* hajos = ge->add_subcommand("hajos", "The sparse family that expands to X^(2k+3)");
    hajos->add_option("--k", req.k, "Family parameter (k >= 3)")->required();
    hajos->add_flag("--json", req.json_output, "Write JSON instead of text");

    auto* ch = app.add_subcommand("check", "Exact identity checks");
    ch->require_subcommand(1);
    auto* wz = ch->add_subcommand("wz", "Summation identity and its WZ certificate");
    wz->add_option("--k", req.k, "Family parameter (k >= 3)")->required();

    auto* wr = app.add_subcommand("wronskian", "Wronskian of the family f_j = [Y^j] P");
    wr->add_option("file", input, "Document (default: stdin)");

    auto* se = app.add_subcommand("search", "Searches");
    se->require_subcommand(1);
    auto* mv = se->add_subcommand("max-valuation", "Largest valuation gap over small k-term sums");
    mv->add_option("--k", req.k, "Number of terms (1..5)");
    mv->add_option("--exp-cap", req.exp_cap, "Exponent cap (<= 12)");
    mv->add_option("--coeff-cap", req.coeff_cap, "Bound on witness coefficients (0: none)");
    mv->add_option("--samples", req.samples, "Instance budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return lacunary::kExitInput;
    }

    if (zt->parsed()) req.command = Command::ZeroTest;
    if (fa->parsed()) req.command = Command::Factor;
    if (bo->parsed()) {
        req.command = Command::Bound;
        req.bound = gen->count() ? lacunary::BoundKind::Generalized
                    : w2->count() ? lacunary::BoundKind::Weight2
                                  : lacunary::BoundKind::Thm1;
    }
    if (gs->parsed()) req.command = Command::GapSplit;
    if (hajos->parsed()) req.command = Command::GenerateHajos;
    if (wz->parsed()) req.command = Command::CheckWz;
    if (wr->parsed()) req.command = Command::Wronskian;
    if (mv->parsed()) req.command = Command::SearchMaxValuation;

    std::string document;
    if (lacunary::needs_document(req.command)) {
        try {
            document = read_input(input);
        } catch (const std::exception& e) {
            std::cerr << "lacunary: " << e.what() << '\n';
            return lacunary::kExitInput;
        }
    }
    const auto result = lacunary::run(req, document);
    std::cout << result.report;
    return result.exit_code;
}
