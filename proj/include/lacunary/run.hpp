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

#ifndef LACUNARY_RUN_HPP
#define LACUNARY_RUN_HPP

#include "lacunary/poly.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace lacunary {

enum class Command { ZeroTest, Factor, Bound, GapSplit, GenerateHajos, CheckWz, Wronskian, SearchMaxValuation };
enum class BoundKind { Thm1, Weight2, Generalized };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPrecondition = 3;

struct Request {
    Command command = Command::ZeroTest;

    std::uint64_t seed = 1;
    std::size_t lambda = 64;
    unsigned long oracle_cap = kDefaultOracleCap;
    int threads = 1;
    bool timings = false;

    // factor
    bool multilinear = false;
    std::string form = "general";
    // bound
    BoundKind bound = BoundKind::Thm1;
    bool order_opt = false;
    // gap-split
    unsigned weight = 1;
    // generate hajos, check wz, search
    unsigned long k = 3;
    bool json_output = false;
    unsigned exp_cap = 8;
    unsigned long coeff_cap = 0;
    std::size_t samples = 2000;
};

struct RunResult {
    std::string report;
    int exit_code = kExitOk;
};

/// Whether the command reads a document from the input.
bool needs_document(Command c);

/// Executes one command. Never throws: errors become an error report with
/// exit code 2 (input) or 3 (precondition).
RunResult run(const Request& req, std::string_view document);

}  // namespace lacunary

#endif  // LACUNARY_RUN_HPP
