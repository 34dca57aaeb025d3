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

#ifndef LACUNARY_PIT_HPP
#define LACUNARY_PIT_HPP

#include "lacunary/coeffring.hpp"
#include "lacunary/parallel.hpp"
#include "lacunary/poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lacunary {

enum class Verdict { Zero, NonZero };
enum class Certainty { Deterministic, MonteCarlo };

/// Evidence that a sum is nonzero. Every field except `kind` is optional
/// context that lets verify_witness redo the computation.
struct Witness {
    enum class Kind {
        CoefficientKey,  // coefficient of Y^key in a shifted part is nonzero
        ExactSum,        // the power sum evaluates exactly to a nonzero value
        SameSign,        // all summands share a strict sign
        AdicValuation,   // unique minimal q-adic valuation among the summands
        ModularImage,    // the sum is nonzero modulo `prime`
    };

    Kind kind = Kind::CoefficientKey;
    BigInt residue_class = 0;  // alpha mod d in the two-sparse reduction
    std::size_t part_begin = 0;
    std::size_t part_end = 0;
    BigInt key = 0;    // exponent key, or the group key of a power sum
    BigInt prime = 0;  // for AdicValuation and ModularImage
};

struct ZeroTestVerdict {
    Verdict verdict = Verdict::Zero;
    Certainty certainty = Certainty::Deterministic;
    /// For MonteCarlo verdicts the error probability is at most 2^-error_exponent.
    std::size_t error_exponent = 0;
    std::optional<Witness> witness;
};

std::string to_string(Verdict v);
std::string to_string(Certainty c);
std::string to_string(Witness::Kind k);

struct PitOptions {
    std::size_t lambda = 64;
    std::uint64_t seed = 1;
    /// Power sums whose exact value needs at most this many bits are
    /// evaluated exactly instead of modularly.
    std::size_t exact_bit_limit = std::size_t{1} << 16;
    Exec exec = Exec::Parallel;
};

/// Zero test of sum a_j v^beta_j over Q. Deterministic shortcuts first,
/// then one random prime sized so that a false Zero has probability at
/// most 2^-lambda.
ZeroTestVerdict degenerate_power_sum_test(std::vector<std::pair<BigRat, BigInt>> pairs, const BigRat& v,
                                          std::size_t lambda, Rng& rng,
                                          std::size_t exact_bit_limit = std::size_t{1} << 16);

bool verify_power_sum_witness(std::vector<std::pair<BigRat, BigInt>> pairs, const BigRat& v, const Witness& w);

/// Identity test over Q for d = 1. Deterministic when u, v != 0.
ZeroTestVerdict zero_test_q(const BinomExprPoly<Rationals>& p, const PitOptions& opt = {});

/// Identity test for a base u X^d + v, by splitting alpha = q d + r.
ZeroTestVerdict zero_test_two_sparse(const BinomExprPoly<Rationals>& p, const PitOptions& opt = {});
ZeroTestVerdict zero_test_two_sparse(const BinomExprPoly<GaloisField>& p, const PitOptions& opt = {});

/// Identity test over F_{p^s}, d = 1. Throws PreconditionError unless
/// p > max_j(alpha_j + beta_j). Always deterministic.
ZeroTestVerdict zero_test_fp(const BinomExprPoly<GaloisField>& p, const PitOptions& opt = {});

/// Recomputes the witness of a NonZero verdict independently of the test.
bool verify_witness(const BinomExprPoly<Rationals>& p, const ZeroTestVerdict& verdict);
bool verify_witness(const BinomExprPoly<GaloisField>& p, const ZeroTestVerdict& verdict);

}  // namespace lacunary

#endif  // LACUNARY_PIT_HPP
