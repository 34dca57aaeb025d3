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

#ifndef LACUNARY_ROOTS_HPP
#define LACUNARY_ROOTS_HPP

#include "lacunary/coeffring.hpp"
#include "lacunary/dense.hpp"
#include "lacunary/pit.hpp"
#include "lacunary/poly.hpp"

#include <vector>

namespace lacunary {

inline constexpr std::size_t kDefaultRootDegreeCap = 100000;

/// All distinct roots of f in F_{p^s}, sorted. Distinct-degree step
/// gcd(f, X^q - X) followed by randomized equal-degree splitting.
std::vector<FpsElem> fp_dense_roots(const DenseUni<GaloisField>& f, Rng& rng,
                                    std::size_t degree_cap = kDefaultRootDegreeCap);

/// All distinct rational roots of a nonzero f, ascending. Roots are found
/// modulo a random prime, lifted by Newton iteration and checked exactly.
std::vector<BigRat> dense_rational_roots(const DenseUni<Rationals>& f, Rng& rng);

/// Counts the Monte Carlo Zero verdicts behind a result, for the overall
/// error bound.
struct McTally {
    std::size_t tests = 0;

    void note(const ZeroTestVerdict& v)
    {
        if (v.verdict == Verdict::Zero && v.certainty == Certainty::MonteCarlo) ++tests;
    }
};

struct RootOptions {
    std::size_t lambda = 64;
    std::size_t exact_bit_limit = std::size_t{1} << 16;
};

struct RationalRoot {
    BigRat root;
    BigInt multiplicity = 0;  // unbounded for the root 0
};

/// Multiplicity of a nonzero r as a root of f, by testing f, f', f'', ...
/// at r. A k-term f has nonzero-root multiplicity at most k-1; reaching
/// that cap without a nonzero value raises std::logic_error.
unsigned lacunary_root_multiplicity(const LacunaryUni<Rationals>& f, const BigRat& r, const RootOptions& opt,
                                    Rng& rng, McTally& tally);

/// Rational roots of a nonzero lacunary polynomial with multiplicities.
/// Candidates come from the rational root theorem on the extreme
/// coefficients; each is accepted by the power-sum zero test.
std::vector<RationalRoot> lacunary_univariate_rational_roots(const LacunaryUni<Rationals>& f, const RootOptions& opt,
                                                             Rng& rng, McTally& tally);

}  // namespace lacunary

#endif  // LACUNARY_ROOTS_HPP
