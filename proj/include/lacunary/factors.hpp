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

#ifndef LACUNARY_FACTORS_HPP
#define LACUNARY_FACTORS_HPP

#include "lacunary/gap.hpp"
#include "lacunary/pit.hpp"
#include "lacunary/poly.hpp"
#include "lacunary/roots.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lacunary {

/// The requested factor shape is outside what the algorithm can find.
class UnsupportedFormError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class LinearForm { XminusA, YminusB, YminusUX, General };

std::string to_string(LinearForm f);

/// u X + v Y + w. Over Q the triple is integral, primitive, and the first
/// nonzero among (v, u, w) is positive; over F_q the Y coefficient is 1.
template <class F>
struct LinearFactor {
    LinearForm form = LinearForm::General;
    typename F::Elem u{};
    typename F::Elem v{};
    typename F::Elem w{};
};

/// X Y + b Y - a X - c with c != a b (otherwise it splits into linear factors).
struct MultilinearFactor {
    BigRat a;
    BigRat b;
    BigRat c;

    bool operator==(const MultilinearFactor&) const = default;
};

template <class F>
struct FactorEvidence {
    /// "x-minus-a", "y-minus-b", "y-minus-ux", "pieces", "reversal-x",
    /// "reversal-y" or "reversal-xy".
    std::string route;
    /// Per-piece multiplicities for the piece routes, per-group ones for
    /// the univariate routes.
    std::vector<BigInt> local_multiplicities;
    /// P (or its reversal) restricted along the factor; zero iff the factor divides.
    std::optional<BinomExprPoly<F>> restriction;
    std::optional<ZeroTestVerdict> restriction_verdict;
};

template <class F>
struct FactorEntry {
    std::variant<LinearFactor<F>, MultilinearFactor> factor;
    BigInt multiplicity;
    FactorEvidence<F> evidence;
};

template <class F>
struct FactorReport {
    std::vector<FactorEntry<F>> entries;
    Certainty certainty = Certainty::Deterministic;
    std::size_t error_exponent = 0;
};

struct FactorOptions {
    std::size_t lambda = 64;
    std::uint64_t seed = 1;
    std::size_t exact_bit_limit = std::size_t{1} << 16;
    Exec exec = Exec::Parallel;
    /// Specialization points tried per piece (1, 2, 3, ...).
    unsigned specialization_budget = 32;
};

/// Canonical integral triple for u X + v Y + w (not all zero).
LinearFactor<Rationals> canonical_linear(const BigRat& u, const BigRat& v, const BigRat& w);
/// Canonical triple with Y coefficient 1 (v != 0).
LinearFactor<GaloisField> canonical_linear(const GaloisField& f, const FpsElem& u, const FpsElem& v,
                                           const FpsElem& w);

/// X Y + b Y - a X - c as a dense polynomial.
DenseBi<Rationals> multilinear_dense(const MultilinearFactor& m);
/// u X + v Y + w as a dense polynomial.
template <class F>
DenseBi<F> linear_dense(const F& field, const LinearFactor<F>& l)
{
    DenseBi<F> out(field);
    out.add_to(0, 0, l.w);
    out.add_to(1, 0, l.u);
    out.add_to(0, 1, l.v);
    return out;
}

/// Multiplicity of a factor as the minimum over pieces: Z-valuation after
/// Y = Z + sX + t for linear factors (General form only), iterated exact
/// division for multilinear ones. 0 means "not a factor".
BigInt factor_multiplicity(const PieceDecomposition<Rationals>& pieces, const LinearFactor<Rationals>& f);
BigInt factor_multiplicity(const PieceDecomposition<GaloisField>& pieces, const LinearFactor<GaloisField>& f);
BigInt factor_multiplicity(const PieceDecomposition<Rationals>& pieces, const MultilinearFactor& f);

/// P restricted along a linear factor, as a binomial expression whose
/// vanishing is equivalent to divisibility.
BinomExprPoly<Rationals> restriction_along(const LacunaryPoly<Rationals>& p, const LinearFactor<Rationals>& f);
BinomExprPoly<GaloisField> restriction_along(const LacunaryPoly<GaloisField>& p, const LinearFactor<GaloisField>& f);

/// All linear factors of a nonzero P over Q with multiplicities.
FactorReport<Rationals> linear_factors_q(const LacunaryPoly<Rationals>& p, const FactorOptions& opt = {});

/// All linear and multilinear factors of a nonzero P over Q.
FactorReport<Rationals> multilinear_factors_q(const LacunaryPoly<Rationals>& p, const FactorOptions& opt = {});

/// Factors u X + v Y + w with u v w != 0 over F_q. Other forms raise
/// UnsupportedFormError; p <= max(alpha + beta) raises PreconditionError.
FactorReport<GaloisField> linear_factors_fp(const LacunaryPoly<GaloisField>& p, const FactorOptions& opt = {},
                                            LinearForm requested = LinearForm::General);

/// Re-derives every entry's multiplicity and restriction verdict.
bool reverify(const LacunaryPoly<Rationals>& p, const FactorReport<Rationals>& report, const FactorOptions& opt = {});
bool reverify(const LacunaryPoly<GaloisField>& p, const FactorReport<GaloisField>& report,
              const FactorOptions& opt = {});

std::string format_factor(const Rationals& f, const std::variant<LinearFactor<Rationals>, MultilinearFactor>& x);
std::string format_factor(const GaloisField& f, const std::variant<LinearFactor<GaloisField>, MultilinearFactor>& x);

}  // namespace lacunary

#endif  // LACUNARY_FACTORS_HPP
