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

#ifndef LACUNARY_BOUNDS_HPP
#define LACUNARY_BOUNDS_HPP

#include "lacunary/coeffring.hpp"
#include "lacunary/poly.hpp"

#include <optional>
#include <span>
#include <vector>

namespace lacunary {

/// max_j alpha_j + C(k+1-j, 2) over an ascending list (j is 1-based).
BigInt valuation_bound(std::span<const BigInt> alphas);

/// max_j alpha_j + 2 C(k+1-j, 2); the weight used for products of two
/// binomial factors.
BigInt weight2_valuation_bound(std::span<const BigInt> alphas);

/// Maximal runs of an ascending valuation list in which each entry is at
/// most (first entry) + offset - 1.
struct PlateauProfile {
    std::vector<std::size_t> lengths;
    std::vector<BigInt> first_valuations;
};

PlateauProfile plateau_profile(std::span<const BigInt> valuations);

/// Lower bound on the Wronskian valuation: sum_i (p_i v_i + C(p_i, 2)) - C(k, 2).
BigInt plateau_bound(std::span<const BigInt> valuations);

/// Product-form family sum_j a_j prod_i f_i^{alpha_ij}: degrees d_i, the
/// multiplicities mu_i of a probed point, and the m x k exponent matrix.
struct MultiBoundInput {
    std::vector<unsigned long> degrees;
    std::vector<unsigned long> multiplicities;
    std::vector<std::vector<BigInt>> alpha;  // alpha[i][j]
};

/// Upper bound on the multiplicity of the probed point in a nonzero sum.
/// With order_opt the columns are first sorted by sum_i mu_i alpha_ij,
/// which never increases the bound.
BigInt generalized_multiplicity_bound(const MultiBoundInput& in, bool order_opt);

struct FpPreconditionReport {
    bool ok = true;
    BigInt p;
    BigInt max_degree;   // max_j alpha_j + d beta_j
    std::size_t term = 0;  // index of a term reaching max_degree

    std::string message() const;
};

/// ok iff p > max_j(alpha_j + d beta_j), strictly.
template <class F>
FpPreconditionReport fp_precondition_check(const BinomExprPoly<F>& p)
{
    FpPreconditionReport r;
    r.p = p.field.characteristic();
    for (std::size_t j = 0; j < p.terms.size(); ++j) {
        BigInt deg = p.terms[j].alpha + p.d * p.terms[j].beta;
        if (j == 0 || deg > r.max_degree) {
            r.max_degree = deg;
            r.term = j;
        }
    }
    r.ok = r.p == 0 || p.terms.empty() || r.p > r.max_degree;
    return r;
}

/// -1 + (1+X)^{2k+3} - sum_{j=0}^k a_j X^{2j+1} (1+X)^{k+1-j} with
/// a_j = (2k+3)/(2j+1) C(k+1+j, k+1-j); expands to X^{2k+3}. Requires k >= 3.
BinomExprPoly<Rationals> hajos_family(unsigned long k);

/// The (k+1)-term identity -X^{k-1} + sum_t (-1)^{k-1-t} C(k-1, t) (1+X)^t.
/// Requires k >= 2.
BinomExprPoly<Rationals> binomial_identity(unsigned long k);

/// sum_j (2k+3)/(2j+1) C(k+1+j, k+1-j) C(k+1-j, m-2j-1); equals C(2k+3, m)
/// for 0 < m < 2k+3.
BigRat hajos_coefficient_sum(unsigned long k, long m);

struct WzReport {
    bool passed = true;
    std::optional<long> failing_m;
    std::optional<long> failing_j;
    std::string failure;         // which check failed
    std::size_t checked = 0;     // recurrence points evaluated
    std::size_t skipped = 0;     // undefined points
};

/// Exact check of the summation identity, the WZ recurrence with its
/// certificate R, and the base case m = 2k+2. Refuses k < 3.
WzReport wz_identity_check(unsigned long k);

struct SearchResult {
    long best_gap = -1;  // valuation - alpha_1 of the witness; -1 if none found
    BinomExprPoly<Rationals> witness;
    std::size_t instances = 0;
    bool exhaustive = false;
};

struct SearchOptions {
    unsigned k = 3;
    unsigned exp_cap = 8;
    /// Bound on the primitive integer coefficients of a witness; 0 disables.
    unsigned long coeff_cap = 0;
    std::size_t samples = 2000;
    std::uint64_t seed = 1;
    Exec exec = Exec::Parallel;
};

/// Largest val(P) - alpha_1 found over k-term sums of X^alpha (1+X)^beta
/// with exponents <= exp_cap. Exhaustive when the exponent space fits in
/// `samples`, randomized otherwise. Reports what it found; it does not
/// claim the value is optimal.
SearchResult max_valuation_search(const SearchOptions& opt);

/// Best valuation gap for one exponent choice: the largest val - min alpha
/// over nonzero combinations, with the combination. nullopt when the family
/// is linearly dependent or the extremal combination has a zero coefficient.
std::optional<std::pair<long, std::vector<BigRat>>> best_combination(std::span<const std::pair<unsigned, unsigned>> exps);

}  // namespace lacunary

#endif  // LACUNARY_BOUNDS_HPP
