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

#ifndef LACUNARY_GAP_HPP
#define LACUNARY_GAP_HPP

#include "lacunary/dense.hpp"
#include "lacunary/poly.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

namespace lacunary {

/// Half-open index interval [begin, end).
struct Interval {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool operator==(const Interval&) const = default;
};

/// Greedy split of an ascending exponent list. Index n joins the interval
/// opened at s iff alpha_n <= alpha_s + c C(n - s, 2).
struct GapPartition {
    std::vector<Interval> intervals;
    unsigned weight = 1;
};

GapPartition gap_partition(std::span<const BigInt> alphas, unsigned weight);

/// True when the partition satisfies the membership rule inside every
/// interval and fails it at every boundary.
bool partition_is_exact(std::span<const BigInt> alphas, const GapPartition& part);

inline constexpr std::size_t kMaxPieceTerms = std::size_t{1} << 16;

/// P restricted to one cell of the two-level split, divided by X^alpha_shift Y^beta_shift.
template <class F>
struct Piece {
    BigInt alpha_shift;
    BigInt beta_shift;
    DenseBi<F> poly;
    std::vector<std::size_t> term_indices;  // into the normalized input
};

template <class F>
struct PieceDecomposition {
    unsigned weight = 1;
    std::vector<Piece<F>> pieces;
};

/// Split on alpha with gap_partition, then split each part on beta, and
/// materialize the shifted cells densely. Degrees in a piece built from n
/// terms are at most weight * C(n-1, 2).
template <class F>
PieceDecomposition<F> piece_decomposition(const LacunaryPoly<F>& p_in, unsigned weight)
{
    const LacunaryPoly<F> p = normalize(p_in);
    if (p.terms.size() > kMaxPieceTerms)
        throw DomainError("piece_decomposition: more than " + std::to_string(kMaxPieceTerms) + " terms");
    PieceDecomposition<F> out;
    out.weight = weight;
    std::vector<BigInt> alphas;
    for (const auto& t : p.terms) alphas.push_back(t.alpha);
    for (const Interval& xi : gap_partition(alphas, weight).intervals) {
        std::vector<std::size_t> idx(xi.size());
        std::iota(idx.begin(), idx.end(), xi.begin);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return p.terms[a].beta < p.terms[b].beta; });
        std::vector<BigInt> betas;
        for (std::size_t i : idx) betas.push_back(p.terms[i].beta);
        for (const Interval& yi : gap_partition(betas, weight).intervals) {
            Piece<F> piece{BigInt(0), BigInt(0), DenseBi<F>(p.field), {}};
            piece.beta_shift = betas[yi.begin];
            piece.alpha_shift = p.terms[idx[yi.begin]].alpha;
            for (std::size_t t = yi.begin; t < yi.end; ++t)
                piece.alpha_shift = std::min(piece.alpha_shift, p.terms[idx[t]].alpha);
            for (std::size_t t = yi.begin; t < yi.end; ++t) {
                const auto& term = p.terms[idx[t]];
                const BigInt da = term.alpha - piece.alpha_shift, db = term.beta - piece.beta_shift;
                piece.poly.add_to(da.get_ui(), db.get_ui(), term.coef);
                piece.term_indices.push_back(idx[t]);
            }
            std::sort(piece.term_indices.begin(), piece.term_indices.end());
            out.pieces.push_back(std::move(piece));
        }
    }
    return out;
}

/// Sum over pieces of X^alpha_shift Y^beta_shift * piece, as a lacunary polynomial.
template <class F>
LacunaryPoly<F> reassemble(const PieceDecomposition<F>& dec, const F& field)
{
    LacunaryPoly<F> out{field, {}};
    for (const auto& piece : dec.pieces) {
        for (const auto& t : from_dense(piece.poly).terms)
            out.terms.push_back({t.coef, t.alpha + piece.alpha_shift, t.beta + piece.beta_shift});
    }
    return normalize(std::move(out));
}

/// Index of the piece with fewest terms, ties broken by total degree.
template <class F>
std::size_t minimal_piece(const PieceDecomposition<F>& dec)
{
    std::size_t best = 0;
    auto key = [&](std::size_t i) {
        const auto& q = dec.pieces[i].poly;
        return std::make_pair(q.term_count(), q.x_degree() + q.y_degree());
    };
    for (std::size_t i = 1; i < dec.pieces.size(); ++i)
        if (key(i) < key(best)) best = i;
    return best;
}

}  // namespace lacunary

#endif  // LACUNARY_GAP_HPP
