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

#include "lacunary/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace lacunary {

namespace {

void require_sorted(std::span<const BigInt> xs, const char* what)
{
    if (xs.empty()) throw DomainError(std::string(what) + ": empty list");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] < xs[i - 1]) throw DomainError(std::string(what) + ": list is not ascending");
}

BigInt weighted_bound(std::span<const BigInt> alphas, unsigned long weight, const char* what)
{
    require_sorted(alphas, what);
    const std::size_t k = alphas.size();
    BigInt best = alphas[0] + weight * binomial(k, 2);
    for (std::size_t j = 1; j <= k; ++j) best = std::max(best, BigInt(alphas[j - 1] + weight * binomial(k + 1 - j, 2)));
    return best;
}

}  // namespace

BigInt valuation_bound(std::span<const BigInt> alphas) { return weighted_bound(alphas, 1, "valuation_bound"); }

BigInt weight2_valuation_bound(std::span<const BigInt> alphas)
{
    return weighted_bound(alphas, 2, "weight2_valuation_bound");
}

PlateauProfile plateau_profile(std::span<const BigInt> vals)
{
    require_sorted(vals, "plateau_profile");
    PlateauProfile out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= vals.size(); ++i) {
        // t = i - start is the offset inside the current plateau.
        if (i < vals.size() && vals[i] <= vals[start] + BigInt(i - start) - 1) continue;
        out.lengths.push_back(i - start);
        out.first_valuations.push_back(vals[start]);
        start = i;
    }
    return out;
}

BigInt plateau_bound(std::span<const BigInt> vals)
{
    const PlateauProfile prof = plateau_profile(vals);
    BigInt total = 0;
    for (std::size_t i = 0; i < prof.lengths.size(); ++i)
        total += prof.lengths[i] * prof.first_valuations[i] + binomial(prof.lengths[i], 2);
    return total - binomial(vals.size(), 2);
}

BigInt generalized_multiplicity_bound(const MultiBoundInput& in, bool order_opt)
{
    const std::size_t m = in.degrees.size();
    if (m == 0 || in.multiplicities.size() != m || in.alpha.size() != m)
        throw DomainError("generalized_multiplicity_bound: inconsistent factor count");
    const std::size_t k = in.alpha[0].size();
    if (k == 0) throw DomainError("generalized_multiplicity_bound: no terms");
    for (std::size_t i = 0; i < m; ++i) {
        if (in.multiplicities[i] > in.degrees[i])
            throw DomainError("generalized_multiplicity_bound: multiplicity exceeds degree for factor " +
                              std::to_string(i));
        if (in.alpha[i].size() != k) throw DomainError("generalized_multiplicity_bound: ragged exponent matrix");
        for (const auto& a : in.alpha[i])
            if (a < 0) throw DomainError("generalized_multiplicity_bound: negative exponent");
    }
    std::vector<BigInt> weight(k, BigInt(0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m; ++i) weight[j] += in.multiplicities[i] * in.alpha[i][j];
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    if (order_opt)
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight[a] < weight[b]; });
    unsigned long free_degree = 0;
    for (std::size_t i = 0; i < m; ++i) free_degree += in.degrees[i] - in.multiplicities[i];
    BigInt best = -1;
    for (std::size_t pos = 1; pos <= k; ++pos) {
        BigInt s = weight[order[pos - 1]] + free_degree * binomial(k + 1 - pos, 2);
        best = std::max(best, s);
    }
    return best;
}

std::string FpPreconditionReport::message() const
{
    if (ok) return "ok";
    return "characteristic " + to_string(p) + " must exceed max(alpha + d*beta) = " + to_string(max_degree) +
           " (term " + std::to_string(term) + ")";
}

BinomExprPoly<Rationals> hajos_family(unsigned long k)
{
    if (k < 3) throw DomainError("hajos_family requires k >= 3");
    BinomExprPoly<Rationals> p;
    p.u = 1;
    p.v = 1;
    p.terms.push_back({BigRat(-1), BigInt(0), BigInt(0)});
    p.terms.push_back({BigRat(1), BigInt(0), BigInt(2 * k + 3)});
    for (unsigned long j = 0; j <= k; ++j) {
        BigRat a(binomial(k + 1 + j, k + 1 - j) * (2 * k + 3), BigInt(2 * j + 1));
        a.canonicalize();
        p.terms.push_back({-a, BigInt(2 * j + 1), BigInt(k + 1 - j)});
    }
    return normalize(std::move(p));
}

BinomExprPoly<Rationals> binomial_identity(unsigned long k)
{
    if (k < 2) throw DomainError("binomial_identity requires k >= 2");
    BinomExprPoly<Rationals> p;
    p.u = 1;
    p.v = 1;
    p.terms.push_back({BigRat(-1), BigInt(k - 1), BigInt(0)});
    for (unsigned long t = 0; t <= k - 1; ++t) {
        BigRat c(binomial(k - 1, t));
        if ((k - 1 - t) % 2 == 1) c = -c;
        p.terms.push_back({c, BigInt(0), BigInt(t)});
    }
    return normalize(std::move(p));
}

namespace {

// C(n, r) with C(n, r) = 0 for r < 0 or r > n.
BigInt binom_signed(long n, long r)
{
    if (n < 0 || r < 0 || r > n) return BigInt(0);
    return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(r));
}

BigRat summand(unsigned long k, long m, long j)
{
    const long kk = static_cast<long>(k);
    BigRat a(BigInt(2 * kk + 3) * binom_signed(kk + 1 + j, kk + 1 - j), BigInt(2 * j + 1));
    a.canonicalize();
    return a * BigRat(binom_signed(kk + 1 - j, m - 2 * j - 1));
}

// F(m, j): summand divided by C(2k+3, m).
BigRat wz_f(unsigned long k, long m, long j)
{
    BigRat s = summand(k, m, j);
    if (sgn(s) == 0) return s;
    return s / BigRat(binom_signed(2 * static_cast<long>(k) + 3, m));
}

std::optional<BigRat> wz_r(unsigned long k, long m, long j)
{
    const long kk = static_cast<long>(k);
    const long den = (2 * kk + 3 - m) * (2 * j - m);
    if (den == 0) return std::nullopt;
    BigRat r(BigInt(2 * j) * (2 * j + 1) * (kk + j + 2 - m), BigInt(den));
    r.canonicalize();
    return r;
}

}  // namespace

BigRat hajos_coefficient_sum(unsigned long k, long m)
{
    BigRat total = 0;
    for (long j = 0; j <= static_cast<long>(k); ++j) total += summand(k, m, j);
    return total;
}

WzReport wz_identity_check(unsigned long k)
{
    if (k < 3) throw DomainError("wz_identity_check requires k >= 3");
    WzReport rep;
    const long kk = static_cast<long>(k);
    const long top = 2 * kk + 3;
    auto fail = [&](long m, std::optional<long> j, std::string what) {
        rep.passed = false;
        rep.failing_m = m;
        rep.failing_j = j;
        rep.failure = std::move(what);
        return rep;
    };
    for (long m = 1; m < top; ++m) {
        if (hajos_coefficient_sum(k, m) != BigRat(binom_signed(top, m))) return fail(m, std::nullopt, "sum");
        for (long j = 0; j <= kk; ++j) {
            auto r0 = wz_r(k, m, j), r1 = wz_r(k, m, j + 1);
            if (!r0 || !r1) {
                ++rep.skipped;
                continue;
            }
            BigRat lhs = BigRat(m) * (wz_f(k, m + 1, j) - wz_f(k, m, j));
            BigRat rhs = wz_f(k, m, j + 1) * *r1 - wz_f(k, m, j) * *r0;
            ++rep.checked;
            if (lhs != rhs) return fail(m, j, "recurrence");
        }
    }
    // Base case m = 2k+2: only j = k contributes and the sum is 1.
    const long base = 2 * kk + 2;
    BigRat total = 0;
    for (long j = 0; j <= kk; ++j) {
        BigRat f = wz_f(k, base, j);
        if (j != kk && sgn(f) != 0) return fail(base, j, "base case has a nonzero term before j = k");
        total += f;
    }
    if (total != 1) return fail(base, std::nullopt, "base case sum");
    return rep;
}

// ---------------------------------------------------------------------------
// Valuation search

namespace {

// Dense coefficients of X^a (1+X)^b.
std::vector<BigInt> binom_column(unsigned a, unsigned b, std::size_t len)
{
    std::vector<BigInt> col(len, BigInt(0));
    for (unsigned t = 0; t <= b; ++t) col[a + t] = binomial(static_cast<unsigned long>(b), t);
    return col;
}

// Kernel vector of a (k-1) x k matrix of full row rank.
std::vector<BigRat> kernel_vector(std::vector<std::vector<BigRat>> rows, std::size_t k)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        BigRat inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            BigRat f = rows[i][c];
            for (std::size_t t = 0; t < k; ++t) rows[i][t] -= f * rows[r][t];
        }
        pivots.push_back(c);
        ++r;
    }
    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    std::vector<BigRat> x(k, BigRat(0));
    x[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -rows[i][free_col];
    return x;
}

std::vector<BigRat> primitive_integers(std::vector<BigRat> c)
{
    BigInt l = 1, g = 0;
    for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : c) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g != 0)
        for (auto& x : c) x /= g;
    auto first = std::find_if(c.begin(), c.end(), [](const BigRat& x) { return sgn(x) != 0; });
    if (first != c.end() && sgn(*first) < 0)
        for (auto& x : c) x = -x;
    return c;
}

}  // namespace

std::optional<std::pair<long, std::vector<BigRat>>> best_combination(std::span<const std::pair<unsigned, unsigned>> exps)
{
    const std::size_t k = exps.size();
    std::size_t len = 1;
    for (const auto& [a, b] : exps) len = std::max<std::size_t>(len, a + b + 1);
    std::vector<std::vector<BigInt>> cols;
    for (const auto& [a, b] : exps) cols.push_back(binom_column(a, b, len));

    // Incremental echelon basis of the rows seen so far.
    std::vector<std::vector<BigRat>> basis;
    std::vector<std::size_t> basis_pivot;
    std::vector<std::vector<BigRat>> raw;
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<BigRat> row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = cols[j][i];
        std::vector<BigRat> red = row;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const BigRat f = red[basis_pivot[b]];
            if (sgn(f) == 0) continue;
            for (std::size_t t = 0; t < k; ++t) red[t] -= f * basis[b][t];
        }
        auto nz = std::find_if(red.begin(), red.end(), [](const BigRat& x) { return sgn(x) != 0; });
        if (nz == red.end()) continue;
        if (basis.size() + 1 == k) {
            auto coefs = primitive_integers(kernel_vector(basis, k));
            // A zero entry means fewer than k terms; that sum is found through its own subset.
            if (std::any_of(coefs.begin(), coefs.end(), [](const BigRat& c) { return sgn(c) == 0; }))
                return std::nullopt;
            unsigned min_alpha = exps[0].first;
            for (const auto& e : exps) min_alpha = std::min(min_alpha, e.first);
            return std::make_pair(static_cast<long>(i) - static_cast<long>(min_alpha), std::move(coefs));
        }
        const std::size_t piv = static_cast<std::size_t>(nz - red.begin());
        const BigRat inv = 1 / red[piv];
        for (auto& x : red) x *= inv;
        for (auto& b : basis) {
            const BigRat f = b[piv];
            if (sgn(f) == 0) continue;
            for (std::size_t t = 0; t < k; ++t) b[t] -= f * red[t];
        }
        basis.push_back(std::move(red));
        basis_pivot.push_back(piv);
    }
    return std::nullopt;
}

SearchResult max_valuation_search(const SearchOptions& opt)
{
    if (opt.k < 1 || opt.k > 5) throw DomainError("max_valuation_search: k must be in [1, 5]");
    if (opt.exp_cap > 12) throw DomainError("max_valuation_search: exp_cap must be <= 12");
    const unsigned side = opt.exp_cap + 1;
    const unsigned cells = side * side;

    // Exponent sets are k-subsets of the grid; enumerate them all when the
    // count is within the sample budget.
    const BigInt total = binomial(static_cast<unsigned long>(cells), opt.k);
    const bool exhaustive = total <= BigInt(static_cast<unsigned long>(opt.samples));
    const std::size_t count = exhaustive ? total.get_ui() : opt.samples;

    auto decode_subset = [&](std::size_t index) {
        // Unrank a k-subset in colexicographic order.
        std::vector<unsigned> pick(opt.k);
        std::size_t rest = index;
        for (unsigned t = opt.k; t-- > 0;) {
            unsigned c = t;
            while (binomial(static_cast<unsigned long>(c + 1), t + 1) <= BigInt(static_cast<unsigned long>(rest))) ++c;
            pick[t] = c;
            rest -= binomial(static_cast<unsigned long>(c), t + 1).get_ui();
        }
        return pick;
    };

    constexpr std::size_t kShards = 8;
    std::vector<SearchResult> shard_best(kShards);
    auto run_shard = [&](std::size_t s) {
        Rng rng(opt.seed * 0x9E3779B97F4A7C15ULL + s);
        SearchResult& best = shard_best[s];
        for (std::size_t i = s; i < count; i += kShards) {
            std::vector<unsigned> cellsel;
            if (exhaustive) {
                cellsel = decode_subset(i);
            } else {
                std::vector<unsigned> pool(cells);
                std::iota(pool.begin(), pool.end(), 0u);
                for (unsigned t = 0; t < opt.k; ++t) {
                    std::uniform_int_distribution<unsigned> pickd(t, cells - 1);
                    std::swap(pool[t], pool[pickd(rng)]);
                }
                cellsel.assign(pool.begin(), pool.begin() + opt.k);
            }
            std::vector<std::pair<unsigned, unsigned>> exps;
            for (unsigned c : cellsel) exps.emplace_back(c / side, c % side);
            std::sort(exps.begin(), exps.end());
            ++best.instances;
            auto found = best_combination(exps);
            if (!found || found->first <= best.best_gap) continue;
            if (opt.coeff_cap != 0) {
                bool too_big = std::any_of(found->second.begin(), found->second.end(), [&](const BigRat& c) {
                    return abs(c.get_num()) > opt.coeff_cap;
                });
                if (too_big) continue;
            }
            best.best_gap = found->first;
            BinomExprPoly<Rationals> w;
            w.u = 1;
            w.v = 1;
            for (std::size_t j = 0; j < exps.size(); ++j)
                w.terms.push_back({found->second[j], BigInt(exps[j].first), BigInt(exps[j].second)});
            best.witness = normalize(std::move(w));
        }
    };
    if (opt.exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::size_t s = 0; s < kShards; ++s) run_shard(s);
    } else {
        for (std::size_t s = 0; s < kShards; ++s) run_shard(s);
    }

    SearchResult out;
    out.exhaustive = exhaustive;
    for (auto& r : shard_best) {
        out.instances += r.instances;
        if (r.best_gap > out.best_gap) {
            out.best_gap = r.best_gap;
            out.witness = r.witness;
        }
    }
    out.witness.u = 1;
    out.witness.v = 1;
    return out;
}

}  // namespace lacunary
