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

// Reference computations for the tests. Everything here is schoolbook
// arithmetic on plain vectors and maps, written without the library's
// algorithms so that the two can be compared.

#ifndef LACUNARY_TEST_ORACLES_HPP
#define LACUNARY_TEST_ORACLES_HPP

#include "lacunary/poly.hpp"

#include <gmpxx.h>

#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;  // dense univariate, index = exponent

inline void trim(Vec& a)
{
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

inline Vec mul(const Vec& a, const Vec& b)
{
    if (a.empty() || b.empty()) return {};
    Vec c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

inline Vec add(Vec a, const Vec& b)
{
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

inline Vec pow(const Vec& a, unsigned long e)
{
    Vec r{Rat(1)};
    for (unsigned long i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

/// -1 when zero.
inline long valuation(const Vec& a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0) return static_cast<long>(i);
    return -1;
}

/// sum a X^alpha (u X^d + v)^beta by the binomial theorem, term by term.
inline Vec expand(const lacunary::BinomExprPoly<lacunary::Rationals>& p)
{
    Vec out;
    const unsigned long d = p.d.get_ui();
    for (const auto& t : p.terms) {
        const unsigned long a = t.alpha.get_ui(), b = t.beta.get_ui();
        Vec term(a + d * b + 1, Rat(0));
        for (unsigned long i = 0; i <= b; ++i) {
            Int c;
            mpz_bin_uiui(c.get_mpz_t(), b, i);
            Rat ui = 1, vi = 1;
            for (unsigned long s = 0; s < i; ++s) ui *= p.u;
            for (unsigned long s = 0; s < b - i; ++s) vi *= p.v;
            term[a + d * i] += t.coef * Rat(c) * ui * vi;
        }
        out = add(std::move(out), term);
    }
    return out;
}

/// Same over Z/p, entries in [0, p).
inline std::vector<long> expand_mod(const std::vector<std::tuple<long, unsigned long, unsigned long>>& terms, long u,
                                    long v, long p)
{
    std::vector<long> out;
    for (const auto& [a, al, be] : terms) {
        // (u X + v)^be by repeated multiplication
        std::vector<long> pw{1};
        for (unsigned long s = 0; s < be; ++s) {
            std::vector<long> next(pw.size() + 1, 0);
            for (std::size_t i = 0; i < pw.size(); ++i) {
                next[i] = (next[i] + pw[i] * v) % p;
                next[i + 1] = (next[i + 1] + pw[i] * u) % p;
            }
            pw = std::move(next);
        }
        if (out.size() < al + pw.size()) out.resize(al + pw.size(), 0);
        for (std::size_t i = 0; i < pw.size(); ++i) out[al + i] = ((out[al + i] + a * pw[i]) % p + p) % p;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

/// Rank over Q by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rat>> m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            const Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline long inv_mod(long a, long p)
{
    long r = 1, e = p - 2, b = ((a % p) + p) % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

/// Rank over Z/p.
inline std::size_t rank_mod(std::vector<std::vector<long>> m, long p)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] % p == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        const long iv = inv_mod(m[r][c], p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] % p == 0) continue;
            const long f = m[i][c] * iv % p;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

/// Whether polynomials over F_p of degree < 2p are linearly dependent over
/// F_p[X^p]. Write f_j = sum_r X^r g_jr(T), T = X^p, deg g_jr <= 1. A
/// dependency with coefficients c_j(T) exists iff one exists with
/// deg c_j <= k - 1 (Cramer), which is a linear system over F_p.
inline bool dependent_over_frobenius(const std::vector<std::vector<long>>& fs, long p)
{
    const std::size_t k = fs.size();
    const std::size_t D = k - 1;
    // unknowns: c_{j,e}, j < k, e <= D ; equations: coefficient of X^r T^t.
    const std::size_t unknowns = k * (D + 1);
    std::vector<std::vector<long>> eq;  // rows indexed by (r, t), columns by unknowns
    for (long r = 0; r < p; ++r)
        for (std::size_t t = 0; t <= D + 1; ++t) {
            std::vector<long> row(unknowns, 0);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t e = 0; e <= D; ++e) {
                    if (t < e || t - e > 1) continue;
                    const std::size_t deg = static_cast<std::size_t>(r) + (t - e) * static_cast<std::size_t>(p);
                    const long g = deg < fs[j].size() ? fs[j][deg] : 0;
                    row[j * (D + 1) + e] = ((g % p) + p) % p;
                }
            eq.push_back(std::move(row));
        }
    return rank_mod(eq, p) < unknowns;
}

// ---------------------------------------------------------------------------
// Bivariate

using Bi = std::map<std::pair<Int, Int>, Rat>;  // (alpha, beta) -> coefficient

inline Bi bi_mul(const Bi& a, const Bi& b)
{
    Bi c;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) c[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    for (auto it = c.begin(); it != c.end();) it = sgn(it->second) == 0 ? c.erase(it) : std::next(it);
    return c;
}

inline lacunary::LacunaryPoly<lacunary::Rationals> to_lacunary(const Bi& a)
{
    lacunary::LacunaryPoly<lacunary::Rationals> p;
    for (const auto& [e, c] : a) p.terms.push_back({c, e.first, e.second});
    return lacunary::normalize(std::move(p));
}

/// Order of vanishing of P along the curve A(X) Y = B(X), where A and B are
/// coprime and A != 0: the least m with (d/dY)^m P not vanishing on the
/// curve. Only for small exponents.
inline long curve_multiplicity(const Bi& p, const Vec& a, const Vec& b)
{
    Bi cur = p;
    for (long m = 0;; ++m) {
        if (cur.empty()) return m;  // cannot happen for nonzero P
        // A^D * cur(X, B/A) with D the Y-degree of cur.
        unsigned long deg_y = 0;
        for (const auto& [e, c] : cur) deg_y = std::max(deg_y, e.second.get_ui());
        Vec total;
        for (const auto& [e, c] : cur) {
            Vec term{c};
            term = mul(term, pow(b, e.second.get_ui()));
            term = mul(term, pow(a, deg_y - e.second.get_ui()));
            Vec shift(e.first.get_ui(), Rat(0));
            shift.insert(shift.end(), term.begin(), term.end());
            trim(shift);
            total = add(std::move(total), shift);
        }
        if (!total.empty()) return m;
        Bi next;
        for (const auto& [e, c] : cur)
            if (e.second > 0) next[{e.first, e.second - 1}] += c * Rat(e.second);
        cur = std::move(next);
    }
}

/// Swaps the roles of X and Y.
inline Bi swap_xy(const Bi& p)
{
    Bi out;
    for (const auto& [e, c] : p) out[{e.second, e.first}] = c;
    return out;
}

}  // namespace oracle

#endif  // LACUNARY_TEST_ORACLES_HPP
