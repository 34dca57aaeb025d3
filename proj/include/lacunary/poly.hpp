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

#ifndef LACUNARY_POLY_HPP
#define LACUNARY_POLY_HPP

#include "lacunary/coeffring.hpp"
#include "lacunary/dense.hpp"
#include "lacunary/parallel.hpp"

#include <algorithm>
#include <functional>
#include <span>
#include <tuple>
#include <vector>

namespace lacunary {

/// A dense materialization would exceed the configured degree cap.
class DegreeCapError : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr unsigned long kDefaultOracleCap = 1000000;
inline constexpr std::size_t kDefaultWronskianCap = 8;

/// a X^alpha Y^beta, or a X^alpha (uX^d + v)^beta inside a BinomExprPoly.
template <class F>
struct Term {
    typename F::Elem coef;
    BigInt alpha;
    BigInt beta;
};

/// Sum of terms a X^alpha Y^beta with unbounded exponents. Canonical form:
/// nonzero coefficients, distinct exponent pairs, sorted by (alpha, beta).
template <class F>
struct LacunaryPoly {
    F field{};
    std::vector<Term<F>> terms;

    std::size_t size() const { return terms.size(); }
    bool is_zero() const { return terms.empty(); }
};

/// Sum of terms a X^alpha (u X^d + v)^beta. Canonical form sorts by alpha
/// then beta, with the same merging rules as LacunaryPoly.
template <class F>
struct BinomExprPoly {
    F field{};
    typename F::Elem u{};
    typename F::Elem v{};
    BigInt d = 1;
    std::vector<Term<F>> terms;

    std::size_t size() const { return terms.size(); }
};

template <class F>
struct UniTerm {
    typename F::Elem coef;
    BigInt exp;
};

/// Univariate lacunary polynomial, sorted by exponent.
template <class F>
struct LacunaryUni {
    F field{};
    std::vector<UniTerm<F>> terms;

    bool is_zero() const { return terms.empty(); }
};

namespace detail {

template <class F, class T, class Key>
void merge_sorted(const F& field, std::vector<T>& terms, Key key)
{
    std::stable_sort(terms.begin(), terms.end(), [&](const T& a, const T& b) { return key(a) < key(b); });
    std::vector<T> out;
    for (auto& t : terms) {
        if (!out.empty() && key(out.back()) == key(t))
            out.back().coef = field.add(out.back().coef, t.coef);
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [&](const T& t) { return field.is_zero(t.coef); });
    terms = std::move(out);
}

}  // namespace detail

template <class F>
LacunaryPoly<F> normalize(LacunaryPoly<F> p)
{
    detail::merge_sorted(p.field, p.terms, [](const Term<F>& t) { return std::tie(t.alpha, t.beta); });
    return p;
}

/// A zero base kills every term with beta > 0 (0^0 = 1).
template <class F>
BinomExprPoly<F> normalize(BinomExprPoly<F> p)
{
    if (p.d < 1) throw DomainError("base exponent d must be positive");
    if (p.field.is_zero(p.u) && p.field.is_zero(p.v))
        std::erase_if(p.terms, [](const Term<F>& t) { return t.beta > 0; });
    detail::merge_sorted(p.field, p.terms, [](const Term<F>& t) { return std::tie(t.alpha, t.beta); });
    return p;
}

template <class F>
LacunaryUni<F> normalize(LacunaryUni<F> p)
{
    detail::merge_sorted(p.field, p.terms, [](const UniTerm<F>& t) -> const BigInt& { return t.exp; });
    return p;
}

template <class F>
void validate_exponents(const std::vector<Term<F>>& terms)
{
    for (const auto& t : terms)
        if (t.alpha < 0 || t.beta < 0) throw DomainError("negative exponent");
}

// ---------------------------------------------------------------------------
// Expansion oracle

namespace detail {

// Coefficients of a X^alpha (u X^d + v)^beta added into out.
template <class F>
void expand_term(const F& f, const typename F::Elem& u, const typename F::Elem& v, unsigned long d,
                 const Term<F>& t, std::vector<typename F::Elem>& out)
{
    const unsigned long alpha = t.alpha.get_ui(), beta = t.beta.get_ui();
    if (f.is_zero(u)) {
        out[alpha] = f.add(out[alpha], f.mul(t.coef, f.pow(v, t.beta)));
        return;
    }
    std::vector<typename F::Elem> vpow{f.one()};
    if (!f.is_zero(v))
        for (unsigned long i = 1; i <= beta; ++i) vpow.push_back(f.mul(vpow.back(), v));
    BigInt binom = 1;
    auto upow = f.one();
    for (unsigned long s = 0; s <= beta; ++s) {
        if (s > 0) {
            binom = binom * (beta - s + 1) / s;
            upow = f.mul(upow, u);
        }
        const unsigned long rest = beta - s;
        if (f.is_zero(v) && rest > 0) continue;
        auto c = f.mul(f.mul(t.coef, f.from_int(binom)), f.mul(upow, vpow[f.is_zero(v) ? 0 : rest]));
        out[alpha + d * s] = f.add(out[alpha + d * s], c);
    }
}

}  // namespace detail

/// Dense expansion of a BinomExprPoly. Throws DegreeCapError when some
/// alpha + d*beta exceeds cap; never truncates.
template <class F>
DenseUni<F> expand_oracle(const BinomExprPoly<F>& p, unsigned long cap = kDefaultOracleCap,
                          Exec exec = Exec::Parallel)
{
    const F& f = p.field;
    validate_exponents(p.terms);
    BigInt top = 0;
    for (const auto& t : p.terms) top = std::max(top, BigInt(t.alpha + p.d * t.beta));
    if (top > cap) throw DegreeCapError("expansion degree " + to_string(top) + " exceeds cap " + std::to_string(cap));
    const std::size_t n = p.terms.empty() ? 0 : top.get_ui() + 1;
    const unsigned long d = p.d.get_ui();
    std::vector<typename F::Elem> acc(n, f.zero());
    if (exec == Exec::Serial || p.terms.size() < 2) {
        for (const auto& t : p.terms) detail::expand_term(f, p.u, p.v, d, t, acc);
        return DenseUni<F>(f, std::move(acc));
    }
    const auto count = static_cast<std::ptrdiff_t>(p.terms.size());
#pragma omp parallel
    {
        std::vector<typename F::Elem> local(n, f.zero());
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t j = 0; j < count; ++j) detail::expand_term(f, p.u, p.v, d, p.terms[j], local);
#pragma omp critical(lacunary_expand_merge)
        for (std::size_t i = 0; i < n; ++i) acc[i] = f.add(acc[i], local[i]);
    }
    return DenseUni<F>(f, std::move(acc));
}

/// Dense form of a bivariate lacunary polynomial with both degrees <= cap.
template <class F>
DenseBi<F> to_dense(const LacunaryPoly<F>& p, unsigned long cap = kDefaultOracleCap)
{
    validate_exponents(p.terms);
    DenseBi<F> out(p.field);
    for (const auto& t : p.terms) {
        if (t.alpha > cap || t.beta > cap)
            throw DegreeCapError("term degree exceeds cap " + std::to_string(cap));
        out.add_to(t.alpha.get_ui(), t.beta.get_ui(), t.coef);
    }
    return out;
}

template <class F>
DenseUni<F> to_dense(const LacunaryUni<F>& p, unsigned long cap = kDefaultOracleCap)
{
    std::vector<typename F::Elem> c;
    for (const auto& t : p.terms) {
        if (t.exp < 0 || t.exp > cap) throw DegreeCapError("exponent outside [0, " + std::to_string(cap) + "]");
        const auto e = t.exp.get_ui();
        if (c.size() <= e) c.resize(e + 1, p.field.zero());
        c[e] = p.field.add(c[e], t.coef);
    }
    return DenseUni<F>(p.field, std::move(c));
}

template <class F>
LacunaryPoly<F> from_dense(const DenseBi<F>& q)
{
    LacunaryPoly<F> out{q.field(), {}};
    for (std::size_t j = 0; j < q.rows().size(); ++j)
        for (std::size_t i = 0; i < q.rows()[j].size(); ++i)
            if (!q.field().is_zero(q.rows()[j].coeffs()[i]))
                out.terms.push_back({q.rows()[j].coeffs()[i], BigInt(i), BigInt(j)});
    return normalize(std::move(out));
}

// ---------------------------------------------------------------------------
// Wronskian

/// det [f_j^{(i)}], i, j < k, by fraction-free elimination over F[X].
template <class F>
DenseUni<F> wronskian(std::span<const DenseUni<F>> fs, std::size_t max_k = kDefaultWronskianCap)
{
    if (fs.empty()) throw DomainError("wronskian of an empty family");
    if (fs.size() > max_k)
        throw DomainError("wronskian family of size " + std::to_string(fs.size()) + " exceeds cap " +
                          std::to_string(max_k));
    const F& f = fs[0].field();
    const std::size_t k = fs.size();
    std::vector<std::vector<DenseUni<F>>> m(k);
    for (std::size_t j = 0; j < k; ++j) {
        DenseUni<F> g = fs[j];
        for (std::size_t i = 0; i < k; ++i) {
            m[i].push_back(g);
            g = derivative(g);
        }
    }
    bool negate = false;
    DenseUni<F> prev = DenseUni<F>::constant(f, f.one());
    for (std::size_t c = 0; c + 1 < k; ++c) {
        if (m[c][c].is_zero()) {
            std::size_t r = c + 1;
            while (r < k && m[r][c].is_zero()) ++r;
            if (r == k) return DenseUni<F>(f);
            std::swap(m[c], m[r]);
            negate = !negate;
        }
        for (std::size_t i = c + 1; i < k; ++i) {
            for (std::size_t j = c + 1; j < k; ++j) {
                auto num = m[c][c] * m[i][j] - m[i][c] * m[c][j];
                auto q = divide_exact(num, prev);
                if (!q) throw std::logic_error("wronskian: inexact Bareiss step");
                m[i][j] = std::move(*q);
            }
            m[i][c] = DenseUni<F>(f);
        }
        prev = m[c][c];
    }
    auto det = m[k - 1][k - 1];
    return negate ? scale(det, f.neg(f.one())) : det;
}

// ---------------------------------------------------------------------------
// Size measure

/// Bits of all coefficients and exponents (each at least 1 bit).
template <class F>
std::size_t size_measure(const LacunaryPoly<F>& p)
{
    std::size_t bits = 0;
    for (const auto& t : p.terms) bits += p.field.bit_size(t.coef) + bit_length(t.alpha) + bit_length(t.beta);
    return bits;
}

/// As for LacunaryPoly plus the base; d contributes only when d != 1.
template <class F>
std::size_t size_measure(const BinomExprPoly<F>& p)
{
    std::size_t bits = p.field.bit_size(p.u) + p.field.bit_size(p.v);
    if (p.d != 1) bits += bit_length(p.d);
    for (const auto& t : p.terms) bits += p.field.bit_size(t.coef) + bit_length(t.alpha) + bit_length(t.beta);
    return bits;
}

// ---------------------------------------------------------------------------
// Lacunary univariate helpers

template <class F>
BigInt degree(const LacunaryUni<F>& p)
{
    return p.terms.empty() ? BigInt(-1) : p.terms.back().exp;
}

/// Term-wise derivative. Requires characteristic 0 or p > deg f.
template <class F>
LacunaryUni<F> derivative_lacunary(const LacunaryUni<F>& p)
{
    const F& f = p.field;
    const BigInt ch = f.characteristic();
    if (ch != 0 && !p.terms.empty() && ch <= degree(p))
        throw PreconditionError("derivative needs characteristic > degree " + to_string(degree(p)));
    LacunaryUni<F> out{f, {}};
    for (const auto& t : p.terms) {
        if (t.exp == 0) continue;
        out.terms.push_back({f.mul(f.from_int(t.exp), t.coef), t.exp - 1});
    }
    return normalize(std::move(out));
}

}  // namespace lacunary

#endif  // LACUNARY_POLY_HPP
