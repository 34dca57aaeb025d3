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

#ifndef LACUNARY_DENSE_HPP
#define LACUNARY_DENSE_HPP

#include "lacunary/coeffring.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace lacunary {

/// Dense univariate polynomial over a field; coefficient i multiplies X^i.
/// The coefficient vector never has a zero leading entry.
template <class F>
class DenseUni {
public:
    using Elem = typename F::Elem;

    explicit DenseUni(F field = F{}, std::vector<Elem> coeffs = {})
        : field_(std::move(field)), c_(std::move(coeffs))
    {
        trim();
    }

    static DenseUni monomial(const F& field, Elem coef, std::size_t exp)
    {
        std::vector<Elem> c(exp + 1, field.zero());
        c[exp] = std::move(coef);
        return DenseUni(field, std::move(c));
    }
    static DenseUni constant(const F& field, Elem coef) { return monomial(field, std::move(coef), 0); }
    /// a X + b
    static DenseUni linear(const F& field, Elem a, Elem b) { return DenseUni(field, {std::move(b), std::move(a)}); }

    const F& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    const Elem& lead() const { return c_.back(); }

    void add_to(std::size_t i, const Elem& v)
    {
        if (i >= c_.size()) c_.resize(i + 1, field_.zero());
        c_[i] = field_.add(c_[i], v);
        trim();
    }

    bool operator==(const DenseUni& other) const
    {
        if (c_.size() != other.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!field_.equal(c_[i], other.c_[i])) return false;
        return true;
    }

private:
    void trim()
    {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    F field_;
    std::vector<Elem> c_;
};

template <class F>
DenseUni<F> operator+(const DenseUni<F>& a, const DenseUni<F>& b)
{
    const F& f = a.field();
    std::vector<typename F::Elem> r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(i), b.coeff(i));
    return DenseUni<F>(f, std::move(r));
}

template <class F>
DenseUni<F> operator-(const DenseUni<F>& a, const DenseUni<F>& b)
{
    const F& f = a.field();
    std::vector<typename F::Elem> r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(a.coeff(i), b.coeff(i));
    return DenseUni<F>(f, std::move(r));
}

template <class F>
DenseUni<F> operator*(const DenseUni<F>& a, const DenseUni<F>& b)
{
    const F& f = a.field();
    if (a.is_zero() || b.is_zero()) return DenseUni<F>(f);
    std::vector<typename F::Elem> r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a.coeffs()[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return DenseUni<F>(f, std::move(r));
}

template <class F>
DenseUni<F> scale(const DenseUni<F>& a, const typename F::Elem& s)
{
    const F& f = a.field();
    std::vector<typename F::Elem> r;
    r.reserve(a.size());
    for (const auto& c : a.coeffs()) r.push_back(f.mul(c, s));
    return DenseUni<F>(f, std::move(r));
}

template <class F>
DenseUni<F> shift_up(const DenseUni<F>& a, std::size_t k)
{
    if (a.is_zero()) return a;
    std::vector<typename F::Elem> r(k, a.field().zero());
    r.insert(r.end(), a.coeffs().begin(), a.coeffs().end());
    return DenseUni<F>(a.field(), std::move(r));
}

template <class F>
DenseUni<F> derivative(const DenseUni<F>& a)
{
    const F& f = a.field();
    std::vector<typename F::Elem> r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(f.from_int(BigInt(i)), a.coeffs()[i]));
    return DenseUni<F>(f, std::move(r));
}

template <class F>
typename F::Elem eval(const DenseUni<F>& a, const typename F::Elem& x)
{
    const F& f = a.field();
    auto acc = f.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.coeffs()[i]);
    return acc;
}

/// Quotient and remainder; b must be nonzero.
template <class F>
std::pair<DenseUni<F>, DenseUni<F>> divmod(const DenseUni<F>& a, const DenseUni<F>& b)
{
    const F& f = a.field();
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {DenseUni<F>(f), a};
    auto rem = a.coeffs();
    const std::size_t db = b.size() - 1;
    std::vector<typename F::Elem> quot(a.size() - db, f.zero());
    const auto lead_inv = f.inv(b.lead());
    for (std::size_t i = rem.size(); i-- > db;) {
        if (f.is_zero(rem[i])) continue;
        auto q = f.mul(rem[i], lead_inv);
        quot[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(q, b.coeffs()[j]));
    }
    rem.resize(db);
    return {DenseUni<F>(f, std::move(quot)), DenseUni<F>(f, std::move(rem))};
}

/// a / b when the division is exact, nullopt otherwise.
template <class F>
std::optional<DenseUni<F>> divide_exact(const DenseUni<F>& a, const DenseUni<F>& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

template <class F>
DenseUni<F> make_monic(const DenseUni<F>& a)
{
    if (a.is_zero()) return a;
    return scale(a, a.field().inv(a.lead()));
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
DenseUni<F> gcd(DenseUni<F> a, DenseUni<F> b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// base^e mod m for an exponent of arbitrary size.
template <class F>
DenseUni<F> powmod(DenseUni<F> base, BigInt e, const DenseUni<F>& m)
{
    const F& f = m.field();
    DenseUni<F> result = divmod(DenseUni<F>::constant(f, f.one()), m).second;
    base = divmod(base, m).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = divmod(result * base, m).second;
        base = divmod(base * base, m).second;
        e >>= 1;
    }
    return result;
}

/// f(X + c)
template <class F>
DenseUni<F> taylor_shift(const DenseUni<F>& a, const typename F::Elem& c)
{
    const F& f = a.field();
    auto r = a.coeffs();
    const std::size_t n = r.size();
    // Repeated synthetic division (Horner shift).
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) r[j - 1] = f.add(r[j - 1], f.mul(c, r[j]));
    return DenseUni<F>(f, std::move(r));
}

/// Largest v with X^v | f; nullopt for the zero polynomial.
template <class F>
std::optional<std::size_t> valuation(const DenseUni<F>& a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a.field().is_zero(a.coeffs()[i])) return i;
    return std::nullopt;
}

/// Dense bivariate polynomial stored by powers of Y: row j is the
/// coefficient of Y^j, a polynomial in X. No trailing zero rows.
template <class F>
class DenseBi {
public:
    using Elem = typename F::Elem;
    using Uni = DenseUni<F>;

    explicit DenseBi(F field = F{}, std::vector<Uni> rows = {}) : field_(std::move(field)), rows_(std::move(rows))
    {
        trim();
    }

    const F& field() const { return field_; }
    const std::vector<Uni>& rows() const { return rows_; }
    bool is_zero() const { return rows_.empty(); }
    std::ptrdiff_t y_degree() const { return static_cast<std::ptrdiff_t>(rows_.size()) - 1; }
    std::ptrdiff_t x_degree() const
    {
        std::ptrdiff_t d = -1;
        for (const auto& r : rows_) d = std::max(d, r.degree());
        return d;
    }
    Uni row(std::size_t j) const { return j < rows_.size() ? rows_[j] : Uni(field_); }
    Elem coeff(std::size_t i, std::size_t j) const { return j < rows_.size() ? rows_[j].coeff(i) : field_.zero(); }
    std::size_t term_count() const
    {
        std::size_t n = 0;
        for (const auto& r : rows_)
            for (const auto& c : r.coeffs()) n += field_.is_zero(c) ? 0 : 1;
        return n;
    }

    /// coefficient of X^i Y^j += v
    void add_to(std::size_t i, std::size_t j, const Elem& v)
    {
        if (j >= rows_.size()) rows_.resize(j + 1, Uni(field_));
        rows_[j].add_to(i, v);
        trim();
    }

    bool operator==(const DenseBi& other) const { return rows_ == other.rows_; }

private:
    void trim()
    {
        while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
    }

    F field_;
    std::vector<Uni> rows_;
};

template <class F>
DenseBi<F> operator+(const DenseBi<F>& a, const DenseBi<F>& b)
{
    std::vector<DenseUni<F>> rows;
    const std::size_t n = std::max(a.rows().size(), b.rows().size());
    for (std::size_t j = 0; j < n; ++j) rows.push_back(a.row(j) + b.row(j));
    return DenseBi<F>(a.field(), std::move(rows));
}

template <class F>
DenseBi<F> operator-(const DenseBi<F>& a, const DenseBi<F>& b)
{
    std::vector<DenseUni<F>> rows;
    const std::size_t n = std::max(a.rows().size(), b.rows().size());
    for (std::size_t j = 0; j < n; ++j) rows.push_back(a.row(j) - b.row(j));
    return DenseBi<F>(a.field(), std::move(rows));
}

template <class F>
DenseBi<F> operator*(const DenseBi<F>& a, const DenseBi<F>& b)
{
    if (a.is_zero() || b.is_zero()) return DenseBi<F>(a.field());
    std::vector<DenseUni<F>> rows(a.rows().size() + b.rows().size() - 1, DenseUni<F>(a.field()));
    for (std::size_t i = 0; i < a.rows().size(); ++i)
        for (std::size_t j = 0; j < b.rows().size(); ++j) rows[i + j] = rows[i + j] + a.rows()[i] * b.rows()[j];
    return DenseBi<F>(a.field(), std::move(rows));
}

/// Q(x0, Y) as a polynomial in Y.
template <class F>
DenseUni<F> specialize_x(const DenseBi<F>& q, const typename F::Elem& x0)
{
    std::vector<typename F::Elem> c;
    for (const auto& r : q.rows()) c.push_back(eval(r, x0));
    return DenseUni<F>(q.field(), std::move(c));
}

/// Q(X, Z + uX + v), returned with Z in the role of Y. The Z-valuation of
/// the result is the multiplicity of (Y - uX - v) in Q.
template <class F>
DenseBi<F> substitute_shift(const DenseBi<F>& q, const typename F::Elem& u, const typename F::Elem& v)
{
    const F& f = q.field();
    const std::size_t n = q.rows().size();
    std::vector<DenseUni<F>> line_pow{DenseUni<F>::constant(f, f.one())};
    const auto line = DenseUni<F>::linear(f, u, v);
    for (std::size_t j = 1; j < n; ++j) line_pow.push_back(line_pow.back() * line);
    std::vector<DenseUni<F>> out(n, DenseUni<F>(f));
    for (std::size_t j = 0; j < n; ++j) {
        if (q.rows()[j].is_zero()) continue;
        for (std::size_t t = 0; t <= j; ++t)
            out[t] = out[t] + scale(q.rows()[j] * line_pow[j - t], f.binomial(BigInt(j), t));
    }
    return DenseBi<F>(f, std::move(out));
}

/// Index of the lowest nonzero row; nullopt for zero.
template <class F>
std::optional<std::size_t> y_valuation(const DenseBi<F>& q)
{
    for (std::size_t j = 0; j < q.rows().size(); ++j)
        if (!q.rows()[j].is_zero()) return j;
    return std::nullopt;
}

/// Q / D in F[X][Y] when exact, nullopt otherwise.
template <class F>
std::optional<DenseBi<F>> divide_exact(const DenseBi<F>& q, const DenseBi<F>& d)
{
    const F& f = q.field();
    if (d.is_zero()) throw DomainError("bivariate division by zero");
    if (q.is_zero()) return q;
    const std::size_t e = d.rows().size() - 1;
    if (q.rows().size() < e + 1) return std::nullopt;
    auto rem = q.rows();
    std::vector<DenseUni<F>> quot(rem.size() - e, DenseUni<F>(f));
    const auto& lead = d.rows()[e];
    for (std::size_t j = rem.size(); j-- > e;) {
        if (rem[j].is_zero()) continue;
        auto qj = divide_exact(rem[j], lead);
        if (!qj) return std::nullopt;
        for (std::size_t t = 0; t <= e; ++t) rem[j - e + t] = rem[j - e + t] - (*qj) * d.rows()[t];
        quot[j - e] = std::move(*qj);
    }
    for (std::size_t j = 0; j < e; ++j)
        if (!rem[j].is_zero()) return std::nullopt;
    return DenseBi<F>(f, std::move(quot));
}

/// Number of times d divides q exactly (q nonzero, d non-constant).
template <class F>
unsigned division_multiplicity(DenseBi<F> q, const DenseBi<F>& d)
{
    unsigned m = 0;
    if (q.is_zero()) throw DomainError("multiplicity in the zero polynomial");
    while (auto next = divide_exact(q, d)) {
        q = std::move(*next);
        ++m;
    }
    return m;
}

}  // namespace lacunary

#endif  // LACUNARY_DENSE_HPP
