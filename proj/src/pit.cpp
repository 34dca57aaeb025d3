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

#include "lacunary/pit.hpp"

#include "lacunary/bounds.hpp"
#include "lacunary/gap.hpp"

#include <map>

namespace lacunary {

std::string to_string(Verdict v) { return v == Verdict::Zero ? "Zero" : "NonZero"; }

std::string to_string(Certainty c) { return c == Certainty::Deterministic ? "Deterministic" : "MonteCarlo"; }

std::string to_string(Witness::Kind k)
{
    switch (k) {
    case Witness::Kind::CoefficientKey: return "CoefficientKey";
    case Witness::Kind::ExactSum: return "ExactSum";
    case Witness::Kind::SameSign: return "SameSign";
    case Witness::Kind::AdicValuation: return "AdicValuation";
    case Witness::Kind::ModularImage: return "ModularImage";
    }
    return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Main path: u, v != 0, d = 1.

struct PartData {
    std::vector<unsigned long> shift;  // alpha_j - alpha_start
    unsigned long top = 0;             // max shift
};

template <class F>
PartData part_shifts(const BinomExprPoly<F>& p, Interval part)
{
    PartData pd;
    const BigInt& a0 = p.terms[part.begin].alpha;
    for (std::size_t j = part.begin; j < part.end; ++j) {
        BigInt s = p.terms[j].alpha - a0;
        if (!fits_ulong(s)) throw std::logic_error("gap part wider than its bound");
        pd.shift.push_back(s.get_ui());
        pd.top = std::max(pd.top, s.get_ui());
    }
    return pd;
}

template <class F>
std::vector<typename F::Elem> powers(const F& f, const typename F::Elem& x, unsigned long n)
{
    std::vector<typename F::Elem> out{f.one()};
    for (unsigned long i = 1; i <= n; ++i) out.push_back(f.mul(out.back(), x));
    return out;
}

// After X^alpha_start is factored out and Y = uX + v is substituted, the
// part scaled by u^top is sum_j a_j u^{top-s_j} (Y - v)^{s_j} Y^{beta_j}.
// Returns the smallest exponent of Y with a nonzero coefficient.
template <class F>
std::optional<BigInt> part_first_nonzero(const BinomExprPoly<F>& p, Interval part)
{
    const F& f = p.field;
    const PartData pd = part_shifts(p, part);
    const auto upow = powers(f, p.u, pd.top);
    const auto mvpow = powers(f, f.neg(p.v), pd.top);
    std::map<BigInt, typename F::Elem> coeffs;
    for (std::size_t t = 0; t < pd.shift.size(); ++t) {
        const auto& term = p.terms[part.begin + t];
        const unsigned long s = pd.shift[t];
        const auto c0 = f.mul(term.coef, upow[pd.top - s]);
        BigInt binom = 1;
        for (unsigned long l = 0; l <= s; ++l) {
            if (l > 0) binom = binom * (s - l + 1) / l;
            BigInt key = term.beta + (s - l);
            auto c = f.mul(f.mul(c0, f.from_int(binom)), mvpow[l]);
            auto [it, fresh] = coeffs.try_emplace(std::move(key), c);
            if (!fresh) it->second = f.add(it->second, c);
        }
    }
    for (const auto& [key, c] : coeffs)
        if (!f.is_zero(c)) return key;
    return std::nullopt;
}

// Coefficient of Y^key in the scaled part, recomputed term by term.
template <class F>
typename F::Elem part_coefficient(const BinomExprPoly<F>& p, Interval part, const BigInt& key)
{
    const F& f = p.field;
    const PartData pd = part_shifts(p, part);
    auto total = f.zero();
    for (std::size_t t = 0; t < pd.shift.size(); ++t) {
        const auto& term = p.terms[part.begin + t];
        const BigInt l = term.beta + pd.shift[t] - key;
        if (l < 0 || l > pd.shift[t]) continue;
        const unsigned long li = l.get_ui();
        auto c = f.mul(term.coef, f.pow(p.u, BigInt(pd.top - pd.shift[t])));
        c = f.mul(c, f.from_int(binomial(pd.shift[t], li)));
        c = f.mul(c, f.pow(f.neg(p.v), BigInt(li)));
        total = f.add(total, c);
    }
    return total;
}

template <class F>
std::vector<Interval> alpha_parts(const BinomExprPoly<F>& p)
{
    std::vector<BigInt> alphas;
    for (const auto& t : p.terms) alphas.push_back(t.alpha);
    return gap_partition(alphas, 1).intervals;
}

template <class F>
ZeroTestVerdict main_path(const BinomExprPoly<F>& p, Exec exec)
{
    const auto parts = alpha_parts(p);
    std::optional<std::size_t> hit;
    std::optional<BigInt> hit_key;
    if (exec == Exec::Serial || parts.size() < 2) {
        for (std::size_t i = 0; i < parts.size() && !hit; ++i) {
            if (auto key = part_first_nonzero(p, parts[i])) {
                hit = i;
                hit_key = std::move(key);
            }
        }
    } else {
        std::vector<std::optional<BigInt>> keys(parts.size());
        const auto n = static_cast<std::ptrdiff_t>(parts.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) keys[i] = part_first_nonzero(p, parts[i]);
        for (std::size_t i = 0; i < parts.size() && !hit; ++i) {
            if (keys[i]) {
                hit = i;
                hit_key = keys[i];
            }
        }
    }
    if (!hit) return {};
    Witness w;
    w.kind = Witness::Kind::CoefficientKey;
    w.part_begin = parts[*hit].begin;
    w.part_end = parts[*hit].end;
    w.key = *hit_key;
    return ZeroTestVerdict{Verdict::NonZero, Certainty::Deterministic, 0, w};
}

// ---------------------------------------------------------------------------
// Degenerate bases: u = 0 groups by alpha with base v; v = 0 groups by
// alpha + d beta with base u.

template <class F>
struct Groups {
    typename F::Elem base;
    std::map<BigInt, std::vector<std::pair<typename F::Elem, BigInt>>> sums;
};

template <class F>
Groups<F> degenerate_groups(const BinomExprPoly<F>& p)
{
    const F& f = p.field;
    Groups<F> g;
    const bool u_zero = f.is_zero(p.u);
    g.base = u_zero ? p.v : p.u;
    for (const auto& t : p.terms) {
        BigInt key = u_zero ? t.alpha : BigInt(t.alpha + p.d * t.beta);
        g.sums[key].emplace_back(t.coef, t.beta);
    }
    return g;
}

bool is_degenerate(const BinomExprPoly<Rationals>& p) { return sgn(p.u) == 0 || sgn(p.v) == 0; }

template <class F>
typename F::Elem power_sum(const F& f, const std::vector<std::pair<typename F::Elem, BigInt>>& pairs,
                           const typename F::Elem& base)
{
    auto s = f.zero();
    for (const auto& [a, b] : pairs) s = f.add(s, f.mul(a, f.pow(base, b)));
    return s;
}

ZeroTestVerdict degenerate_q(const BinomExprPoly<Rationals>& p, const PitOptions& opt)
{
    const auto groups = degenerate_groups(p);
    Rng rng(opt.seed);
    const std::size_t lambda = opt.lambda + ceil_log2(groups.sums.size());
    ZeroTestVerdict out;
    for (const auto& [key, pairs] : groups.sums) {
        auto v = degenerate_power_sum_test(pairs, groups.base, lambda, rng, opt.exact_bit_limit);
        if (v.verdict == Verdict::NonZero) {
            v.witness->key = key;
            return v;
        }
        if (v.certainty == Certainty::MonteCarlo) {
            out.certainty = Certainty::MonteCarlo;
            out.error_exponent = opt.lambda;
        }
    }
    return out;
}

template <class F>
ZeroTestVerdict degenerate_exact(const BinomExprPoly<F>& p)
{
    const auto groups = degenerate_groups(p);
    for (const auto& [key, pairs] : groups.sums) {
        if (!p.field.is_zero(power_sum(p.field, pairs, groups.base))) {
            Witness w;
            w.kind = Witness::Kind::ExactSum;
            w.key = key;
            return ZeroTestVerdict{Verdict::NonZero, Certainty::Deterministic, 0, w};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Residue classes for u X^d + v.

template <class F>
std::map<BigInt, BinomExprPoly<F>> residue_classes(const BinomExprPoly<F>& p)
{
    std::map<BigInt, BinomExprPoly<F>> out;
    for (const auto& t : p.terms) {
        BigInt q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.alpha.get_mpz_t(), p.d.get_mpz_t());
        auto it = out.find(r);
        if (it == out.end()) it = out.emplace(r, BinomExprPoly<F>{p.field, p.u, p.v, BigInt(1), {}}).first;
        it->second.terms.push_back({t.coef, q, t.beta});
    }
    for (auto& [r, cls] : out) cls = normalize(std::move(cls));
    return out;
}

template <class F, class Test>
ZeroTestVerdict two_sparse(const BinomExprPoly<F>& p_in, const PitOptions& opt, Test test)
{
    const BinomExprPoly<F> p = normalize(p_in);
    if (p.d == 1) return test(p, opt);
    const auto classes = residue_classes(p);
    PitOptions sub = opt;
    sub.lambda = opt.lambda + ceil_log2(classes.size());
    ZeroTestVerdict out;
    for (const auto& [r, cls] : classes) {
        auto v = test(cls, sub);
        if (v.verdict == Verdict::NonZero) {
            v.witness->residue_class = r;
            return v;
        }
        if (v.certainty == Certainty::MonteCarlo) {
            out.certainty = Certainty::MonteCarlo;
            out.error_exponent = opt.lambda;
        }
    }
    return out;
}

template <class F>
bool verify_main_witness(const BinomExprPoly<F>& p, const Witness& w)
{
    const auto parts = alpha_parts(p);
    const Interval claimed{w.part_begin, w.part_end};
    if (std::find(parts.begin(), parts.end(), claimed) == parts.end()) return false;
    return !p.field.is_zero(part_coefficient(p, claimed, w.key));
}

template <class F, class Degenerate>
bool verify_d1(const BinomExprPoly<F>& p, const Witness& w, Degenerate verify_group)
{
    const F& f = p.field;
    if (w.kind == Witness::Kind::CoefficientKey) {
        if (f.is_zero(p.u) || f.is_zero(p.v)) return false;
        return verify_main_witness(p, w);
    }
    if (!f.is_zero(p.u) && !f.is_zero(p.v)) return false;
    const auto groups = degenerate_groups(p);
    auto it = groups.sums.find(w.key);
    if (it == groups.sums.end()) return false;
    return verify_group(it->second, groups.base, w);
}

template <class F, class Degenerate>
bool verify_any(const BinomExprPoly<F>& p_in, const ZeroTestVerdict& verdict, Degenerate verify_group)
{
    if (verdict.verdict != Verdict::NonZero || !verdict.witness) return false;
    const BinomExprPoly<F> p = normalize(p_in);
    const Witness& w = *verdict.witness;
    if (p.d == 1) return w.residue_class == 0 && verify_d1(p, w, verify_group);
    const auto classes = residue_classes(p);
    auto it = classes.find(w.residue_class);
    if (it == classes.end()) return false;
    return verify_d1(it->second, w, verify_group);
}

}  // namespace

ZeroTestVerdict zero_test_q(const BinomExprPoly<Rationals>& p_in, const PitOptions& opt)
{
    const BinomExprPoly<Rationals> p = normalize(p_in);
    validate_exponents(p.terms);
    if (p.d != 1) throw DomainError("zero_test_q handles d = 1; use zero_test_two_sparse");
    if (p.terms.empty()) return {};
    if (is_degenerate(p)) return degenerate_q(p, opt);
    return main_path(p, opt.exec);
}

ZeroTestVerdict zero_test_fp(const BinomExprPoly<GaloisField>& p_in, const PitOptions& opt)
{
    const BinomExprPoly<GaloisField> p = normalize(p_in);
    validate_exponents(p.terms);
    if (p.d != 1) throw DomainError("zero_test_fp handles d = 1; use zero_test_two_sparse");
    const auto pre = fp_precondition_check(p);
    if (!pre.ok) throw PreconditionError(pre.message());
    if (p.terms.empty()) return {};
    if (p.field.is_zero(p.u) || p.field.is_zero(p.v)) return degenerate_exact(p);
    return main_path(p, opt.exec);
}

ZeroTestVerdict zero_test_two_sparse(const BinomExprPoly<Rationals>& p, const PitOptions& opt)
{
    validate_exponents(p.terms);
    return two_sparse(p, opt, [](const BinomExprPoly<Rationals>& q, const PitOptions& o) { return zero_test_q(q, o); });
}

ZeroTestVerdict zero_test_two_sparse(const BinomExprPoly<GaloisField>& p, const PitOptions& opt)
{
    validate_exponents(p.terms);
    const auto pre = fp_precondition_check(normalize(p));
    if (!pre.ok) throw PreconditionError(pre.message());
    return two_sparse(p, opt,
                      [](const BinomExprPoly<GaloisField>& q, const PitOptions& o) { return zero_test_fp(q, o); });
}

bool verify_witness(const BinomExprPoly<Rationals>& p, const ZeroTestVerdict& verdict)
{
    return verify_any(p, verdict, [](const auto& pairs, const BigRat& base, const Witness& w) {
        return verify_power_sum_witness(pairs, base, w);
    });
}

bool verify_witness(const BinomExprPoly<GaloisField>& p, const ZeroTestVerdict& verdict)
{
    const GaloisField& f = p.field;
    return verify_any(p, verdict, [&](const auto& pairs, const FpsElem& base, const Witness& w) {
        return w.kind == Witness::Kind::ExactSum && !f.is_zero(power_sum(f, pairs, base));
    });
}

}  // namespace lacunary
