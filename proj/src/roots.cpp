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

#include "lacunary/roots.hpp"

#include <algorithm>

namespace lacunary {

namespace {

using GfPoly = DenseUni<GaloisField>;

void split_roots(const GfPoly& g, Rng& rng, std::vector<FpsElem>& out)
{
    const GaloisField& f = g.field();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(f.neg(f.div(g.coeffs()[0], g.coeffs()[1])));
        return;
    }
    const auto x = GfPoly::monomial(f, f.one(), 1);
    for (;;) {
        GfPoly probe(f);
        if (f.p() == 2) {
            // Absolute trace of a random residue: r + r^2 + ... + r^(2^(n-1)), q = 2^n.
            std::vector<FpsElem> c;
            for (std::ptrdiff_t i = 0; i < g.degree(); ++i) c.push_back(f.random(rng));
            GfPoly r(f, std::move(c)), acc = r;
            for (unsigned i = 1; i < f.degree(); ++i) {
                r = divmod(r * r, g).second;
                acc = acc + r;
            }
            probe = acc;
        } else {
            const auto shifted = x + GfPoly::constant(f, f.random(rng));
            probe = powmod(shifted, (f.order() - 1) / 2, g) - GfPoly::constant(f, f.one());
        }
        GfPoly d = gcd(g, probe);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_roots(d, rng, out);
            split_roots(divmod(g, d).first, rng, out);
            return;
        }
    }
}

BigInt lcm_of_denominators(const std::vector<BigRat>& c)
{
    BigInt l = 1;
    for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

// Integer coefficients with content 1 and positive leading coefficient.
std::vector<BigInt> primitive_part(const std::vector<BigRat>& c)
{
    const BigInt l = lcm_of_denominators(c);
    std::vector<BigInt> out;
    BigInt g = 0;
    for (const auto& x : c) {
        BigInt n = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        out.push_back(std::move(n));
    }
    if (g == 0) return out;
    if (out.back() < 0) g = -g;
    for (auto& n : out) n /= g;
    return out;
}

BigInt eval_mod(const std::vector<BigInt>& c, const BigInt& x, const BigInt& m)
{
    BigInt acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * x + c[i];
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

}  // namespace

std::vector<FpsElem> fp_dense_roots(const DenseUni<GaloisField>& f_in, Rng& rng, std::size_t degree_cap)
{
    if (f_in.is_zero()) throw DomainError("fp_dense_roots: zero polynomial");
    if (static_cast<std::size_t>(f_in.degree()) > degree_cap)
        throw DegreeCapError("fp_dense_roots: degree exceeds cap " + std::to_string(degree_cap));
    const GaloisField& f = f_in.field();
    std::vector<FpsElem> out;
    if (f_in.degree() == 0) return out;
    const GfPoly m = make_monic(f_in);
    const auto x = GfPoly::monomial(f, f.one(), 1);
    const GfPoly split = gcd(m, powmod(x, f.order(), m) - x);
    split_roots(split, rng, out);
    std::sort(out.begin(), out.end(), [&](const FpsElem& a, const FpsElem& b) { return f.less(a, b); });
    return out;
}

std::vector<BigRat> dense_rational_roots(const DenseUni<Rationals>& f_in, Rng& rng)
{
    if (f_in.is_zero()) throw DomainError("dense_rational_roots: zero polynomial");
    const Rationals q;
    std::vector<BigRat> roots;
    const std::size_t val = *valuation(f_in);
    if (val > 0) roots.emplace_back(0);
    std::vector<BigRat> c(f_in.coeffs().begin() + static_cast<std::ptrdiff_t>(val), f_in.coeffs().end());
    DenseUni<Rationals> f(q, std::move(c));
    if (f.degree() >= 1) {
        const auto sq = divmod(f, gcd(f, derivative(f))).first;
        const std::vector<BigInt> g = primitive_part(sq.coeffs());
        const std::size_t n = g.size() - 1;
        if (n == 1) {
            BigRat r(-g[0], g[1]);
            r.canonicalize();
            roots.push_back(r);
        } else if (n > 1) {
            const BigInt lc = g.back();
            BigInt height = 0;
            for (const auto& x : g) height = std::max(height, BigInt(abs(x)));
            // |lc * root| <= |lc| (1 + height); lift past twice that.
            const BigInt bound = 2 * abs(lc) * (1 + height) + 1;
            std::vector<BigInt> dg;
            for (std::size_t i = 1; i <= n; ++i) dg.push_back(g[i] * i);

            BigInt ell;
            std::vector<FpsElem> mod_roots;
            for (int attempt = 0;; ++attempt) {
                if (attempt == 64) throw RetryError("dense_rational_roots: no squarefree reduction found");
                ell = random_test_prime(62, std::span<const BigInt>(&lc, 1), rng);
                const GaloisField gf = GaloisField::prime(ell);
                std::vector<FpsElem> cc;
                for (const auto& x : g) cc.push_back(gf.from_int(x));
                const GfPoly gbar(gf, std::move(cc));
                if (gcd(gbar, derivative(gbar)).degree() != 0) continue;
                mod_roots = fp_dense_roots(gbar, rng);
                break;
            }
            for (const auto& rho0 : mod_roots) {
                BigInt rho = rho0.c[0], modulus = ell;
                while (modulus <= bound) {
                    const BigInt next = modulus * modulus;
                    BigInt deriv = eval_mod(dg, rho, next), inv;
                    mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), next.get_mpz_t());
                    rho = rho - eval_mod(g, rho, next) * inv;
                    mpz_fdiv_r(rho.get_mpz_t(), rho.get_mpz_t(), next.get_mpz_t());
                    modulus = next;
                }
                BigInt t = lc * rho;
                mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
                if (2 * t > modulus) t -= modulus;
                BigRat r(t, lc);
                r.canonicalize();
                if (sgn(eval(sq, r)) == 0) roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

unsigned lacunary_root_multiplicity(const LacunaryUni<Rationals>& f, const BigRat& r, const RootOptions& opt,
                                    Rng& rng, McTally& tally)
{
    if (sgn(r) == 0) throw DomainError("lacunary_root_multiplicity: root must be nonzero");
    LacunaryUni<Rationals> h = normalize(f);
    const std::size_t k = h.terms.size();
    for (unsigned m = 0; m < k; ++m) {
        std::vector<std::pair<BigRat, BigInt>> pairs;
        for (const auto& t : h.terms) pairs.emplace_back(t.coef, t.exp);
        const auto v = degenerate_power_sum_test(std::move(pairs), r, opt.lambda, rng, opt.exact_bit_limit);
        tally.note(v);
        if (v.verdict == Verdict::NonZero) return m;
        h = derivative_lacunary(h);
    }
    throw std::logic_error("root " + to_string(r) + " has multiplicity above the " + std::to_string(k - 1) +
                           " allowed for " + std::to_string(k) + " terms");
}

std::vector<RationalRoot> lacunary_univariate_rational_roots(const LacunaryUni<Rationals>& f_in,
                                                             const RootOptions& opt, Rng& rng, McTally& tally)
{
    const LacunaryUni<Rationals> f = normalize(f_in);
    if (f.terms.empty()) throw DomainError("rational roots of the zero polynomial");
    std::vector<RationalRoot> out;
    const BigInt low = f.terms.front().exp;
    if (low > 0) out.push_back({BigRat(0), low});
    if (f.terms.size() == 1) return out;

    LacunaryUni<Rationals> g{f.field, {}};
    for (const auto& t : f.terms) g.terms.push_back({t.coef, t.exp - low});
    std::vector<BigRat> coefs;
    for (const auto& t : g.terms) coefs.push_back(t.coef);
    const std::vector<BigInt> ints = primitive_part(coefs);

    std::vector<BigRat> candidates;
    for (const auto& n : positive_divisors(ints.front()))
        for (const auto& d : positive_divisors(ints.back())) {
            BigInt gg;
            mpz_gcd(gg.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
            if (gg != 1) continue;
            BigRat r(n, d);
            candidates.push_back(r);
            candidates.push_back(-r);
        }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& r : candidates) {
        const unsigned m = lacunary_root_multiplicity(g, r, opt, rng, tally);
        if (m > 0) out.push_back({r, BigInt(m)});
    }
    std::sort(out.begin(), out.end(), [](const RationalRoot& a, const RationalRoot& b) { return a.root < b.root; });
    return out;
}

}  // namespace lacunary
