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

#include "lacunary/coeffring.hpp"

#include <algorithm>

namespace lacunary {

namespace {

using Coeffs = std::vector<BigInt>;

BigInt mod_p(const BigInt& a, const BigInt& p)
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

void trim(Coeffs& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m over F_p.
Coeffs rem_monic(Coeffs a, const Coeffs& m, const BigInt& p)
{
    const std::size_t dm = m.size() - 1;
    trim(a);
    while (a.size() > dm) {
        BigInt lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = mod_p(a[shift + i] - lead * m[i], p);
        trim(a);
    }
    return a;
}

Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& m, const BigInt& p)
{
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& x : r) x = mod_p(x, p);
    return rem_monic(std::move(r), m, p);
}

Coeffs pow_mod(Coeffs base, BigInt e, const Coeffs& m, const BigInt& p)
{
    Coeffs result{BigInt(1)};
    result = rem_monic(result, m, p);
    base = rem_monic(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = mul_mod(result, base, m, p);
        base = mul_mod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

// Monic gcd over F_p.
Coeffs gcd_mod(Coeffs a, Coeffs b, const BigInt& p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
        Coeffs bm = b;
        for (auto& x : bm) x = mod_p(x * inv, p);
        Coeffs r = rem_monic(std::move(a), bm, p);
        a = std::move(bm);
        b = std::move(r);
    }
    return a;
}

std::vector<unsigned> prime_divisors(unsigned s)
{
    std::vector<unsigned> out;
    for (unsigned q = 2; q * q <= s; ++q) {
        if (s % q == 0) {
            out.push_back(q);
            while (s % q == 0) s /= q;
        }
    }
    if (s > 1) out.push_back(s);
    return out;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<BigInt>& phi_in, const BigInt& p)
{
    Coeffs phi;
    for (const auto& c : phi_in) phi.push_back(mod_p(c, p));
    trim(phi);
    if (phi.size() < 2 || phi.back() != 1) return false;
    const unsigned s = static_cast<unsigned>(phi.size() - 1);
    if (s == 1) return true;
    const Coeffs x{BigInt(0), BigInt(1)};

    // frob[e] = X^{p^e} mod phi
    std::vector<Coeffs> frob{rem_monic(x, phi, p)};
    for (unsigned e = 1; e <= s; ++e) frob.push_back(pow_mod(frob.back(), p, phi, p));

    auto minus_x = [&](Coeffs a) {
        a.resize(std::max<std::size_t>(a.size(), 2), BigInt(0));
        a[1] = mod_p(a[1] - 1, p);
        trim(a);
        return a;
    };
    if (!minus_x(frob[s]).empty()) return false;
    for (unsigned q : prime_divisors(s)) {
        Coeffs g = gcd_mod(phi, minus_x(frob[s / q]), p);
        if (g.size() != 1) return false;
    }
    return true;
}

GaloisField::GaloisField(const FieldSpec& spec)
{
    if (spec.kind != FieldSpec::Kind::PrimeField)
        throw FieldError(FieldError::Code::MalformedPhi, "GaloisField requires a prime-field spec");
    if (!is_probable_prime(spec.p))
        throw FieldError(FieldError::Code::NotPrime, "p = " + to_string(spec.p) + " is not prime");
    if (spec.s == 0) throw FieldError(FieldError::Code::MalformedPhi, "extension degree must be positive");
    auto ctx = std::make_shared<Context>();
    ctx->p = spec.p;
    ctx->s = spec.s;
    if (spec.s == 1) {
        ctx->phi = {BigInt(0), BigInt(1)};
    } else {
        if (spec.phi.size() != spec.s + 1)
            throw FieldError(FieldError::Code::MalformedPhi,
                             "phi must have " + std::to_string(spec.s + 1) + " coefficients");
        for (const auto& c : spec.phi) ctx->phi.push_back(mod_p(c, spec.p));
        if (ctx->phi.back() != 1) throw FieldError(FieldError::Code::MalformedPhi, "phi must be monic");
        if (!is_irreducible_mod_p(ctx->phi, spec.p))
            throw FieldError(FieldError::Code::ReduciblePhi, "phi is reducible over F_" + to_string(spec.p));
    }
    mpz_pow_ui(ctx->q.get_mpz_t(), spec.p.get_mpz_t(), spec.s);
    ctx_ = std::move(ctx);
}

FpsElem GaloisField::zero() const { return FpsElem{Coeffs(ctx_->s, BigInt(0))}; }

FpsElem GaloisField::one() const
{
    FpsElem r = zero();
    r.c[0] = 1;
    return r;
}

FpsElem GaloisField::from_int(const BigInt& n) const
{
    FpsElem r = zero();
    r.c[0] = mod_p(n, ctx_->p);
    return r;
}

FpsElem GaloisField::from_rat(const BigRat& q) const
{
    BigInt den = mod_p(q.get_den(), ctx_->p);
    if (den == 0) throw DomainError("denominator " + to_string(q.get_den()) + " vanishes mod p");
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ctx_->p.get_mpz_t());
    return from_int(q.get_num() * inv);
}

FpsElem GaloisField::from_coords(std::vector<BigInt> coords) const
{
    if (coords.size() > ctx_->s)
        throw DomainError("element has " + std::to_string(coords.size()) + " coordinates, field degree is " +
                          std::to_string(ctx_->s));
    coords.resize(ctx_->s, BigInt(0));
    for (auto& c : coords) c = mod_p(c, ctx_->p);
    return FpsElem{std::move(coords)};
}

FpsElem GaloisField::generator() const
{
    if (ctx_->s < 2) throw DomainError("generator requires an extension field");
    FpsElem r = zero();
    r.c[1] = 1;
    return r;
}

FpsElem GaloisField::add(const FpsElem& a, const FpsElem& b) const
{
    FpsElem r = a;
    for (unsigned i = 0; i < ctx_->s; ++i) {
        r.c[i] += b.c[i];
        if (r.c[i] >= ctx_->p) r.c[i] -= ctx_->p;
    }
    return r;
}

FpsElem GaloisField::sub(const FpsElem& a, const FpsElem& b) const
{
    FpsElem r = a;
    for (unsigned i = 0; i < ctx_->s; ++i) {
        r.c[i] -= b.c[i];
        if (r.c[i] < 0) r.c[i] += ctx_->p;
    }
    return r;
}

FpsElem GaloisField::neg(const FpsElem& a) const
{
    FpsElem r = a;
    for (auto& c : r.c)
        if (c != 0) c = ctx_->p - c;
    return r;
}

FpsElem GaloisField::mul(const FpsElem& a, const FpsElem& b) const
{
    const BigInt& p = ctx_->p;
    if (ctx_->s == 1) return FpsElem{{mod_p(a.c[0] * b.c[0], p)}};
    Coeffs r = mul_mod(a.c, b.c, ctx_->phi, p);
    r.resize(ctx_->s, BigInt(0));
    return FpsElem{std::move(r)};
}

FpsElem GaloisField::pow(const FpsElem& a, const BigInt& e) const
{
    if (e < 0) throw DomainError("negative exponent");
    if (ctx_->s == 1) {
        FpsElem r = zero();
        mpz_powm(r.c[0].get_mpz_t(), a.c[0].get_mpz_t(), e.get_mpz_t(), ctx_->p.get_mpz_t());
        return r;
    }
    FpsElem result = one(), base = a;
    BigInt k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

FpsElem GaloisField::inv(const FpsElem& a) const
{
    if (is_zero(a)) throw DomainError("division by zero in F_q");
    if (ctx_->s == 1) {
        FpsElem r = zero();
        mpz_invert(r.c[0].get_mpz_t(), a.c[0].get_mpz_t(), ctx_->p.get_mpz_t());
        return r;
    }
    return pow(a, ctx_->q - 2);
}

bool GaloisField::is_zero(const FpsElem& a) const
{
    return std::all_of(a.c.begin(), a.c.end(), [](const BigInt& x) { return x == 0; });
}

bool GaloisField::less(const FpsElem& a, const FpsElem& b) const
{
    return std::lexicographical_compare(a.c.rbegin(), a.c.rend(), b.c.rbegin(), b.c.rend());
}

FpsElem GaloisField::binomial(const BigInt& n, unsigned long k) const
{
    return from_int(lucas_binomial(n, BigInt(k), ctx_->p));
}

FpsElem GaloisField::random(Rng& rng) const
{
    FpsElem r = zero();
    for (auto& c : r.c) c = random_below(rng, ctx_->p);
    return r;
}

std::string GaloisField::format(const FpsElem& a) const
{
    std::string out = to_string(a.c[0]);
    for (unsigned i = 1; i < ctx_->s; ++i) out += ":" + to_string(a.c[i]);
    return out;
}

std::size_t GaloisField::bit_size(const FpsElem& a) const
{
    std::size_t bits = 0;
    for (const auto& c : a.c) bits += bit_length(c);
    return bits;
}

FieldSpec GaloisField::spec() const
{
    return FieldSpec::prime_field(ctx_->p, ctx_->s, ctx_->s > 1 ? ctx_->phi : std::vector<BigInt>{});
}

bool GaloisField::operator==(const GaloisField& other) const
{
    return ctx_ == other.ctx_ || (ctx_->p == other.ctx_->p && ctx_->phi == other.ctx_->phi);
}

}  // namespace lacunary
