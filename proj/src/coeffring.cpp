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
#include <climits>
#include <map>

namespace lacunary {

std::size_t bit_length(const BigInt& n) { return mpz_sizeinbase(n.get_mpz_t(), 2); }

std::size_t ceil_log2(std::size_t n)
{
    std::size_t r = 0;
    while ((std::size_t{1} << r) < n) ++r;
    return r;
}

BigInt parse_bigint(std::string_view text)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (i == text.size()) throw std::invalid_argument("empty integer");
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9')
            throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return BigInt(digits, 10);
}

BigRat parse_bigrat(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRat(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("denominator must be unsigned in '" + std::string(text) + "'");
    BigInt den = parse_bigint(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

std::string to_string(const BigRat& q) { return q.get_str(10); }

bool fits_ulong(const BigInt& n) { return n.fits_ulong_p(); }

bool is_probable_prime(const BigInt& n)
{
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

namespace {

BigInt pollard_rho(const BigInt& n, unsigned long c)
{
    if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
    BigInt x = 2, y = 2, d = 1, q = 1;
    auto f = [&](const BigInt& t) {
        BigInt r = t * t + c;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
        return r;
    };
    // Brent-style batching of gcds.
    std::size_t batch = 0;
    BigInt xs = x, ys = y;
    while (d == 1) {
        x = f(x);
        y = f(f(y));
        BigInt diff = abs(x - y);
        q = q * diff % n;
        if (++batch == 64 || q == 0) {
            if (q == 0) {
                // Batch overshot; redo one step at a time.
                x = xs;
                y = ys;
                do {
                    x = f(x);
                    y = f(f(y));
                    BigInt dd = abs(x - y);
                    mpz_gcd(d.get_mpz_t(), dd.get_mpz_t(), n.get_mpz_t());
                } while (d == 1);
                break;
            }
            mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            batch = 0;
            xs = x;
            ys = y;
        }
    }
    return d;
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out)
{
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    for (unsigned long c = 1;; ++c) {
        BigInt d = pollard_rho(n, c);
        if (d != n && d != 1) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n_in)
{
    if (n_in == 0) throw DomainError("factorize: zero has no factorization");
    BigInt n = abs(n_in);
    std::map<BigInt, unsigned> found;
    for (unsigned long d = 2; d <= 1000000UL; d += (d == 2 ? 1 : 2)) {
        BigInt dd(d);
        if (dd * dd > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            ++found[dd];
            n /= d;
        }
    }
    if (n > 1) factor_into(n, found);
    return {found.begin(), found.end()};
}

std::vector<BigInt> positive_divisors(const BigInt& n)
{
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [prime, mult] : factorize(n)) {
        std::size_t count = divs.size();
        BigInt power = 1;
        for (unsigned e = 1; e <= mult; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

BigInt random_bits(Rng& rng, std::size_t bits)
{
    BigInt r = 0;
    std::size_t words = (bits + 63) / 64;
    for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t w = rng();
        BigInt part;
        mpz_import(part.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
        r = (r << 64) + part;
    }
    std::size_t excess = words * 64 - bits;
    if (excess > 0) r >>= excess;
    return r;
}

BigInt random_below(Rng& rng, const BigInt& bound)
{
    if (bound <= 0) throw DomainError("random_below: bound must be positive");
    std::size_t bits = bit_length(bound);
    for (;;) {
        BigInt r = random_bits(rng, bits);
        if (r < bound) return r;
    }
}

BigInt binomial(const BigInt& n, unsigned long k)
{
    if (n < 0) throw DomainError("binomial: negative n");
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k)
{
    if (k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt falling_factorial(const BigInt& m, unsigned long n)
{
    if (m < 0) throw DomainError("falling_factorial: negative m");
    if (m < n) return BigInt(0);
    BigInt r = 1;
    for (unsigned long i = 0; i < n; ++i) r *= m - i;
    return r;
}

namespace {

// C(n, k) mod p for 0 <= k <= n < p by the multiplicative formula.
BigInt small_binomial_mod(const BigInt& n, const BigInt& k_in, const BigInt& p)
{
    if (k_in > n) return BigInt(0);
    BigInt k = std::min(k_in, BigInt(n - k_in));
    if (!fits_ulong(k)) throw DomainError("lucas_binomial: base-p digit too large to expand");
    BigInt num = 1, den = 1;
    for (unsigned long i = 0, kk = k.get_ui(); i < kk; ++i) {
        num = num * (n - i) % p;
        den = den * (i + 1) % p;
    }
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    return num * inv % p;
}

}  // namespace

BigInt lucas_binomial(const BigInt& n_in, const BigInt& k_in, const BigInt& p)
{
    if (!is_probable_prime(p)) throw DomainError("lucas_binomial: modulus " + to_string(p) + " is not prime");
    if (n_in < 0 || k_in < 0) throw DomainError("lucas_binomial: negative argument");
    BigInt n = n_in, k = k_in, result = 1;
    while (k > 0) {
        BigInt nd, kd;
        mpz_fdiv_qr(n.get_mpz_t(), nd.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        mpz_fdiv_qr(k.get_mpz_t(), kd.get_mpz_t(), k.get_mpz_t(), p.get_mpz_t());
        if (kd > nd) return BigInt(0);
        result = result * small_binomial_mod(nd, kd, p) % p;
    }
    return result;
}

BigInt random_test_prime(std::size_t bits, std::span<const BigInt> forbidden, Rng& rng)
{
    if (bits < 16) throw DomainError("random_test_prime: at least 16 bits required");
    const std::size_t max_draws = 200 * bits;
    const BigInt top = BigInt(1) << (bits - 1);
    for (std::size_t draw = 0; draw < max_draws; ++draw) {
        BigInt candidate = top + random_bits(rng, bits - 1);
        mpz_setbit(candidate.get_mpz_t(), 0);
        if (!is_probable_prime(candidate)) continue;
        bool clash = std::any_of(forbidden.begin(), forbidden.end(), [&](const BigInt& f) {
            return f != 0 && mpz_divisible_p(f.get_mpz_t(), candidate.get_mpz_t());
        });
        if (!clash) return candidate;
    }
    throw RetryError("random_test_prime: no admissible " + std::to_string(bits) + "-bit prime found");
}

FieldSpec FieldSpec::prime_field(BigInt p, unsigned s, std::vector<BigInt> phi)
{
    FieldSpec spec;
    spec.kind = Kind::PrimeField;
    spec.p = std::move(p);
    spec.s = s;
    spec.phi = std::move(phi);
    return spec;
}

BigRat Rationals::inv(const BigRat& a) const
{
    if (sgn(a) == 0) throw DomainError("division by zero");
    return 1 / a;
}

BigRat Rationals::pow(const BigRat& a, const BigInt& e) const
{
    if (e < 0) throw DomainError("negative exponent");
    if (e == 0) return BigRat(1);
    if (sgn(a) == 0) return BigRat(0);
    if (a == 1) return BigRat(1);
    if (a == -1) return BigRat(mpz_odd_p(e.get_mpz_t()) ? -1 : 1);
    std::size_t bits = std::max(bit_length(a.get_num()), bit_length(a.get_den()));
    if (!fits_ulong(e) || BigInt(e) * bits > BigInt(1) << 26)
        throw std::overflow_error("exact power too large: exponent " + to_string(e));
    BigRat r;
    mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), e.get_ui());
    mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), e.get_ui());
    return r;
}

std::size_t Rationals::bit_size(const BigRat& a) const
{
    return bit_length(a.get_num()) + bit_length(a.get_den());
}

}  // namespace lacunary
