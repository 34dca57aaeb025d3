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

#include <algorithm>
#include <map>

namespace lacunary {

namespace {

using Pairs = std::vector<std::pair<BigRat, BigInt>>;

Pairs merge_pairs(Pairs pairs)
{
    std::map<BigInt, BigRat> merged;
    for (auto& [a, b] : pairs) {
        if (b < 0) throw DomainError("power sum with negative exponent");
        merged[b] += a;
    }
    Pairs out;
    for (auto& [b, a] : merged)
        if (sgn(a) != 0) out.emplace_back(a, b);
    return out;
}

// v in {0, 1, -1}: the sum has a closed form.
std::optional<BigRat> trivial_base_sum(const Pairs& pairs, const BigRat& v)
{
    if (sgn(v) != 0 && v != 1 && v != -1) return std::nullopt;
    BigRat s = 0;
    for (const auto& [a, b] : pairs) {
        if (sgn(v) == 0) {
            if (b == 0) s += a;
        } else if (v == -1 && mpz_odd_p(b.get_mpz_t())) {
            s -= a;
        } else {
            s += a;
        }
    }
    return s;
}

bool same_sign(const Pairs& pairs, const BigRat& v)
{
    if (sgn(v) == 0) return false;
    int first = 0;
    for (const auto& [a, b] : pairs) {
        int sg = sgn(a);
        if (sgn(v) < 0 && mpz_odd_p(b.get_mpz_t())) sg = -sg;
        if (first == 0)
            first = sg;
        else if (sg != first)
            return false;
    }
    return true;
}

long valuation_at(const BigInt& n, const BigInt& q)
{
    BigInt rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t()));
}

// q-adic valuation of a_j v^b_j, as an exact integer.
BigInt adic_valuation(const BigRat& a, const BigInt& b, const BigRat& v, const BigInt& q)
{
    const long va = valuation_at(a.get_num(), q) - valuation_at(a.get_den(), q);
    const long vv = valuation_at(v.get_num(), q) - valuation_at(v.get_den(), q);
    return BigInt(va) + b * vv;
}

bool unique_minimum_at(const Pairs& pairs, const BigRat& v, const BigInt& q)
{
    std::vector<BigInt> vals;
    for (const auto& [a, b] : pairs) vals.push_back(adic_valuation(a, b, v, q));
    const BigInt lo = *std::min_element(vals.begin(), vals.end());
    return std::count(vals.begin(), vals.end(), lo) == 1;
}

// Primes dividing the numerator or denominator of v, found by trial
// division up to 10^5 (plus a prime cofactor if one remains).
std::vector<BigInt> small_primes_of(const BigRat& v)
{
    std::vector<BigInt> out;
    for (BigInt n : {BigInt(abs(v.get_num())), BigInt(v.get_den())}) {
        for (unsigned long d = 2; d <= 100000 && n > 1; ++d) {
            if (BigInt(d) * d > n) break;
            if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
                out.emplace_back(d);
                while (mpz_divisible_ui_p(n.get_mpz_t(), d)) n /= d;
            }
        }
        if (n > 1 && is_probable_prime(n)) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BigInt max_bits(const BigRat& v) { return BigInt(std::max(bit_length(v.get_num()), bit_length(v.get_den()))); }

// Upper bound on the bits needed to write the cleared sum exactly.
BigInt exact_bits_estimate(const Pairs& pairs, const BigRat& v)
{
    BigInt lcm_den = 1, max_a = 0, max_b = 0;
    for (const auto& [a, b] : pairs) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), a.get_den_mpz_t());
        max_b = std::max(max_b, b);
    }
    for (const auto& [a, b] : pairs) max_a = std::max(max_a, BigInt(bit_length(a.get_num()) + bit_length(lcm_den)));
    return BigInt(bit_length(BigInt(pairs.size()))) + max_a + max_b * max_bits(v);
}

BigInt reduce_mod(const BigRat& a, const BigInt& q)
{
    BigInt num, den, inv;
    mpz_fdiv_r(num.get_mpz_t(), a.get_num_mpz_t(), q.get_mpz_t());
    mpz_fdiv_r(den.get_mpz_t(), a.get_den_mpz_t(), q.get_mpz_t());
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t()) == 0)
        throw DomainError("denominator vanishes modulo the test prime");
    return num * inv % q;
}

// sum a_j v^b_j mod q, with q not dividing any numerator/denominator of v
// nor any denominator of a_j.
BigInt sum_mod(const Pairs& pairs, const BigRat& v, const BigInt& q)
{
    const BigInt vq = reduce_mod(v, q);
    const BigInt order = q - 1;
    BigInt total = 0;
    for (const auto& [a, b] : pairs) {
        BigInt e, pw;
        mpz_fdiv_r(e.get_mpz_t(), b.get_mpz_t(), order.get_mpz_t());
        mpz_powm(pw.get_mpz_t(), vq.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
        total = (total + reduce_mod(a, q) * pw) % q;
    }
    return total;
}

bool admissible_modulus(const Pairs& pairs, const BigRat& v, const BigInt& q)
{
    auto divides = [&](const BigInt& n) { return n != 0 && mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t()); };
    if (divides(v.get_num()) || divides(v.get_den())) return false;
    return std::none_of(pairs.begin(), pairs.end(), [&](const auto& pr) { return divides(pr.first.get_den()); });
}

BigRat exact_sum(const Pairs& pairs, const BigRat& v)
{
    Rationals q;
    BigRat s = 0;
    for (const auto& [a, b] : pairs) s += a * q.pow(v, b);
    return s;
}

ZeroTestVerdict nonzero(Witness::Kind kind, BigInt prime = 0)
{
    Witness w;
    w.kind = kind;
    w.prime = std::move(prime);
    return ZeroTestVerdict{Verdict::NonZero, Certainty::Deterministic, 0, w};
}

}  // namespace

ZeroTestVerdict degenerate_power_sum_test(Pairs pairs, const BigRat& v, std::size_t lambda, Rng& rng,
                                          std::size_t exact_bit_limit)
{
    pairs = merge_pairs(std::move(pairs));
    if (pairs.empty()) return {};
    if (auto s = trivial_base_sum(pairs, v)) {
        if (sgn(*s) != 0) return nonzero(Witness::Kind::ExactSum);
        return {};
    }
    if (same_sign(pairs, v)) return nonzero(Witness::Kind::SameSign);
    for (const BigInt& q : small_primes_of(v))
        if (unique_minimum_at(pairs, v, q)) return nonzero(Witness::Kind::AdicValuation, q);

    const BigInt bits = exact_bits_estimate(pairs, v);
    if (bits <= BigInt(static_cast<unsigned long>(exact_bit_limit))) {
        if (sgn(exact_sum(pairs, v)) != 0) return nonzero(Witness::Kind::ExactSum);
        return {};
    }

    // A nonzero cleared sum S has |S| < 2^bits, hence fewer than
    // bits/(b-1) prime factors of b bits; with 2^(b-1) >= bits * 2^(lambda+1)
    // a random b-bit prime divides S with probability below 2^-lambda.
    const std::size_t b = std::max<std::size_t>(16, bit_length(bits) + lambda + 2);
    std::vector<BigInt> forbidden{v.get_num(), v.get_den()};
    for (const auto& pr : pairs) forbidden.push_back(pr.first.get_den());
    const BigInt q = random_test_prime(b, forbidden, rng);
    if (sum_mod(pairs, v, q) != 0) return nonzero(Witness::Kind::ModularImage, q);
    return ZeroTestVerdict{Verdict::Zero, Certainty::MonteCarlo, lambda, std::nullopt};
}

bool verify_power_sum_witness(Pairs pairs, const BigRat& v, const Witness& w)
{
    pairs = merge_pairs(std::move(pairs));
    if (pairs.empty()) return false;
    switch (w.kind) {
    case Witness::Kind::ExactSum:
        if (auto s = trivial_base_sum(pairs, v)) return sgn(*s) != 0;
        return sgn(exact_sum(pairs, v)) != 0;
    case Witness::Kind::SameSign:
        return same_sign(pairs, v);
    case Witness::Kind::AdicValuation:
        if (w.prime < 2 || !is_probable_prime(w.prime)) return false;
        return unique_minimum_at(pairs, v, w.prime);
    case Witness::Kind::ModularImage:
        if (w.prime < 2 || !is_probable_prime(w.prime) || !admissible_modulus(pairs, v, w.prime)) return false;
        return sum_mod(pairs, v, w.prime) != 0;
    case Witness::Kind::CoefficientKey:
        return false;
    }
    return false;
}

}  // namespace lacunary
