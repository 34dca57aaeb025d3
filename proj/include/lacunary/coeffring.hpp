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

#ifndef LACUNARY_COEFFRING_HPP
#define LACUNARY_COEFFRING_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lacunary {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// All randomness in the library flows through explicitly passed engines of
/// this type; mt19937_64 output is fixed by the standard, so seeded runs are
/// reproducible across platforms.
using Rng = std::mt19937_64;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A documented precondition of an algorithm does not hold for this input
/// (e.g. the characteristic is too small for the valuation bound).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Randomized search ran out of candidates; the caller may enlarge its
/// parameters and retry.
class RetryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Big integer helpers

/// Number of bits of |n|; 1 for n = 0.
std::size_t bit_length(const BigInt& n);
std::size_t ceil_log2(std::size_t n);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);
/// Parses "n" or "n/d" with d != 0; result is canonical.
BigRat parse_bigrat(std::string_view text);

std::string to_string(const BigInt& n);
std::string to_string(const BigRat& q);

/// Fits in an unsigned long (used for exponents that are small by construction).
bool fits_ulong(const BigInt& n);

/// Probabilistic primality test with 64 Miller-Rabin rounds.
bool is_probable_prime(const BigInt& n);

/// Prime factorization of |n| (n != 0): trial division to 10^6, then Pollard rho.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);
/// All positive divisors of |n|, ascending.
std::vector<BigInt> positive_divisors(const BigInt& n);

/// Uniform integer in [0, 2^bits).
BigInt random_bits(Rng& rng, std::size_t bits);
/// Uniform integer in [0, bound), bound > 0.
BigInt random_below(Rng& rng, const BigInt& bound);

// ---------------------------------------------------------------------------
// Combinatorial coefficients

/// C(n, k); 0 when k > n.
BigInt binomial(const BigInt& n, unsigned long k);
BigInt binomial(unsigned long n, unsigned long k);

/// m (m-1) ... (m-n+1); 1 for n = 0 and 0 when n > m.
BigInt falling_factorial(const BigInt& m, unsigned long n);

/// C(n, k) mod p through the base-p digits of n and k. Throws DomainError
/// when p is not prime or n, k are negative.
BigInt lucas_binomial(const BigInt& n, const BigInt& k, const BigInt& p);

/// Probable prime with exactly `bits` bits dividing no member of `forbidden`.
/// Candidates are drawn uniformly, so the result is uniform over admissible
/// primes. Throws RetryError after a bounded number of draws.
BigInt random_test_prime(std::size_t bits, std::span<const BigInt> forbidden, Rng& rng);

// ---------------------------------------------------------------------------
// Coefficient domains

/// Declarative description of a coefficient field, as read from input.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    BigInt p;                  // characteristic (PrimeField only)
    unsigned s = 1;            // extension degree
    std::vector<BigInt> phi;   // defining polynomial, s+1 coefficients low to high (s > 1)

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime_field(BigInt p, unsigned s = 1, std::vector<BigInt> phi = {});

    bool is_rationals() const { return kind == Kind::Rationals; }
};

class FieldError : public std::invalid_argument {
public:
    enum class Code { NotPrime, MalformedPhi, ReduciblePhi };

    FieldError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}
    Code code() const noexcept { return code_; }

private:
    Code code_;
};

/// The rational numbers. Elements are canonical mpq values.
class Rationals {
public:
    using Elem = BigRat;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(const BigInt& n) const { return Elem(n); }
    Elem from_rat(const BigRat& q) const { return q; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    /// a^e with 0^0 = 1. Throws std::overflow_error when the exact result
    /// would be astronomically large.
    Elem pow(const Elem& a, const BigInt& e) const;

    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    /// Total order used only to make outputs deterministic.
    bool less(const Elem& a, const Elem& b) const { return a < b; }

    BigInt characteristic() const { return BigInt(0); }
    Elem binomial(const BigInt& n, unsigned long k) const { return Elem(lacunary::binomial(n, k)); }

    std::string format(const Elem& a) const { return to_string(a); }
    std::size_t bit_size(const Elem& a) const;

    FieldSpec spec() const { return FieldSpec::rationals(); }
    bool operator==(const Rationals&) const { return true; }
};

/// Element of F_{p^s}: coordinates in the basis (1, xi, ..., xi^{s-1}).
struct FpsElem {
    std::vector<BigInt> c;

    bool operator==(const FpsElem& other) const { return c == other.c; }
};

/// The finite field F_{p^s} = F_p[xi]/<phi>. Copies share an immutable
/// context, so values can be passed around freely.
class GaloisField {
public:
    using Elem = FpsElem;

    /// Validates p (probable prime) and phi (monic, degree s, irreducible).
    explicit GaloisField(const FieldSpec& spec);
    /// Prime field F_p.
    static GaloisField prime(const BigInt& p) { return GaloisField(FieldSpec::prime_field(p)); }

    const BigInt& p() const { return ctx_->p; }
    unsigned degree() const { return ctx_->s; }
    /// Number of elements p^s.
    const BigInt& order() const { return ctx_->q; }
    const std::vector<BigInt>& phi() const { return ctx_->phi; }

    Elem zero() const;
    Elem one() const;
    Elem from_int(const BigInt& n) const;
    /// n/d mapped to n * d^{-1}; throws DomainError when p divides d.
    Elem from_rat(const BigRat& q) const;
    Elem from_coords(std::vector<BigInt> coords) const;
    /// The class of xi; requires s > 1.
    Elem generator() const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    /// Square-and-multiply; exponent of arbitrary size, 0^0 = 1.
    Elem pow(const Elem& a, const BigInt& e) const;

    bool is_zero(const Elem& a) const;
    bool equal(const Elem& a, const Elem& b) const { return a.c == b.c; }
    bool less(const Elem& a, const Elem& b) const;

    BigInt characteristic() const { return ctx_->p; }
    /// C(n, k) mod p via Lucas' theorem.
    Elem binomial(const BigInt& n, unsigned long k) const;

    Elem random(Rng& rng) const;

    std::string format(const Elem& a) const;
    std::size_t bit_size(const Elem& a) const;

    FieldSpec spec() const;
    bool operator==(const GaloisField& other) const;

private:
    struct Context {
        BigInt p;
        unsigned s = 1;
        std::vector<BigInt> phi;  // monic, size s+1 (s > 1); {0, 1} for s = 1
        BigInt q;
    };
    std::shared_ptr<const Context> ctx_;
};

/// Irreducibility of a monic phi over F_p by the Frobenius criterion:
/// X^{p^s} = X mod phi and gcd(X^{p^{s/q}} - X, phi) = 1 for primes q | s.
bool is_irreducible_mod_p(const std::vector<BigInt>& phi, const BigInt& p);

}  // namespace lacunary

#endif  // LACUNARY_COEFFRING_HPP
