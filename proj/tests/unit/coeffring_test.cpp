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

#include <doctest.h>

#include <vector>

using namespace lacunary;

TEST_CASE("binomial conventions")
{
    CHECK(binomial(7UL, 0UL) == 1);
    CHECK(binomial(1UL, 2UL) == 0);
    CHECK(binomial(9UL, 8UL) == 9);
    for (unsigned long n = 1; n <= 60; ++n)
        for (unsigned long k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(binomial(BigInt(1) << 100, 2) == ((BigInt(1) << 100) * ((BigInt(1) << 100) - 1)) / 2);
}

TEST_CASE("falling factorial")
{
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(3, 4) == 0);
}

TEST_CASE("lucas binomial")
{
    CHECK(lucas_binomial(10, 4, 3) == 0);
    CHECK(lucas_binomial(7, 1, 7) == 0);
    CHECK(lucas_binomial(5, 3, 7) == 3);
    for (long p : {2, 3, 5, 7, 101})
        for (unsigned long n = 0; n <= 12; ++n)
            for (unsigned long k = 0; k <= 12; ++k) {
                BigInt want = binomial(n, k) % p;
                CHECK(lucas_binomial(BigInt(n), BigInt(k), BigInt(p)) == want);
            }
    CHECK_THROWS_AS(lucas_binomial(10, 4, 4), DomainError);
}

TEST_CASE("random test primes")
{
    Rng a(1), b(1);
    const BigInt p = random_test_prime(16, {}, a);
    CHECK(is_probable_prime(p));
    CHECK(bit_length(p) == 16);
    CHECK(random_test_prime(16, {}, b) == p);

    BigInt all = 1;
    for (unsigned long n = 2; n < (1UL << 16); ++n)
        if (is_probable_prime(BigInt(n))) all *= n;
    const std::vector<BigInt> forbidden{all};
    Rng c(3);
    CHECK_THROWS_AS(random_test_prime(16, forbidden, c), RetryError);
}

TEST_CASE("rational arithmetic round trips")
{
    Rng rng(5);
    for (int i = 0; i < 10000; ++i) {
        BigRat a(random_bits(rng, 128) - (BigInt(1) << 127), random_bits(rng, 128) + 1);
        BigRat b(random_bits(rng, 128) + 1, random_bits(rng, 128) + 1);
        a.canonicalize();
        b.canonicalize();
        if (rng() % 2) b = -b;
        CHECK((a + b) - b == a);
        CHECK((a * b) / b == a);
    }
}

TEST_CASE("extension field arithmetic")
{
    // X^2 + 2 is irreducible mod 101 (-2 is not a square)
    const GaloisField f(FieldSpec::prime_field(101, 2, {2, 0, 1}));
    Rng rng(6);
    auto random_elem = [&] { return f.from_coords({random_below(rng, 101), random_below(rng, 101)}); };
    for (int i = 0; i < 1000; ++i) {
        const auto a = random_elem(), b = random_elem(), c = random_elem();
        CHECK(f.equal(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c)));
        CHECK(f.equal(f.mul(a, b), f.mul(b, a)));
        if (!f.is_zero(a)) CHECK(f.equal(f.mul(a, f.inv(a)), f.one()));
    }
    CHECK(f.order() == 101 * 101);
}

TEST_CASE("field validation")
{
    CHECK_THROWS_AS(GaloisField::prime(4), FieldError);
    CHECK_THROWS_AS(GaloisField(FieldSpec::prime_field(7, 2, {1, 0, 1, 0})), FieldError);
    // X^2 + 1 = (X + 1)^2 mod 2
    CHECK_THROWS_AS(GaloisField(FieldSpec::prime_field(2, 2, {1, 0, 1})), FieldError);
    CHECK_NOTHROW(GaloisField(FieldSpec::prime_field(2, 2, {1, 1, 1})));
}

TEST_CASE("number parsing")
{
    CHECK(parse_bigrat("6/4") == BigRat(3, 2));
    CHECK(parse_bigint("-340282366920938463463374607431768211456") == -(BigInt(1) << 128));
    CHECK_THROWS_AS(parse_bigrat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bigint("12a"), std::invalid_argument);
}
