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

#include "lacunary/bounds.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lacunary;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs)
{
    std::vector<BigInt> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("valuation bound")
{
    CHECK(valuation_bound(ints({5})) == 5);
    CHECK(valuation_bound(ints({0, 0, 0})) == 3);
    for (long k = 1; k <= 10; ++k) CHECK(valuation_bound(std::vector<BigInt>(k, BigInt(0))) == binomial(k, 2));
    CHECK_THROWS_AS(valuation_bound({}), DomainError);
}

TEST_CASE("weight-2 bound")
{
    CHECK(weight2_valuation_bound(ints({5})) == 5);
    CHECK(weight2_valuation_bound(ints({0, 0, 0})) == 6);
    const auto xs = ints({0, 2, 3, 10, 11});
    CHECK(weight2_valuation_bound(xs) >= valuation_bound(xs));
    CHECK_THROWS_AS(weight2_valuation_bound({}), DomainError);
}

TEST_CASE("plateau bound")
{
    CHECK(plateau_bound(std::vector<BigInt>(4, BigInt(7))) == 28);
    CHECK(plateau_bound(ints({0, 2, 4})) == 3);
    CHECK(plateau_bound(ints({0})) == 0);
    const auto prof = plateau_profile(ints({0, 0, 5, 9, 9}));
    std::size_t total = 0;
    for (auto n : prof.lengths) total += n;
    CHECK(total == 5);
    CHECK_THROWS_AS(plateau_bound({}), DomainError);
}

TEST_CASE("generalized multiplicity bound")
{
    // f1 = X, f2 = 1 + X at xi = 0 recovers the plain bound on row 1
    MultiBoundInput in{{1, 1}, {1, 0}, {ints({0, 2, 7}), ints({4, 1, 3})}};
    CHECK(generalized_multiplicity_bound(in, false) == valuation_bound(ints({0, 2, 7})));

    MultiBoundInput full{{2, 3}, {2, 3}, {ints({1, 4}), ints({2, 0})}};
    CHECK(generalized_multiplicity_bound(full, false) == 8);

    MultiBoundInput single{{3, 2}, {1, 2}, {ints({5}), ints({4})}};
    CHECK(generalized_multiplicity_bound(single, false) == 13);

    MultiBoundInput bad{{1}, {2}, {ints({1})}};
    CHECK_THROWS_AS(generalized_multiplicity_bound(bad, false), DomainError);

    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        MultiBoundInput r;
        const unsigned m = 1 + rng() % 3, k = 1 + rng() % 4;
        r.alpha.resize(m);
        for (unsigned a = 0; a < m; ++a) {
            r.degrees.push_back(rng() % 4);
            r.multiplicities.push_back(rng() % (r.degrees.back() + 1));
            for (unsigned j = 0; j < k; ++j) r.alpha[a].push_back(BigInt(rng() % 7));
        }
        CHECK(generalized_multiplicity_bound(r, true) <= generalized_multiplicity_bound(r, false));
    }
}

TEST_CASE("sparse family")
{
    const auto p = hajos_family(3);
    REQUIRE(p.terms.size() == 6);
    std::vector<BigRat> coefs;
    for (const auto& t : p.terms) coefs.push_back(t.coef);
    CHECK(std::count(coefs.begin(), coefs.end(), BigRat(-9)) == 2);
    CHECK(std::count(coefs.begin(), coefs.end(), BigRat(-30)) == 1);
    CHECK(std::count(coefs.begin(), coefs.end(), BigRat(-27)) == 1);
    for (unsigned long k = 3; k <= 6; ++k) {
        const auto e = oracle::expand(hajos_family(k));
        CHECK(e.size() == 2 * k + 4);
        CHECK(e.back() == 1);
        CHECK(oracle::valuation(e) == static_cast<long>(2 * k + 3));
    }
    CHECK_THROWS_AS(hajos_family(2), DomainError);
    CHECK(hajos_coefficient_sum(3, 8) == 9);
    CHECK(hajos_coefficient_sum(3, 3) == 84);
}

TEST_CASE("WZ certificate")
{
    for (unsigned long k = 3; k <= 6; ++k) {
        const auto r = wz_identity_check(k);
        CHECK(r.passed);
        CHECK(r.checked > 0);
    }
    CHECK_THROWS_AS(wz_identity_check(2), DomainError);
}

TEST_CASE("max valuation search")
{
    for (unsigned k : {2u, 3u}) {
        SearchOptions opt;
        opt.k = k;
        opt.exp_cap = 6;
        opt.samples = 400;
        opt.exec = Exec::Serial;
        const auto r = max_valuation_search(opt);
        CHECK(r.best_gap >= static_cast<long>(2 * k - 3));
        const auto e = oracle::expand(r.witness);
        REQUIRE(!e.empty());
        std::vector<BigInt> alphas;
        for (const auto& t : r.witness.terms) alphas.push_back(t.alpha);
        CHECK(BigInt(oracle::valuation(e)) <= valuation_bound(alphas));
    }
}

TEST_CASE("finite-field precondition")
{
    const GaloisField f101 = GaloisField::prime(101);
    BinomExprPoly<GaloisField> ok{f101, f101.one(), f101.one(), 1, {{f101.one(), 40, 50}}};
    CHECK(fp_precondition_check(ok).ok);
    ok.terms.push_back({f101.one(), 50, 51});
    CHECK(!fp_precondition_check(ok).ok);

    const GaloisField f2 = GaloisField::prime(2);
    BinomExprPoly<GaloisField> c2{f2, f2.one(), f2.one(), 1, {{f2.one(), 0, 8}, {f2.one(), 0, 16}}};
    CHECK(!fp_precondition_check(c2).ok);
}
