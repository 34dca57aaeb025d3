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
#include "lacunary/dense.hpp"
#include "lacunary/poly.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lacunary;
using Q = Rationals;

namespace {

DenseUni<Q> dq(std::vector<BigRat> c) { return DenseUni<Q>(Q{}, std::move(c)); }

BinomExprPoly<Q> binom(std::vector<Term<Q>> terms, BigRat u = 1, BigRat v = 1)
{
    return normalize(BinomExprPoly<Q>{Q{}, u, v, BigInt(1), std::move(terms)});
}

}  // namespace

TEST_CASE("normalize")
{
    LacunaryPoly<Q> p{Q{}, {{BigRat(1), 0, 0}, {BigRat(-1), 0, 0}}};
    CHECK(normalize(p).terms.empty());
    p.terms = {{BigRat(2), 5, 0}, {BigRat(3), 5, 0}};
    const auto merged = normalize(p);
    REQUIRE(merged.terms.size() == 1);
    CHECK(merged.terms[0].coef == 5);
    p.terms = {{BigRat(1), 3, 1}, {BigRat(4), 0, 2}, {BigRat(-1), 3, 0}};
    const auto once = normalize(p);
    const auto twice = normalize(once);
    REQUIRE(once.terms.size() == twice.terms.size());
    for (std::size_t i = 0; i < once.terms.size(); ++i) {
        CHECK(once.terms[i].alpha == twice.terms[i].alpha);
        CHECK(once.terms[i].beta == twice.terms[i].beta);
    }
    CHECK(once.terms[0].alpha == 0);
    CHECK(once.terms[1].beta == 0);
}

TEST_CASE("dense expansion")
{
    CHECK(expand_oracle(binom({{BigRat(1), 1, 1}})) == dq({0, 1, 1}));
    CHECK(expand_oracle(binom({{BigRat(1), 0, 2}})) == dq({1, 2, 1}));
    // -X^2 + (1+X)^2 - 2(1+X) + 1
    const auto id = binom({{BigRat(-1), 2, 0}, {BigRat(1), 0, 2}, {BigRat(-2), 0, 1}, {BigRat(1), 0, 0}});
    CHECK(expand_oracle(id).is_zero());
    CHECK_THROWS_AS(expand_oracle(binom({{BigRat(1), BigInt(1) << 40, 0}})), DegreeCapError);
}

TEST_CASE("dense expansion is linear")
{
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        std::vector<Term<Q>> a, b;
        for (int j = 0; j < 3; ++j) {
            a.push_back({BigRat(long(rng() % 7) - 3), rng() % 10, rng() % 10});
            b.push_back({BigRat(long(rng() % 7) - 3), rng() % 10, rng() % 10});
        }
        auto both = a;
        both.insert(both.end(), b.begin(), b.end());
        const BigRat u(2), v(-1, 2);
        CHECK(expand_oracle(binom(both, u, v)) == expand_oracle(binom(a, u, v)) + expand_oracle(binom(b, u, v)));
        const auto ref = oracle::expand(binom(both, u, v));
        CHECK(expand_oracle(binom(both, u, v)).coeffs() == ref);
    }
}

TEST_CASE("valuation")
{
    CHECK(valuation(dq({0, 0, 0, 1, 0, 1})) == 3);
    CHECK(!valuation(dq({})).has_value());
    CHECK(valuation(expand_oracle(hajos_family(3))) == 9);
}

TEST_CASE("wronskian")
{
    const auto x = dq({0, 1});
    {
        std::vector<DenseUni<Q>> fam{dq({1}), x};
        CHECK(wronskian(std::span<const DenseUni<Q>>(fam)) == dq({1}));
    }
    {
        const auto f = dq({3, 0, 1, 5});
        std::vector<DenseUni<Q>> fam{f, scale(f, BigRat(7, 2))};
        CHECK(wronskian(std::span<const DenseUni<Q>>(fam)).is_zero());
    }
    {
        std::vector<DenseUni<Q>> fam{x, dq({0, 0, 1})};
        CHECK(wronskian(std::span<const DenseUni<Q>>(fam)) == dq({0, 0, 1}));
    }
}

TEST_CASE("substitute_shift")
{
    const BigRat u = 2, v = 3;
    DenseBi<Q> line(Q{});
    line.add_to(0, 1, 1);
    line.add_to(1, 0, -u);
    line.add_to(0, 0, -v);
    DenseBi<Q> z(Q{});
    z.add_to(0, 1, 1);
    CHECK(substitute_shift(line, u, v) == z);

    DenseBi<Q> l2(Q{});
    l2.add_to(0, 1, 1);
    l2.add_to(1, 0, -1);
    l2.add_to(0, 0, -1);
    DenseBi<Q> z2(Q{});
    z2.add_to(0, 2, 1);
    CHECK(substitute_shift(l2 * l2, BigRat(1), BigRat(1)) == z2);
    CHECK(y_valuation(substitute_shift(l2 * l2, BigRat(1), BigRat(1))) == 2);

    DenseBi<Q> xonly(Q{});
    xonly.add_to(3, 0, 5);
    xonly.add_to(0, 0, 1);
    CHECK(substitute_shift(xonly, u, v) == xonly);
}

TEST_CASE("derivative of lacunary univariates")
{
    const BigInt e = BigInt(1) << 40;
    const auto d = derivative_lacunary(LacunaryUni<Q>{Q{}, {{BigRat(1), e}}});
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].coef == BigRat(e));
    CHECK(d.terms[0].exp == e - 1);
    CHECK(derivative_lacunary(LacunaryUni<Q>{Q{}, {{BigRat(4), 0}}}).is_zero());
    const auto p = derivative_lacunary(LacunaryUni<Q>{Q{}, {{BigRat(1), 1}, {BigRat(3), 2}}});
    REQUIRE(p.terms.size() == 2);
    CHECK(p.terms[0].coef == 1);
    CHECK(p.terms[0].exp == 0);
    CHECK(p.terms[1].coef == 6);
    CHECK(p.terms[1].exp == 1);

    const GaloisField f7 = GaloisField::prime(7);
    LacunaryUni<GaloisField> high{f7, {{f7.one(), 7}}};
    CHECK_THROWS_AS(derivative_lacunary(high), PreconditionError);
}

TEST_CASE("size measure")
{
    const auto one = binom({{BigRat(1), 1, 1}});
    const std::size_t base = size_measure(one);
    CHECK(base == 8);
    CHECK(size_measure(binom({{BigRat(1), 2, 1}})) == base + 1);
    const auto more = binom({{BigRat(1), 1, 1}, {BigRat(1), 4, 0}});
    CHECK(size_measure(more) > base);
}
