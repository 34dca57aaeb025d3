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

#include "lacunary/factors.hpp"
#include "lacunary/roots.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lacunary;
using Q = Rationals;

namespace {

FactorOptions serial()
{
    FactorOptions o;
    o.exec = Exec::Serial;
    return o;
}

LacunaryPoly<Q> poly(std::vector<Term<Q>> terms) { return normalize(LacunaryPoly<Q>{Q{}, std::move(terms)}); }

std::vector<std::pair<std::string, BigInt>> listing(const FactorReport<Q>& r)
{
    std::vector<std::pair<std::string, BigInt>> out;
    for (const auto& e : r.entries) out.emplace_back(format_factor(Q{}, e.factor), e.multiplicity);
    return out;
}

bool lists(const FactorReport<Q>& r, const std::string& f, long mult)
{
    const auto l = listing(r);
    return std::find(l.begin(), l.end(), std::pair{f, BigInt(mult)}) != l.end();
}

}  // namespace

TEST_CASE("dense roots over F_p")
{
    const GaloisField f = GaloisField::prime(7);
    Rng rng(1);
    auto dense = [&](std::vector<long> c) {
        std::vector<FpsElem> e;
        for (long x : c) e.push_back(f.from_int(x));
        return DenseUni<GaloisField>(f, std::move(e));
    };
    const auto r = fp_dense_roots(dense({-1, 0, 1}), rng);
    REQUIRE(r.size() == 2);
    CHECK(f.equal(r[0], f.from_int(1)));
    CHECK(f.equal(r[1], f.from_int(6)));
    CHECK(fp_dense_roots(dense({1, 0, 1}), rng).empty());
    const auto z = fp_dense_roots(dense({0, 1}), rng);
    REQUIRE(z.size() == 1);
    CHECK(f.is_zero(z[0]));
}

TEST_CASE("dense rational roots")
{
    Rng rng(2);
    // (2X - 3)(X + 5)^2 (X^2 + 1)
    const DenseUni<Q> a(Q{}, {BigRat(-3), BigRat(2)}), b(Q{}, {BigRat(5), BigRat(1)}), c(Q{}, {BigRat(1), 0, BigRat(1)});
    const auto roots = dense_rational_roots(a * b * b * c, rng);
    const std::vector<BigRat> want{BigRat(-5), BigRat(3, 2)};
    CHECK(roots == want);
}

TEST_CASE("lacunary rational roots")
{
    Rng rng(3);
    McTally tally;
    const BigInt e = BigInt(1) << 40;
    auto roots = lacunary_univariate_rational_roots(LacunaryUni<Q>{Q{}, {{BigRat(-1), 0}, {BigRat(1), e}}}, {}, rng, tally);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].root == -1);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].root == 1);
    CHECK(roots[1].multiplicity == 1);

    roots = lacunary_univariate_rational_roots(LacunaryUni<Q>{Q{}, {{BigRat(1), 2}}}, {}, rng, tally);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].root == 0);
    CHECK(roots[0].multiplicity == 2);

    roots = lacunary_univariate_rational_roots(LacunaryUni<Q>{Q{}, {{BigRat(-2), 0}, {BigRat(2), 5}}}, {}, rng, tally);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].root == 1);
}

TEST_CASE("linear factors over Q")
{
    // XY - X - Y + 1 = (X - 1)(Y - 1)
    const auto r = linear_factors_q(poly({{BigRat(1), 1, 1}, {BigRat(-1), 1, 0}, {BigRat(-1), 0, 1}, {BigRat(1), 0, 0}}), serial());
    CHECK(r.entries.size() == 2);
    CHECK(lists(r, "X - 1", 1));
    CHECK(lists(r, "Y - 1", 1));

    const auto m = linear_factors_q(poly({{BigRat(1), 5, 3}}), serial());
    CHECK(m.entries.size() == 2);
    CHECK(lists(m, "X", 5));
    CHECK(lists(m, "Y", 3));

    const BigInt n = BigInt(1) << 40;
    oracle::Bi line{{{0, 1}, 1}, {{1, 0}, -2}, {{0, 0}, -3}};
    oracle::Bi s{{{n, 0}, 1}, {{0, n}, 1}, {{0, 0}, 7}};
    const auto p = oracle::to_lacunary(oracle::bi_mul(line, s));
    const auto rep = linear_factors_q(p, serial());
    CHECK(lists(rep, "-2*X + Y - 3", 1));
    CHECK(reverify(p, rep, serial()));
    const auto restricted = restriction_along(p, canonical_linear(BigRat(-2), BigRat(1), BigRat(-3)));
    CHECK(zero_test_q(restricted).verdict == Verdict::Zero);

    CHECK_THROWS_AS(linear_factors_q(LacunaryPoly<Q>{}), DomainError);
}

TEST_CASE("squared factor multiplicity")
{
    oracle::Bi line{{{0, 1}, 1}, {{1, 0}, -2}, {{0, 0}, -3}};
    oracle::Bi s{{{9, 2}, 1}, {{4, 11}, -5}, {{0, 0}, 2}};
    const auto p = oracle::to_lacunary(oracle::bi_mul(line, oracle::bi_mul(line, s)));
    const auto f = canonical_linear(BigRat(-2), BigRat(1), BigRat(-3));
    const auto dec = piece_decomposition(p, 1);
    CHECK(factor_multiplicity(dec, f) == 2);
    CHECK(factor_multiplicity(dec, canonical_linear(BigRat(-2), BigRat(1), BigRat(-4))) == 0);
    CHECK(oracle::curve_multiplicity(oracle::bi_mul(line, oracle::bi_mul(line, s)), {BigRat(1)}, {BigRat(3), BigRat(2)}) == 2);
}

TEST_CASE("canonical form")
{
    const auto a = canonical_linear(BigRat(4), BigRat(-2), BigRat(6));
    const auto b = canonical_linear(BigRat(-2, 3), BigRat(1, 3), BigRat(-1));
    CHECK(a.u == b.u);
    CHECK(a.v == b.v);
    CHECK(a.w == b.w);
    CHECK(a.v == 1);

    // scaling and permuting the input leave the report unchanged
    oracle::Bi line{{{0, 1}, 1}, {{1, 0}, BigRat(-1, 2)}, {{0, 0}, 4}};
    oracle::Bi s{{{30, 2}, 1}, {{1, 19}, 3}, {{0, 0}, -1}};
    auto p = oracle::to_lacunary(oracle::bi_mul(line, s));
    const auto base = listing(linear_factors_q(p, serial()));
    for (auto& t : p.terms) t.coef *= BigRat(-7, 3);
    std::reverse(p.terms.begin(), p.terms.end());
    CHECK(listing(linear_factors_q(normalize(p), serial())) == base);
}

TEST_CASE("multilinear factors")
{
    const BigInt n = BigInt(1) << 30;
    const auto p = poly({{BigRat(1), n + 1, 1}, {BigRat(3), 1, 1}, {BigRat(-1), n, 0}, {BigRat(-3), 0, 0}});
    const auto r = multilinear_factors_q(p, serial());
    CHECK(lists(r, "X*Y - 1", 1));
    CHECK(reverify(p, r, serial()));

    // XY - X + Y - 1 = (X + 1)(Y - 1)
    const auto d = multilinear_factors_q(poly({{BigRat(1), 1, 1}, {BigRat(-1), 1, 0}, {BigRat(1), 0, 1}, {BigRat(-1), 0, 0}}), serial());
    CHECK(d.entries.size() == 2);
    CHECK(lists(d, "X + 1", 1));
    CHECK(lists(d, "Y - 1", 1));

    const auto xy = multilinear_factors_q(poly({{BigRat(1), 1, 1}}), serial());
    CHECK(xy.entries.size() == 2);
    CHECK(lists(xy, "X", 1));
    CHECK(lists(xy, "Y", 1));

    oracle::Bi f{{{1, 1}, 1}, {{0, 1}, 2}, {{1, 0}, -3}, {{0, 0}, -5}};
    oracle::Bi s{{{17, 3}, 1}, {{2, 40}, -2}, {{0, 0}, 1}};
    const auto sq = oracle::bi_mul(f, oracle::bi_mul(f, s));
    const auto pr = multilinear_factors_q(oracle::to_lacunary(sq), serial());
    CHECK(lists(pr, "X*Y + 2*Y - 3*X - 5", 2));
    CHECK(oracle::curve_multiplicity(sq, {BigRat(2), BigRat(1)}, {BigRat(5), BigRat(3)}) == 2);
}

TEST_CASE("linear factors over F_p")
{
    const GaloisField f = GaloisField::prime(101);
    LacunaryPoly<GaloisField> planted{f, {}};
    for (const auto& [c1, a1, b1] : {std::tuple{2, 1, 0}, std::tuple{3, 0, 1}, std::tuple{5, 0, 0}})
        for (const auto& [a2, b2] : {std::pair{90, 0}, std::pair{0, 90}, std::pair{0, 0}})
            planted.terms.push_back({f.from_int(c1), BigInt(a1 + a2), BigInt(b1 + b2)});
    planted = normalize(std::move(planted));
    const auto r = linear_factors_fp(planted, serial());
    const auto want = canonical_linear(f, f.from_int(2), f.from_int(3), f.from_int(5));
    REQUIRE(r.entries.size() >= 1);
    bool found = false;
    for (const auto& e : r.entries) {
        const auto& l = std::get<LinearFactor<GaloisField>>(e.factor);
        found |= f.equal(l.u, want.u) && f.equal(l.v, want.v) && f.equal(l.w, want.w);
    }
    CHECK(found);
    CHECK(r.certainty == Certainty::MonteCarlo);

    LacunaryPoly<GaloisField> mono{f, {{f.one(), 4, 7}}};
    CHECK(linear_factors_fp(mono, serial()).entries.empty());

    CHECK_THROWS_AS(linear_factors_fp(planted, serial(), LinearForm::XminusA), UnsupportedFormError);

    const GaloisField f2 = GaloisField::prime(2);
    LacunaryPoly<GaloisField> two{f2, {{f2.one(), 3, 0}, {f2.one(), 0, 1}}};
    CHECK_THROWS_AS(linear_factors_fp(two, serial()), PreconditionError);
}
