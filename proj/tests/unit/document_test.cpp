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

#include "lacunary/document.hpp"

#include <doctest.h>

#include <string>

using namespace lacunary;

namespace {

ParseError::Code error_code(const std::string& text)
{
    try {
        (void)parse_document(text);
    } catch (const ParseError& e) {
        return e.code();
    }
    FAIL("document parsed: " << text);
    return ParseError::Code::Syntax;
}

std::string random_document(Rng& rng, int i)
{
    std::string s;
    const bool binom = i % 2 == 0;
    s += binom ? "kind binom\n" : "kind lacunary\n";
    const int field = i % 3;
    if (field == 0) s += "field Q\n";
    if (field == 1) s += "field GF 101\n";
    if (field == 2) s += "field GF 7 2 1 0 1\n";
    if (binom) {
        s += "base " + std::to_string(rng() % 5) + " " + std::to_string(1 + rng() % 4);
        if (rng() % 2) s += " " + std::to_string(1 + rng() % 3);
        s += "\n";
    }
    const int k = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < k; ++j) {
        std::string coef = std::to_string(static_cast<long>(rng() % 19) - 9);
        if (field == 0 && rng() % 3 == 0) coef += "/" + std::to_string(1 + rng() % 6);
        if (field == 2 && rng() % 2) coef = std::to_string(rng() % 7) + ":" + std::to_string(rng() % 7);
        const std::string alpha = rng() % 4 == 0 ? "340282366920938463463374607431768211456" : std::to_string(rng() % 50);
        s += coef + " " + alpha + " " + std::to_string(rng() % 50);
        if (rng() % 4 == 0) s += "  # note";
        s += "\n";
    }
    return s;
}

}  // namespace

TEST_CASE("minimal documents")
{
    const auto d = parse_document("kind lacunary\nfield Q\n3/2 1 2\n");
    REQUIRE(std::holds_alternative<LacunaryPoly<Rationals>>(d.poly));
    const auto& p = std::get<LacunaryPoly<Rationals>>(d.poly);
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms[0].coef == BigRat(3, 2));
    CHECK(d.over_q());
    CHECK(!d.is_binom());

    const auto big = parse_document("kind lacunary\nfield Q\n1 340282366920938463463374607431768211456 0\n");
    CHECK(std::get<LacunaryPoly<Rationals>>(big.poly).terms[0].alpha == BigInt(1) << 128);

    const auto j = parse_document(R"({"kind": "binom", "field": {"type": "GF", "p": 13}, "base": {"u": 2, "v": "3"},
                                      "terms": [[1, "4", 0], ["-2", 0, 1]]})");
    CHECK(j.is_binom());
    CHECK(!j.over_q());
}

TEST_CASE("parse errors")
{
    CHECK(error_code("kind lacunary\nfield Q\n1x 1 1\n") == ParseError::Code::MalformedNumber);
    CHECK(error_code("kind lacunary\nfield Q\n1 -1 1\n") == ParseError::Code::NegativeExponent);
    CHECK(error_code("kind lacunary\nfield GF 4\n1 1 1\n") == ParseError::Code::NotPrime);
    CHECK(error_code(R"({"kind": "lacunary", "field": {"type": "GF", "p": 4}, "terms": []})") ==
          ParseError::Code::NotPrime);
    CHECK(error_code("kind lacunary\nfield GF 2 2 1 0 1\n1 1 1\n") == ParseError::Code::ReduciblePhi);
    CHECK(error_code("kind lacunary\nfield GF 7 2 1 0\n1 1 1\n") == ParseError::Code::MalformedPhi);
    CHECK(error_code("kind lacunary\n1 1 1\n") == ParseError::Code::MissingHeader);
    CHECK(error_code("kind binom\nfield Q\n1 1 1\n") == ParseError::Code::MissingHeader);
    CHECK(error_code("kind lacunary\nfield GF 7\n1/14 1 1\n") == ParseError::Code::BadCoefficient);
    CHECK(error_code("kind lacunary\nfield Q\n1 1\n") == ParseError::Code::Syntax);
    CHECK(error_code("{ not json") == ParseError::Code::Syntax);

    try {
        (void)parse_document("kind lacunary\nfield Q\n1 1 1\n2 3 -4\n");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 5);
        CHECK(to_string(e.code()) == "negative-exponent");
    }
}

TEST_CASE("round trip")
{
    Rng rng(51);
    for (int i = 0; i < 50; ++i) {
        const std::string text = random_document(rng, i);
        const auto doc = parse_document(text);
        const std::string canon = serialize_text(doc);
        CHECK(serialize_text(parse_document(canon)) == canon);
        const std::string js = serialize_json(doc);
        CHECK(serialize_text(parse_document(js)) == canon);
        CHECK(serialize_json(parse_document(js)) == js);
    }
}

TEST_CASE("canonical text")
{
    const auto doc = parse_document("kind lacunary\nfield Q\n# comment\n2 5 0\n3 5 0\n1 0 0\n-1 0 0\n4/2 1 1\n");
    CHECK(serialize_text(doc) == "kind lacunary\nfield Q\n2 1 1\n5 5 0\n");
}
