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

#include <json.hpp>

#include <cctype>
#include <optional>
#include <sstream>

namespace lacunary {

namespace {

struct Pos {
    std::size_t line = 0;
    std::size_t column = 0;
};

struct Token {
    std::string text;
    Pos pos;
};

struct RawTerm {
    Token coef;
    Token alpha;
    Token beta;
};

// Everything read from the document before the field is known.
struct RawDoc {
    bool binom = false;
    std::optional<Pos> field_pos;
    FieldSpec field;
    std::optional<Token> u, v, d;
    Pos base_pos;
    std::vector<RawTerm> terms;
};

[[noreturn]] void fail(ParseError::Code code, Pos pos, const std::string& what)
{
    throw ParseError(code, pos.line, pos.column, what);
}

BigInt read_int(const Token& t, const char* what)
{
    try {
        return parse_bigint(t.text);
    } catch (const std::invalid_argument&) {
        fail(ParseError::Code::MalformedNumber, t.pos, std::string("malformed ") + what + " '" + t.text + "'");
    }
}

BigInt read_exponent(const Token& t)
{
    BigInt e = read_int(t, "exponent");
    if (e < 0) fail(ParseError::Code::NegativeExponent, t.pos, "negative exponent " + t.text);
    return e;
}

BigRat read_rat(const Token& t)
{
    try {
        return parse_bigrat(t.text);
    } catch (const std::invalid_argument&) {
        fail(ParseError::Code::MalformedNumber, t.pos, "malformed coefficient '" + t.text + "'");
    }
}

template <class F>
typename F::Elem read_coef(const F& f, const Token& t);

template <>
BigRat read_coef(const Rationals&, const Token& t)
{
    return read_rat(t);
}

template <>
FpsElem read_coef(const GaloisField& f, const Token& t)
{
    try {
        if (t.text.find(':') == std::string::npos) return f.from_rat(read_rat(t));
        std::vector<BigInt> coords;
        std::string_view rest = t.text;
        for (;;) {
            const auto colon = rest.find(':');
            coords.push_back(read_int(Token{std::string(rest.substr(0, colon)), t.pos}, "coordinate"));
            if (colon == std::string_view::npos) break;
            rest.remove_prefix(colon + 1);
        }
        return f.from_coords(std::move(coords));
    } catch (const DomainError& e) {
        fail(ParseError::Code::BadCoefficient, t.pos, e.what());
    }
}

template <class F>
AnyPoly build(const F& field, const RawDoc& raw)
{
    std::vector<Term<F>> terms;
    for (const auto& rt : raw.terms)
        terms.push_back({read_coef(field, rt.coef), read_exponent(rt.alpha), read_exponent(rt.beta)});
    if (!raw.binom) return normalize(LacunaryPoly<F>{field, std::move(terms)});
    if (!raw.u || !raw.v) fail(ParseError::Code::MissingHeader, raw.base_pos, "binom document without a base line");
    BinomExprPoly<F> p{field, read_coef(field, *raw.u), read_coef(field, *raw.v), BigInt(1), std::move(terms)};
    if (raw.d) {
        p.d = read_int(*raw.d, "base exponent");
        if (p.d < 1) fail(ParseError::Code::MalformedNumber, raw.d->pos, "base exponent d must be at least 1");
    }
    return normalize(std::move(p));
}

InputDocument finish(const RawDoc& raw)
{
    if (!raw.field_pos) fail(ParseError::Code::MissingHeader, Pos{1, 1}, "missing field line");
    if (raw.field.is_rationals()) return InputDocument{build(Rationals{}, raw)};
    std::optional<GaloisField> f;
    try {
        f.emplace(raw.field);
    } catch (const FieldError& e) {
        const auto code = e.code() == FieldError::Code::NotPrime      ? ParseError::Code::NotPrime
                          : e.code() == FieldError::Code::ReduciblePhi ? ParseError::Code::ReduciblePhi
                                                                       : ParseError::Code::MalformedPhi;
        fail(code, *raw.field_pos, e.what());
    }
    return InputDocument{build(*f, raw)};
}

// ---------------------------------------------------------------------------
// Text format

std::vector<Token> tokenize(std::string_view line, std::size_t lineno)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back({std::string(line.substr(start, i - start)), Pos{lineno, start + 1}});
    }
    return out;
}

void parse_field_line(const std::vector<Token>& tok, RawDoc& raw)
{
    const Pos at = tok[0].pos;
    if (tok.size() == 2 && tok[1].text == "Q") {
        raw.field = FieldSpec::rationals();
    } else if (tok.size() >= 3 && tok[1].text == "GF") {
        const BigInt p = read_int(tok[2], "characteristic");
        if (tok.size() == 3) {
            raw.field = FieldSpec::prime_field(p);
        } else {
            const BigInt s = read_int(tok[3], "extension degree");
            if (s < 1 || !fits_ulong(s) || s > 64)
                fail(ParseError::Code::MalformedPhi, tok[3].pos, "extension degree out of range");
            if (tok.size() != 4 + s.get_ui() + 1)
                fail(ParseError::Code::MalformedPhi, at, "expected " + to_string(BigInt(s + 1)) + " coefficients of phi");
            std::vector<BigInt> phi;
            for (std::size_t i = 4; i < tok.size(); ++i) phi.push_back(read_int(tok[i], "phi coefficient"));
            raw.field = FieldSpec::prime_field(p, static_cast<unsigned>(s.get_ui()), std::move(phi));
        }
    } else {
        fail(ParseError::Code::Syntax, at, "expected 'field Q' or 'field GF <p> [<s> <phi...>]'");
    }
    raw.field_pos = at;
}

InputDocument parse_text(std::string_view text)
{
    RawDoc raw;
    bool seen_kind = false;
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        const auto tok = tokenize(line, lineno);
        if (tok.empty()) continue;
        const std::string& head = tok[0].text;
        if (head == "kind") {
            if (tok.size() != 2 || (tok[1].text != "lacunary" && tok[1].text != "binom"))
                fail(ParseError::Code::Syntax, tok[0].pos, "expected 'kind lacunary' or 'kind binom'");
            if (seen_kind || !raw.terms.empty()) fail(ParseError::Code::Syntax, tok[0].pos, "misplaced kind line");
            raw.binom = tok[1].text == "binom";
            seen_kind = true;
        } else if (head == "field") {
            if (raw.field_pos) fail(ParseError::Code::Syntax, tok[0].pos, "duplicate field line");
            parse_field_line(tok, raw);
        } else if (head == "base") {
            if (tok.size() != 3 && tok.size() != 4)
                fail(ParseError::Code::Syntax, tok[0].pos, "expected 'base <u> <v> [<d>]'");
            raw.u = tok[1];
            raw.v = tok[2];
            if (tok.size() == 4) raw.d = tok[3];
            raw.base_pos = tok[0].pos;
        } else {
            if (tok.size() != 3) fail(ParseError::Code::Syntax, tok[0].pos, "expected '<coef> <alpha> <beta>'");
            raw.terms.push_back({tok[0], tok[1], tok[2]});
        }
    }
    if (raw.u && !raw.binom) fail(ParseError::Code::Syntax, raw.base_pos, "base line in a lacunary document");
    if (raw.binom && !raw.u) fail(ParseError::Code::MissingHeader, Pos{1, 1}, "binom document without a base line");
    return finish(raw);
}

// ---------------------------------------------------------------------------
// JSON format

using nlohmann::json;

Token json_number(const json& j, const std::string& path)
{
    if (j.is_string()) return {j.get<std::string>(), {}};
    if (j.is_number_integer()) return {j.dump(), {}};
    fail(ParseError::Code::MalformedNumber, {}, path + ": expected an integer or a decimal string");
}

InputDocument parse_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        Pos pos{1, 1};
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n')
                ++pos.line, pos.column = 1;
            else
                ++pos.column;
        }
        fail(ParseError::Code::Syntax, pos, "invalid JSON");
    }
    if (!j.is_object()) fail(ParseError::Code::Syntax, {}, "top level must be an object");
    RawDoc raw;
    const std::string kind = j.value("kind", std::string("lacunary"));
    if (kind != "lacunary" && kind != "binom") fail(ParseError::Code::Syntax, {}, "kind: unknown value " + kind);
    raw.binom = kind == "binom";

    if (!j.contains("field") || !j["field"].is_object()) fail(ParseError::Code::MissingHeader, {}, "missing field");
    const json& fj = j["field"];
    const std::string type = fj.value("type", std::string("Q"));
    if (type == "Q") {
        raw.field = FieldSpec::rationals();
    } else if (type == "GF") {
        if (!fj.contains("p")) fail(ParseError::Code::MissingHeader, {}, "field: missing p");
        const BigInt p = read_int(json_number(fj["p"], "field.p"), "characteristic");
        const BigInt s = fj.contains("s") ? read_int(json_number(fj["s"], "field.s"), "extension degree") : BigInt(1);
        if (s < 1 || !fits_ulong(s) || s > 64) fail(ParseError::Code::MalformedPhi, {}, "field.s out of range");
        std::vector<BigInt> phi;
        if (fj.contains("phi")) {
            if (!fj["phi"].is_array()) fail(ParseError::Code::MalformedPhi, {}, "field.phi must be an array");
            for (const auto& c : fj["phi"]) phi.push_back(read_int(json_number(c, "field.phi"), "phi coefficient"));
        }
        if (s > 1 && phi.size() != s.get_ui() + 1)
            fail(ParseError::Code::MalformedPhi, {}, "field.phi must have s+1 coefficients");
        raw.field = FieldSpec::prime_field(p, static_cast<unsigned>(s.get_ui()), std::move(phi));
    } else {
        fail(ParseError::Code::Syntax, {}, "field.type: unknown value " + type);
    }
    raw.field_pos = Pos{};

    if (j.contains("base")) {
        if (!raw.binom) fail(ParseError::Code::Syntax, {}, "base given for a lacunary document");
        const json& b = j["base"];
        if (!b.is_object() || !b.contains("u") || !b.contains("v"))
            fail(ParseError::Code::MissingHeader, {}, "base needs u and v");
        raw.u = json_number(b["u"], "base.u");
        raw.v = json_number(b["v"], "base.v");
        if (b.contains("d")) raw.d = json_number(b["d"], "base.d");
    }
    if (j.contains("terms")) {
        if (!j["terms"].is_array()) fail(ParseError::Code::Syntax, {}, "terms must be an array");
        std::size_t i = 0;
        for (const auto& t : j["terms"]) {
            const std::string path = "terms[" + std::to_string(i++) + "]";
            if (!t.is_array() || t.size() != 3) fail(ParseError::Code::Syntax, {}, path + ": expected [coef, alpha, beta]");
            raw.terms.push_back({json_number(t[0], path), json_number(t[1], path), json_number(t[2], path)});
        }
    }
    return finish(raw);
}

// ---------------------------------------------------------------------------
// Serialization

std::string field_line(const FieldSpec& s)
{
    if (s.is_rationals()) return "field Q";
    std::string out = "field GF " + to_string(s.p);
    if (s.s > 1) {
        out += " " + std::to_string(s.s);
        for (const auto& c : s.phi) out += " " + to_string(c);
    }
    return out;
}

json field_json(const FieldSpec& s)
{
    if (s.is_rationals()) return json{{"type", "Q"}};
    json out{{"type", "GF"}, {"p", to_string(s.p)}};
    if (s.s > 1) {
        out["s"] = std::to_string(s.s);
        json phi = json::array();
        for (const auto& c : s.phi) phi.push_back(to_string(c));
        out["phi"] = phi;
    }
    return out;
}

}  // namespace

ParseError::ParseError(Code code, std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + what : what),
      code_(code),
      line_(line),
      column_(column),
      detail_(what)
{
}

std::string to_string(ParseError::Code c)
{
    switch (c) {
    case ParseError::Code::Syntax: return "syntax";
    case ParseError::Code::MalformedNumber: return "malformed-number";
    case ParseError::Code::NegativeExponent: return "negative-exponent";
    case ParseError::Code::NotPrime: return "not-prime";
    case ParseError::Code::MalformedPhi: return "malformed-phi";
    case ParseError::Code::ReduciblePhi: return "reducible-phi";
    case ParseError::Code::MissingHeader: return "missing-header";
    case ParseError::Code::BadCoefficient: return "bad-coefficient";
    }
    return "syntax";
}

InputDocument parse_document(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
    return parse_text(text);
}

std::string serialize_text(const InputDocument& doc)
{
    std::ostringstream os;
    std::visit(
        [&](const auto& p) {
            const auto& f = p.field;
            using P = std::decay_t<decltype(p)>;
            constexpr bool binom = !std::is_same_v<P, LacunaryPoly<std::decay_t<decltype(f)>>>;
            os << "kind " << (binom ? "binom" : "lacunary") << '\n' << field_line(f.spec()) << '\n';
            if constexpr (binom) {
                os << "base " << f.format(p.u) << ' ' << f.format(p.v);
                if (p.d != 1) os << ' ' << to_string(p.d);
                os << '\n';
            }
            for (const auto& t : p.terms)
                os << f.format(t.coef) << ' ' << to_string(t.alpha) << ' ' << to_string(t.beta) << '\n';
        },
        doc.poly);
    return os.str();
}

std::string serialize_json(const InputDocument& doc)
{
    json out;
    std::visit(
        [&](const auto& p) {
            const auto& f = p.field;
            using P = std::decay_t<decltype(p)>;
            constexpr bool binom = !std::is_same_v<P, LacunaryPoly<std::decay_t<decltype(f)>>>;
            out["kind"] = binom ? "binom" : "lacunary";
            out["field"] = field_json(f.spec());
            if constexpr (binom) out["base"] = json{{"u", f.format(p.u)}, {"v", f.format(p.v)}, {"d", to_string(p.d)}};
            json terms = json::array();
            for (const auto& t : p.terms) terms.push_back({f.format(t.coef), to_string(t.alpha), to_string(t.beta)});
            out["terms"] = terms;
        },
        doc.poly);
    return out.dump(2) + "\n";
}

}  // namespace lacunary
