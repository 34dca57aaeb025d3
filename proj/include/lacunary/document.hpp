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

#ifndef LACUNARY_DOCUMENT_HPP
#define LACUNARY_DOCUMENT_HPP

#include "lacunary/coeffring.hpp"
#include "lacunary/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace lacunary {

/*
 * Text format, one directive or term per line, '#' starts a comment:
 *
 *   kind lacunary | binom
 *   field Q | field GF <p> [<s> <phi_0> ... <phi_s>]
 *   base <u> <v> [<d>]                 (binom only)
 *   <coef> <alpha> <beta>              (one per term)
 *
 * Coefficients are "n" or "n/d"; over F_{p^s} with s > 1 an element may
 * also be written as colon-separated coordinates "c_0:c_1:...". A document
 * starting with '{' is read as JSON:
 *
 *   {"kind": "binom", "field": {"type": "GF", "p": 101},
 *    "base": {"u": "1", "v": "1", "d": "1"},
 *    "terms": [["3/2", "5", "0"], ...]}
 *
 * Numbers may be JSON integers or decimal strings.
 */

class ParseError : public std::runtime_error {
public:
    enum class Code {
        Syntax,
        MalformedNumber,
        NegativeExponent,
        NotPrime,
        MalformedPhi,
        ReduciblePhi,
        MissingHeader,
        BadCoefficient,
    };

    ParseError(Code code, std::size_t line, std::size_t column, const std::string& what);

    Code code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    std::string detail() const { return detail_; }

private:
    Code code_;
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

std::string to_string(ParseError::Code c);

using AnyPoly = std::variant<LacunaryPoly<Rationals>, LacunaryPoly<GaloisField>, BinomExprPoly<Rationals>,
                             BinomExprPoly<GaloisField>>;

struct InputDocument {
    AnyPoly poly;

    bool is_binom() const { return poly.index() >= 2; }
    bool over_q() const { return poly.index() % 2 == 0; }
};

InputDocument parse_document(std::string_view text);

/// Canonical text form: normalized terms, one header line each.
std::string serialize_text(const InputDocument& doc);
std::string serialize_json(const InputDocument& doc);

}  // namespace lacunary

#endif  // LACUNARY_DOCUMENT_HPP
