#pragma once

#include <string>
#include <string_view>

#include "stuffle/lincomb.hpp"
#include "stuffle/word.hpp"

namespace stuffle {

// Word syntax: comma-separated positive letter indices with an optional
// repeat macro, e.g. "2,1,1" and "2,{1}^3"; the empty word is "()".
// Throws ParseError with a 1-based column on malformed input.
Word parse_word(std::string_view text);

// Canonical text form: "2,1,1" (no macros), "()" for the empty word.
// parse_word(print_word(w)) == w.
std::string print_word(const Word& w);

// Combination text: terms in canonical order, e.g. "z2z3 + z3z2 + z5" or
// "2 z1z1 - z2". The unit word prints as "1", the zero combination as "0".
std::string to_text(const LinComb& c);

// Inverse of to_text (also accepts redundant whitespace and leading signs).
LinComb parse_lincomb(std::string_view text);

// LaTeX form: "2 z_{1}z_{1} - z_{2}".
std::string to_latex(const LinComb& c);

// Words read as zeta index strings: "ζ(2,3) + ζ(3,2) + ζ(5)", star variant
// with ζ*. The unit word prints as "1".
std::string to_zeta_text(const LinComb& c, bool star);
std::string to_zeta_latex(const LinComb& c, bool star);

// JSON document {"meta":{"op":...,"weight":...},"terms":[{"coeff":"<decimal
// string>","word":[k1,...]}]}; terms in canonical order, coefficients as
// decimal strings, weight the top term weight (0 for the zero combination).
std::string to_json_string(const LinComb& c, std::string_view op);

}  // namespace stuffle
