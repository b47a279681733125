#pragma once

#include <string>

#include "segrecalc/poly.hpp"

namespace segrecalc {

// Polynomial grammar: integers, variable names, `+ - * ^`, parentheses.
// Whitespace is insignificant. `*` is mandatory between factors except
// immediately after `)`, so "(x+w)x" parses but "2x" does not.
// Errors report a character position.
Poly parse_poly(const std::string& text, RingPtr ring,
                TermOrder order = TermOrder::grevlex());

}  // namespace segrecalc
