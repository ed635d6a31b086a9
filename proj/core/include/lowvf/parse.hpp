#pragma once

#include <string>
#include <string_view>

#include "lowvf/errors.hpp"
#include "lowvf/poly.hpp"

namespace lowvf {

// Parses the polynomial expression grammar
//
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := [coeff ['*']] factor*      (a term needs a coeff or a factor)
//   factor := var ['^' uint]
//   coeff  := uint ['/' uint]
//   var    := prefix uint                (indices 1..var_count)
//
// with whitespace ignored between tokens. Anything outside the grammar
// raises ParseError with the offending position.
Poly parse_poly(std::string_view text, int var_count, std::string_view prefix = "x");

}  // namespace lowvf
