#pragma once

#include <string_view>

#include "dmod/poly.hpp"

namespace dmod {

// Parses an element of alg. Grammar:
//   expr   := ['-'|'+'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := coeff | var ('^' nat)? | '(' expr ')' ('^' nat)?
//   coeff  := nat ('/' nat)?
// '*' is the algebra product, so "Dx*x" means Dx x = x Dx + 1 in a Weyl
// algebra. Errors carry the byte position.
Poly parse_element(std::string_view text, const AlgebraPtr& alg);

}  // namespace dmod
