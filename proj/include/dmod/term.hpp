#pragma once

#include <vector>

#include "dmod/monomial.hpp"
#include "dmod/rational.hpp"

namespace dmod {

// coef * mono, placed in free-module component comp (0 for ring elements).
struct Term {
  Monomial mono;
  Rational coef;
  int comp = 0;
};

using TermList = std::vector<Term>;

}  // namespace dmod
