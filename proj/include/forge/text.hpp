#pragma once

#include <string>

#include "forge/forms.hpp"

namespace forge {

// Parses the canonical text form of polynomials / rational functions
// ("(3/2 + 1/2*i)*x^2*y / (x * (x^2 - 2*x + 1)^2)"). Accepts general +,-,*,/,^
// expressions over the chart's variables, integers, rationals p/q and i.
// A division whose right-hand side is a parenthesized product of powers is
// absorbed factor-by-factor, so printed forms re-parse with the same
// factored denominator.
RationalFn parse_rational_fn(const std::string& text, const ChartPtr& chart);
Poly parse_poly(const std::string& text, const ChartPtr& chart);

}  // namespace forge
