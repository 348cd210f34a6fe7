#pragma once

#include <map>
#include <string>
#include <string_view>

#include "qdilog/bigfloat.hpp"

namespace qdilog {

// Parses a small complex-valued expression grammar at the given precision:
// decimal literals, i, pi, exp(...), named variables, unary +/-, binary
// + - * /, parentheses. Test points like exp(i*pi/4) or 1.1*exp(i*pi/5) parse
// without decimal truncation beyond the working precision.
BigComplex parse_complex_expr(std::string_view text, int digits,
                              const std::map<std::string, BigComplex>& vars = {});

}  // namespace qdilog
