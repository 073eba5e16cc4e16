#pragma once

#include "eqcohom/grading.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace eqcohom::cli {

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int verification_failure = 1;
inline constexpr int usage_error = 2;

// argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

// "p0:p1,q0:q1", inclusive; throws std::invalid_argument.
Window parse_window(std::string_view s);

}  // namespace eqcohom::cli
