#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gfp/family.hpp"

namespace gfp {

constexpr std::uint64_t kMaxTermIndex = 10000;
// gcd keeps every term up to the index in memory, so its cap is lower.
constexpr std::uint64_t kMaxGcdIndex = 2000;

// A builtin name or an inline JSON family object. Throws UnknownFamily or
// ParseError; side conditions are checked by the caller.
Family resolve_family(std::string_view selector);

// Runs one gfp invocation; args excludes the program name. Returns 0 when
// every check passed, 1 when some check failed and 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfp
