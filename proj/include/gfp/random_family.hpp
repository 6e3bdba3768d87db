#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gfp/family.hpp"

namespace gfp {

/*
 * Seeded (Fibonacci type, Lucas type) pairs sharing d and g. d and g have
 * degree at most 3 with coefficients in [-5, 5] and are never both
 * constant; p0 is drawn from {1, -1, 2, -2}. Every returned family passes
 * validate_family. Same seed, same pairs.
 */
std::vector<std::pair<Family, Family>> random_pairs(std::size_t count, std::uint64_t seed);

}  // namespace gfp
