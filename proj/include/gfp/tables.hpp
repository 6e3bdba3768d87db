#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gfp/gcd_theorems.hpp"

namespace gfp {

constexpr std::uint64_t kMaxTableIndex = 64;

/*
 * One row of a gcd table sweep over 1 <= m, n <= N.
 *   table 3: every pair is FibStrong, so first_case = comparisons.
 *   table 4: first_case counts E2(m) = E2(n), second_case the rest.
 *   table 5: first_case counts E2(m) > E2(n), second_case the rest.
 * literal_checks counts pairs whose tabulated entry is the constant 1
 * (tables 4 and 5, second case); literal_matches those where the value is 1.
 */
struct TableRow {
  std::string label;
  std::uint64_t comparisons = 0;
  std::uint64_t agreements = 0;
  std::uint64_t first_case = 0;
  std::uint64_t second_case = 0;
  std::uint64_t literal_checks = 0;
  std::uint64_t literal_matches = 0;
  std::vector<GcdReport> mismatches;

  bool ok() const { return agreements == comparisons && literal_matches == literal_checks; }
};

// Throws BadTable for which outside {3, 4, 5}, IndexTooLarge for N > 64 and
// DomainError for N = 0.
std::vector<TableRow> reproduce_table(int which, std::uint64_t max_index, std::size_t threads);

}  // namespace gfp
