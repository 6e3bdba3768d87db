#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "gfp/family.hpp"
#include "gfp/poly.hpp"

namespace gfp {

// Largest k with 2^k | n. Throws DomainError for n = 0.
unsigned two_adic_valuation(std::uint64_t n);

enum class CaseTag { fib_strong, lucas_equal_e2, lucas_unequal_e2, mixed_dominant, mixed_otherwise };

std::string_view to_string(CaseTag tag);

struct ClosedForm {
  Poly value;
  CaseTag tag;
};

// Fibonacci type: gcd(G'_m, G'_n) = G'_gcd(m,n).
Poly gcd_fib_closed(SequenceCache& fib, std::uint64_t m, std::uint64_t n);

// Lucas type: G*_gcd(m,n) when E2(m) = E2(n), otherwise gcd(G*_gcd(m,n), G*_0).
ClosedForm gcd_lucas_closed(SequenceCache& lucas, std::uint64_t m, std::uint64_t n);

// gcd(G*_k, p0), which is 1 or 2.
Poly gcd_with_initial(SequenceCache& lucas, std::uint64_t k);

// gcd(G'_m, G*_n) for an equivalent pair; m indexes the Fibonacci type side.
ClosedForm gcd_mixed_closed(SequenceCache& fib, SequenceCache& lucas, std::uint64_t m, std::uint64_t n);

// Brute force: gcd(term(a, m), term(b, n)) in Z[x].
Poly oracle_gcd(SequenceCache& a, SequenceCache& b, std::uint64_t m, std::uint64_t n);

struct GcdReport {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::optional<Poly> closed_form;
  Poly oracle;
  bool agrees = false;
  std::optional<CaseTag> case_tag;
};

GcdReport compare(SequenceCache& a, SequenceCache& b, std::uint64_t m, std::uint64_t n, const Poly& closed,
                  std::optional<CaseTag> tag);

// Smallest m <= bound with gcd(G*_m, p0) = 2.
std::optional<std::uint64_t> min_even_index(SequenceCache& lucas, std::uint64_t bound);

}  // namespace gfp
