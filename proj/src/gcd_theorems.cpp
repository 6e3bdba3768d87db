#include "gfp/gcd_theorems.hpp"

#include <numeric>
#include <string>

#include "gfp/errors.hpp"

namespace gfp {

unsigned two_adic_valuation(std::uint64_t n) {
  if (n == 0) throw DomainError("two_adic_valuation(0) is undefined");
  unsigned k = 0;
  while ((n & 1U) == 0) {
    n >>= 1;
    ++k;
  }
  return k;
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::fib_strong:
      return "FibStrong";
    case CaseTag::lucas_equal_e2:
      return "LucasEqualE2";
    case CaseTag::lucas_unequal_e2:
      return "LucasUnequalE2";
    case CaseTag::mixed_dominant:
      return "MixedDominant";
    case CaseTag::mixed_otherwise:
      return "MixedOtherwise";
  }
  return "?";
}

namespace {

void require_kind(const SequenceCache& cache, Kind kind, const char* op) {
  if (cache.family().kind != kind)
    throw WrongKind(std::string(op) + " needs a " + std::string(to_string(kind)) + " type family, got \"" +
                    cache.family().name + "\"");
}

void require_positive(std::uint64_t m, std::uint64_t n, const char* op) {
  if (m == 0 || n == 0) throw DomainError(std::string(op) + " needs positive indices");
}

}  // namespace

Poly gcd_fib_closed(SequenceCache& fib, std::uint64_t m, std::uint64_t n) {
  require_kind(fib, Kind::fibonacci, "gcd_fib_closed");
  require_positive(m, n, "gcd_fib_closed");
  return normalized(fib.term(std::gcd(m, n)));
}

Poly gcd_with_initial(SequenceCache& lucas, std::uint64_t k) {
  require_kind(lucas, Kind::lucas, "gcd_with_initial");
  return gcd(lucas.term(k), lucas.family().p0);
}

ClosedForm gcd_lucas_closed(SequenceCache& lucas, std::uint64_t m, std::uint64_t n) {
  require_kind(lucas, Kind::lucas, "gcd_lucas_closed");
  require_positive(m, n, "gcd_lucas_closed");
  const std::uint64_t k = std::gcd(m, n);
  if (two_adic_valuation(m) == two_adic_valuation(n)) return {normalized(lucas.term(k)), CaseTag::lucas_equal_e2};
  return {gcd_with_initial(lucas, k), CaseTag::lucas_unequal_e2};
}

ClosedForm gcd_mixed_closed(SequenceCache& fib, SequenceCache& lucas, std::uint64_t m, std::uint64_t n) {
  require_kind(fib, Kind::fibonacci, "gcd_mixed_closed");
  require_kind(lucas, Kind::lucas, "gcd_mixed_closed");
  if (!same_recurrence(fib.family(), lucas.family()))
    throw NotEquivalent("\"" + fib.family().name + "\" and \"" + lucas.family().name + "\" differ in d or g");
  require_positive(m, n, "gcd_mixed_closed");
  const std::uint64_t k = std::gcd(m, n);
  if (two_adic_valuation(m) > two_adic_valuation(n)) return {normalized(lucas.term(k)), CaseTag::mixed_dominant};
  return {gcd_with_initial(lucas, k), CaseTag::mixed_otherwise};
}

Poly oracle_gcd(SequenceCache& a, SequenceCache& b, std::uint64_t m, std::uint64_t n) {
  return gcd(a.term(m), b.term(n));
}

GcdReport compare(SequenceCache& a, SequenceCache& b, std::uint64_t m, std::uint64_t n, const Poly& closed,
                  std::optional<CaseTag> tag) {
  GcdReport r;
  r.m = m;
  r.n = n;
  r.closed_form = closed;
  r.oracle = oracle_gcd(a, b, m, n);
  r.agrees = closed == r.oracle;
  r.case_tag = tag;
  return r;
}

std::optional<std::uint64_t> min_even_index(SequenceCache& lucas, std::uint64_t bound) {
  require_kind(lucas, Kind::lucas, "min_even_index");
  const Poly two{2};
  for (std::uint64_t k = 1; k <= bound; ++k)
    if (gcd_with_initial(lucas, k) == two) return k;
  return std::nullopt;
}

}  // namespace gfp
