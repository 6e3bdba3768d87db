#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfp/family.hpp"
#include "gfp/poly.hpp"

namespace gfp {

struct IdentityReport {
  std::string identity_id;
  std::string family;
  std::vector<std::pair<std::string, std::int64_t>> params;
  Poly lhs;
  Poly rhs;
  bool pass = false;
  std::optional<Poly> witness;
};

// G'_{m+n+1} = G'_{m+1} G'_{n+1} + g G'_m G'_n.
IdentityReport check_convolution(SequenceCache& fib, std::uint64_t m, std::uint64_t n);

// For n >= m:
//   "addition.minus": G'_{n+m} = alpha G'_n G*_m - (-g)^m G'_{n-m}
//   "addition.plus":  G'_{n+m} = alpha G'_m G*_n + (-g)^m G'_{n-m}
std::array<IdentityReport, 2> check_addition_laws(SequenceCache& fib, SequenceCache& lucas, std::uint64_t m,
                                                  std::uint64_t n);

// Difference of the two addition laws: 2 (-g)^m G'_{n-m} = alpha (G'_n G*_m - G'_m G*_n).
IdentityReport check_addition_cross(SequenceCache& fib, SequenceCache& lucas, std::uint64_t m, std::uint64_t n);

//   "discriminant.fib":   (d^2+4g) G'_{m+n+1} = alpha^2 (G*_{m+1} G*_{n+1} + g G*_m G*_n)
//   "discriminant.lucas": G*_{m+n+2} = alpha G*_{m+1} G*_{n+1} + g (alpha G*_m G*_n - G*_{m+n})
std::array<IdentityReport, 2> check_discriminant_laws(SequenceCache& fib, SequenceCache& lucas, std::uint64_t m,
                                                      std::uint64_t n);

// gcd(d^2 + 4g, G*_n) = 1 for n >= 1.
IdentityReport check_discriminant_coprime(SequenceCache& lucas, std::uint64_t n);

// For m <= n: G*_{m+n} = alpha G*_m G*_n + (-1)^(m+1) g^m G*_{n-m}.
IdentityReport check_lucas_addition(SequenceCache& lucas, std::uint64_t m, std::uint64_t n);

// Signed g-power term of G*_{mq+r} modulo G*_m, with t = ceil(q/2):
//   q odd:  (-1)^(m(t-1)+t+r) g^((t-1)m+r) G*_{m-r}
//   q even: (-1)^((m+1)t) g^(mt) G*_r
Poly mod_gm_correction(SequenceCache& lucas, std::uint64_t m, std::uint64_t q, std::uint64_t r);

// Witness T with G*_{mq+r} = G*_m T + correction; requires r < m.
IdentityReport decompose_mod_gm(SequenceCache& lucas, std::uint64_t m, std::uint64_t q, std::uint64_t r);

// (2/alpha) g^(2^(n-1) r)
Poly pow2_correction(SequenceCache& lucas, unsigned n, std::uint64_t r);

// Witness T_n with G*_{2^n r} = G*_r T_n + (2/alpha) g^(2^(n-1) r); requires n >= 2.
IdentityReport decompose_pow2(SequenceCache& lucas, unsigned n, std::uint64_t r);

// Re-multiplies a decomposition witness: divisor * witness + correction must
// reproduce the original term.
IdentityReport witness_soundness(const IdentityReport& decomposition, const Poly& divisor, const Poly& correction,
                                 const Poly& original);

// Passes when (G'_m | G'_n) matches (m | n). A unit G'_m divides every term
// and is accepted as the trivial case, as for G'_1 = 1.
IdentityReport divides_iff(SequenceCache& fib, std::uint64_t m, std::uint64_t n);

// G*_{m/q} | G*_m for an odd divisor q of m. Throws BadDivisor.
IdentityReport odd_divisor_divides(SequenceCache& lucas, std::uint64_t m, std::uint64_t q);

// gcd(G_m, G_n) for 0 < |m - n| <= 2: G*_1 when both are odd (Lucas type),
// G'_2 when both are even (Fibonacci type), else 1. Throws IndexOrder.
IdentityReport neighbor_gcd(SequenceCache& cache, std::uint64_t m, std::uint64_t n);

//   "mixed-shift.1": gcd(G'_{m+n+1}, G*_n) = gcd(G*_{m+1}, G*_n)
//   "mixed-shift.2": gcd(G'_{m-n+1}, G*_n) = gcd(G*_{m+1}, G*_n), m > n
//   "mixed-shift.3": gcd(G'_{n-m+1}, G*_n) = gcd(G*_{m-1}, G*_n), m < n
std::vector<IdentityReport> mixed_shift_gcd(SequenceCache& fib, SequenceCache& lucas, std::uint64_t m,
                                            std::uint64_t n);

// Identity group names accepted by the grid filter.
std::span<const std::string_view> identity_groups();

// The group an identity id belongs to ("addition.plus" -> "addition").
std::string_view identity_group(std::string_view identity_id);

// Parses "all" or a comma separated list of groups. Throws UnknownIdentity.
std::vector<std::string> parse_identity_filter(std::string_view text);

struct IdentityGrid {
  std::vector<std::string> groups;  // from parse_identity_filter
  std::uint64_t max_index = 10;
  std::size_t threads = 1;
};

/*
 * Runs every selected identity over the index grid for each family. Pair
 * identities run once per distinct equivalent pair; a Fibonacci type family
 * without a Lucas type partner only gets single-family identities.
 *
 * Index ranges, N = max_index:
 *   convolution, discriminant      0 <= m, n <= N
 *   addition, lucas-addition       0 <= m <= n <= N
 *   divides-iff, mixed-shift       1 <= m, n <= N
 *   neighbor-gcd                   1 <= m, n <= N, 0 < |m - n| <= 2
 *   dic2-mod                       1 <= m, q <= N, 0 <= r < m
 *   dic2-pow2                      n >= 2, 1 <= r <= N, 2^n r <= N^2
 *   odd-divisor                    1 <= m <= N, odd q | m
 *   discriminant-coprime           1 <= n <= N
 * Reports come back in a fixed order whatever the thread count.
 */
std::vector<IdentityReport> run_identity_grid(const std::vector<Family>& families, const IdentityGrid& grid);

}  // namespace gfp
