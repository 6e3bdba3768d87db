#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfp/poly.hpp"

namespace gfp {

// Which closed shape the sequence follows: Fibonacci type has p0 = 0, p1 = 1;
// Lucas type has 2 p1 = p0 d with |p0| in {1, 2}.
enum class Kind { fibonacci, lucas };

std::string_view to_string(Kind kind);
Kind parse_kind(std::string_view text);

// A generalized Fibonacci polynomial family:
//   G_0 = p0, G_1 = p1, G_n = d G_{n-1} + g G_{n-2}.
struct Family {
  std::string name;
  Kind kind = Kind::fibonacci;
  Poly d;
  Poly g;
  Poly p0;
  Poly p1;
};

bool same_recurrence(const Family& a, const Family& b);

// Every side condition the family breaks; empty means valid.
std::vector<std::string> validate_family(const Family& f);

void require_valid(const Family& f);

// Names accepted by builtin_family, in registry order.
std::span<const std::string_view> builtin_names();

// Throws UnknownFamily.
Family builtin_family(std::string_view name);

std::vector<Family> builtin_families();

// The six (Fibonacci type, Lucas type) pairs of the classical tables, in
// table order. The d = 2x + 1 pair is not part of this list.
std::vector<std::pair<Family, Family>> classical_pairs();

// Same d and g, the other kind. Throws NoValidEquivalent.
Family equivalent_family(const Family& f);

// d^2 + 4g, the square of the difference of the characteristic roots.
Poly discriminant(const Family& f);

// 2 / p0 for a Lucas type family. Throws WrongKind.
long alpha(const Family& f);

// d prev + g prev2 in one pass.
Poly recurrence_step(const Family& f, const Poly& prev, const Poly& prev2);

// G_n keeping only two terms alive; for one-off large indices.
Poly compute_term(const Family& f, std::size_t n);

/*
 * Memoized terms of one family. The store only ever grows, and every access
 * goes through an internal mutex, so a cache can be shared by threads
 * sweeping a grid. Returned references stay valid for the cache lifetime.
 */
class SequenceCache {
 public:
  explicit SequenceCache(Family family);

  const Family& family() const { return family_; }

  const Poly& term(std::size_t n);

  std::size_t size() const;

  // Re-checks G_n = d G_{n-1} + g G_{n-2} over every cached triple.
  bool recurrence_holds() const;

 private:
  Family family_;
  std::deque<Poly> terms_;
  std::unique_ptr<std::mutex> mutex_;
};

}  // namespace gfp
