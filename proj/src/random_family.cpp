#include "gfp/random_family.hpp"

#include <array>
#include <random>
#include <string>

namespace gfp {

namespace {

Poly random_poly(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = coeff(rng);
  while (c.back() == 0) c.back() = coeff(rng);
  return Poly(std::move(c));
}

}  // namespace

std::vector<std::pair<Family, Family>> random_pairs(std::size_t count, std::uint64_t seed) {
  constexpr std::array<long, 4> kInitial = {1, -1, 2, -2};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, kInitial.size() - 1);

  std::vector<std::pair<Family, Family>> out;
  while (out.size() < count) {
    const long p0 = kInitial[pick(rng)];
    const int dd = degree(rng);
    const int dg = degree(rng);
    if (dd == 0 && dg == 0) continue;
    // With |p0| = 1 the Lucas side needs p1 = p0 d / 2 in Z[x].
    Poly d = p0 == 1 || p0 == -1 ? Integer(2) * random_poly(rng, dd, 2) : random_poly(rng, dd, 5);
    Poly g = random_poly(rng, dg, 5);

    const std::string name = "random-" + std::to_string(out.size());
    Family fib{name, Kind::fibonacci, d, g, Poly{0}, Poly{1}};
    auto p1 = exact_div(Integer(p0) * d, Poly{2});
    if (!p1) continue;
    Family lucas{name + "-lucas", Kind::lucas, d, g, Poly{p0}, *p1};
    if (!validate_family(fib).empty() || !validate_family(lucas).empty()) continue;
    out.emplace_back(std::move(fib), std::move(lucas));
  }
  return out;
}

}  // namespace gfp
