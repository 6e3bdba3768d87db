#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "gfp/poly.hpp"

namespace gfp::testing {

// Random polynomial with degree at most max_degree and coefficients in
// [-bound, bound]; may be zero.
inline Poly random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coeff(rng);
  return Poly(std::move(c));
}

inline Poly random_nonzero(std::mt19937_64& rng, int max_degree, long bound) {
  for (;;) {
    Poly p = random_poly(rng, max_degree, bound);
    if (!p.is_zero()) return p;
  }
}

// Schoolbook product on machine integers, kept separate from the GMP kernel.
inline std::vector<std::int64_t> schoolbook_mul(const std::vector<std::int64_t>& a,
                                                const std::vector<std::int64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline std::vector<std::int64_t> to_int64(const Poly& p) {
  std::vector<std::int64_t> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_si());
  return out;
}

// Monic gcd over Q by plain Euclid. Used to check the Z[x] gcd up to content.
inline std::vector<mpq_class> rational_gcd(const Poly& p, const Poly& q) {
  auto lift = [](const Poly& x) {
    std::vector<mpq_class> out;
    for (const auto& c : x.coeffs()) out.emplace_back(c);
    return out;
  };
  auto a = lift(p);
  auto b = lift(q);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      mpq_class f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

inline std::vector<mpq_class> monic(const Poly& p) {
  std::vector<mpq_class> out;
  if (p.is_zero()) return out;
  for (const auto& c : p.coeffs()) out.emplace_back(mpq_class(c, p.leading()));
  for (auto& c : out) c.canonicalize();
  return out;
}

}  // namespace gfp::testing

namespace gfp::testing {

// Four polynomials built from shared random factors, so the pairwise gcds
// in the product laws are usually nontrivial.
struct Quad {
  Poly p, q, r, s;
};

inline Quad random_quad(std::mt19937_64& rng) {
  auto factor = [&] { return random_nonzero(rng, 2, 4); };
  const Poly pr = factor(), ps = factor(), qr = factor(), qs = factor();
  return {pr * ps * factor(), qr * qs * factor(), pr * qr * factor(), ps * qs * factor()};
}

inline bool is_one(const Poly& p) { return p == Poly{1}; }

}  // namespace gfp::testing
