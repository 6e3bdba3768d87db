#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gfp {

using Integer = mpz_class;

/*
 * Dense univariate polynomial over Z.
 *
 * coeffs()[i] is the coefficient of x^i. The representation is always
 * canonical: the highest stored coefficient is nonzero, and the zero
 * polynomial stores nothing. Values are immutable once built, so a Poly may
 * be shared freely between threads.
 */
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Integer> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Integer& c);
  static Poly x();
  static Poly monomial(const Integer& c, std::size_t exponent);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  // std::nullopt stands for deg(0) = -infinity.
  std::optional<std::size_t> degree() const;

  // Coefficient of x^i; zero past the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;
  std::span<const Integer> coeffs() const { return coeffs_; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Integer& c, const Poly& p);

enum class ArithOp { add, sub, mul };

Poly poly_arith(const Poly& lhs, const Poly& rhs, ArithOp op);

// pow(p, 0) == 1 for every p, including 0.
Poly pow(const Poly& base, unsigned long exponent);

// Exact quotient in Z[x]: q with num == den * q, or nullopt when den does not
// divide num. Throws ZeroDivisor when den == 0.
std::optional<Poly> exact_div(const Poly& num, const Poly& den);

bool divides(const Poly& den, const Poly& num);

// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b.
Poly pseudo_remainder(const Poly& a, const Poly& b);

// gcd of |coefficients|; content(0) == 0.
Integer content(const Poly& p);

// p / content(p) with positive leading coefficient. Throws ZeroPolynomial.
Poly primitive_part(const Poly& p);

// p or -p, whichever has a positive leading coefficient.
Poly normalized(const Poly& p);

/*
 * Greatest common divisor in Z[x], integer content included:
 *
 *   gcd(p, q) = gcd(content(p), content(q)) * prs_gcd(pp(p), pp(q))
 *
 * with a positive leading coefficient. The primitive part is found with a
 * primitive polynomial remainder sequence. gcd(p, 0) = normalized(p) and
 * gcd(0, 0) = 0.
 */
Poly gcd(const Poly& p, const Poly& q);

Integer eval_at(const Poly& p, const Integer& x0);

// "8x^3 + 12x^2 + 12x + 4": descending degree, base-10 coefficients.
std::string to_string(const Poly& p);
Poly parse_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace gfp
