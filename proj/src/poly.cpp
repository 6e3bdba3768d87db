#include "gfp/poly.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "gfp/errors.hpp"

namespace gfp {

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::constant(const Integer& c) { return Poly(std::vector<Integer>{c}); }

Poly Poly::x() { return Poly{0, 1}; }

Poly Poly::monomial(const Integer& c, std::size_t exponent) {
  if (c == 0) return {};
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return Poly(std::move(v));
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& Poly::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

namespace {

std::vector<Integer> add_coeffs(std::span<const Integer> a, std::span<const Integer> b, bool subtract) {
  std::vector<Integer> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (subtract)
      out[i] -= b[i];
    else
      out[i] += b[i];
  }
  return out;
}

std::size_t deg(const std::vector<Integer>& v) { return v.size() - 1; }

void trim(std::vector<Integer>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) { return Poly(add_coeffs(a.coeffs(), b.coeffs(), false)); }

Poly operator-(const Poly& a, const Poly& b) { return Poly(add_coeffs(a.coeffs(), b.coeffs(), true)); }

Poly operator-(const Poly& a) {
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c = -c;
  return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  std::vector<Integer> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
  }
  return Poly(std::move(out));
}

Poly operator*(const Integer& c, const Poly& p) {
  std::vector<Integer> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : out) v *= c;
  return Poly(std::move(out));
}

Poly poly_arith(const Poly& lhs, const Poly& rhs, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return lhs + rhs;
    case ArithOp::sub:
      return lhs - rhs;
    case ArithOp::mul:
      return lhs * rhs;
  }
  return {};
}

Poly pow(const Poly& base, unsigned long exponent) {
  Poly result{1};
  Poly square = base;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

std::optional<Poly> exact_div(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw ZeroDivisor("exact_div by the zero polynomial");
  if (num.is_zero()) return Poly{};
  const std::size_t dn = *num.degree();
  const std::size_t dd = *den.degree();
  if (dn < dd) return std::nullopt;

  auto dc = den.coeffs();
  const Integer& lead = den.leading();
  std::vector<Integer> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<Integer> quot(dn - dd + 1);
  for (std::size_t k = dn - dd + 1; k-- > 0;) {
    Integer& top = rem[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dd; ++j) mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), dc[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (rem[i] != 0) return std::nullopt;
  return Poly(std::move(quot));
}

bool divides(const Poly& den, const Poly& num) {
  if (den.is_zero()) return num.is_zero();
  return exact_div(num, den).has_value();
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroDivisor("pseudo_remainder by the zero polynomial");
  if (a.is_zero() || *a.degree() < *b.degree()) return a;
  const std::size_t db = *b.degree();
  auto bc = b.coeffs();
  const Integer& lb = b.leading();

  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  unsigned long pending = *a.degree() - db + 1;
  while (!r.empty() && deg(r) >= db) {
    const Integer lr = r.back();
    const std::size_t shift = deg(r) - db;
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), bc[j].get_mpz_t());
    trim(r);
    --pending;
  }
  if (pending > 0 && !r.empty()) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), pending);
    for (auto& c : r) c *= scale;
  }
  return Poly(std::move(r));
}

Integer content(const Poly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("primitive part of the zero polynomial");
  Integer c = content(p);
  if (p.leading() < 0) c = -c;
  std::vector<Integer> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return Poly(std::move(out));
}

Poly normalized(const Poly& p) {
  if (p.is_zero() || p.leading() > 0) return p;
  return -p;
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero()) return normalized(q);
  if (q.is_zero()) return normalized(p);

  Integer c;
  const Integer cp = content(p);
  const Integer cq = content(q);
  mpz_gcd(c.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());

  Poly a = primitive_part(p);
  Poly b = primitive_part(q);
  if (*a.degree() < *b.degree()) std::swap(a, b);
  while (true) {
    if (b.is_constant()) return Poly::constant(c);
    Poly r = pseudo_remainder(a, b);
    if (r.is_zero()) return c * b;
    a = std::move(b);
    b = primitive_part(r);
  }
}

Integer eval_at(const Poly& p, const Integer& x0) {
  Integer acc = 0;
  auto cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    acc *= x0;
    acc += cs[i];
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace gfp
