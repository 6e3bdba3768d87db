#include "gfp/family.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "gfp/errors.hpp"

namespace gfp {

std::string_view to_string(Kind kind) { return kind == Kind::fibonacci ? "fibonacci" : "lucas"; }

Kind parse_kind(std::string_view text) {
  if (text == "fibonacci") return Kind::fibonacci;
  if (text == "lucas") return Kind::lucas;
  throw ParseError("unknown kind \"" + std::string(text) + "\" (expected fibonacci or lucas)");
}

bool same_recurrence(const Family& a, const Family& b) { return a.d == b.d && a.g == b.g; }

namespace {

bool is_unit_gcd(const Poly& a, const Poly& b) { return gcd(a, b) == Poly{1}; }

}  // namespace

std::vector<std::string> validate_family(const Family& f) {
  std::vector<std::string> out;
  if (f.d.is_zero()) out.emplace_back("d must be nonzero");
  if (f.g.is_zero()) out.emplace_back("g must be nonzero");
  if (!f.d.is_zero() && !f.g.is_zero() && !is_unit_gcd(f.d, f.g)) out.emplace_back("gcd(d,g) != 1");
  if (!f.p0.is_constant()) out.emplace_back("p0 must be a constant");

  if (f.kind == Kind::fibonacci) {
    if (!f.p0.is_zero()) out.emplace_back("p0 must be 0");
    if (f.p1 != Poly{1}) out.emplace_back("p1 must be 1");
    return out;
  }

  if (f.p0.is_zero()) {
    out.emplace_back("p0 must be nonzero");
    return out;
  }
  const Integer p0 = f.p0.coeff(0);
  const bool p0_ok = abs(p0) == 1 || abs(p0) == 2;
  if (!p0_ok) out.emplace_back("|p0| must be 1 or 2");
  if (Integer(2) * f.p1 != f.p0 * f.d) out.emplace_back("2*p1 must equal p0*d");
  if (!is_unit_gcd(f.p0, f.p1)) out.emplace_back("gcd(p0,p1) != 1");
  if (!is_unit_gcd(f.p0, f.d)) out.emplace_back("gcd(p0,d) != 1");
  if (!f.g.is_zero() && !is_unit_gcd(f.g, f.p1)) out.emplace_back("gcd(g,p1) != 1");
  if (p0_ok && abs(p0) == 1 && !is_unit_gcd(Poly{2}, f.p1)) out.emplace_back("gcd(alpha,p1) != 1");
  return out;
}

void require_valid(const Family& f) {
  auto violations = validate_family(f);
  if (violations.empty()) return;
  std::string msg = "family \"" + f.name + "\" is invalid:";
  for (const auto& v : violations) msg += " " + v + ";";
  throw InvalidFamily(msg);
}

namespace {

constexpr std::array<std::string_view, 14> kBuiltinNames = {
    "fibonacci",  "lucas",          "pell",           "pell-lucas-prime", "fermat",        "fermat-lucas",
    "chebyshev2", "chebyshev1",     "jacobsthal",     "jacobsthal-lucas", "morgan-voyce-b", "morgan-voyce-c",
    "paper-2x1-fib", "paper-2x1-lucas"};

Family make(std::string_view name, Kind kind, Poly d, Poly g, Poly p0, Poly p1) {
  return Family{std::string(name), kind, std::move(d), std::move(g), std::move(p0), std::move(p1)};
}

}  // namespace

std::span<const std::string_view> builtin_names() { return kBuiltinNames; }

Family builtin_family(std::string_view name) {
  using K = Kind;
  const Poly x = Poly::x();
  if (name == "fibonacci") return make(name, K::fibonacci, x, Poly{1}, Poly{}, Poly{1});
  if (name == "lucas") return make(name, K::lucas, x, Poly{1}, Poly{2}, x);
  if (name == "pell") return make(name, K::fibonacci, Poly{0, 2}, Poly{1}, Poly{}, Poly{1});
  if (name == "pell-lucas-prime") return make(name, K::lucas, Poly{0, 2}, Poly{1}, Poly{1}, x);
  if (name == "fermat") return make(name, K::fibonacci, Poly{0, 3}, Poly{-2}, Poly{}, Poly{1});
  if (name == "fermat-lucas") return make(name, K::lucas, Poly{0, 3}, Poly{-2}, Poly{2}, Poly{0, 3});
  if (name == "chebyshev2") return make(name, K::fibonacci, Poly{0, 2}, Poly{-1}, Poly{}, Poly{1});
  if (name == "chebyshev1") return make(name, K::lucas, Poly{0, 2}, Poly{-1}, Poly{1}, x);
  if (name == "jacobsthal") return make(name, K::fibonacci, Poly{1}, Poly{0, 2}, Poly{}, Poly{1});
  if (name == "jacobsthal-lucas") return make(name, K::lucas, Poly{1}, Poly{0, 2}, Poly{2}, Poly{1});
  if (name == "morgan-voyce-b") return make(name, K::fibonacci, Poly{2, 1}, Poly{-1}, Poly{}, Poly{1});
  if (name == "morgan-voyce-c") return make(name, K::lucas, Poly{2, 1}, Poly{-1}, Poly{2}, Poly{2, 1});
  if (name == "paper-2x1-fib") return make(name, K::fibonacci, Poly{1, 2}, Poly{1}, Poly{}, Poly{1});
  if (name == "paper-2x1-lucas") return make(name, K::lucas, Poly{1, 2}, Poly{1}, Poly{2}, Poly{1, 2});
  throw UnknownFamily("unknown family \"" + std::string(name) + "\"");
}

std::vector<Family> builtin_families() {
  std::vector<Family> out;
  for (auto name : kBuiltinNames) out.push_back(builtin_family(name));
  return out;
}

std::vector<std::pair<Family, Family>> classical_pairs() {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kPairs = {{
      {"fibonacci", "lucas"},
      {"pell", "pell-lucas-prime"},
      {"fermat", "fermat-lucas"},
      {"chebyshev2", "chebyshev1"},
      {"jacobsthal", "jacobsthal-lucas"},
      {"morgan-voyce-b", "morgan-voyce-c"},
  }};
  std::vector<std::pair<Family, Family>> out;
  for (auto [fib, luc] : kPairs) out.emplace_back(builtin_family(fib), builtin_family(luc));
  return out;
}

namespace {

// Name the partner after a builtin with identical data when one exists.
std::string partner_name(const Family& source, const Family& partner) {
  for (auto name : kBuiltinNames) {
    Family b = builtin_family(name);
    if (b.kind == partner.kind && same_recurrence(b, partner) && b.p0 == partner.p0 && b.p1 == partner.p1)
      return b.name;
  }
  return source.name + (partner.kind == Kind::lucas ? "-lucas-equivalent" : "-fibonacci-equivalent");
}

}  // namespace

Family equivalent_family(const Family& f) {
  Family out{"", f.kind == Kind::fibonacci ? Kind::lucas : Kind::fibonacci, f.d, f.g, {}, {}};
  if (out.kind == Kind::fibonacci) {
    out.p0 = Poly{};
    out.p1 = Poly{1};
  } else {
    out.p0 = Poly{2};
    out.p1 = f.d;
    if (!validate_family(out).empty()) {
      auto half = exact_div(f.d, Poly{2});
      if (!half) throw NoValidEquivalent("no Lucas type partner for \"" + f.name + "\": d/2 is not in Z[x]");
      out.p0 = Poly{1};
      out.p1 = *half;
      if (!validate_family(out).empty())
        throw NoValidEquivalent("no Lucas type partner for \"" + f.name + "\" with p0 in {1, 2}");
    }
  }
  out.name = partner_name(f, out);
  return out;
}

Poly discriminant(const Family& f) { return f.d * f.d + Integer(4) * f.g; }

long alpha(const Family& f) {
  if (f.kind != Kind::lucas) throw WrongKind("alpha is defined for Lucas type families only (\"" + f.name + "\")");
  if (f.p0.is_zero()) throw InvalidFamily("Lucas type family \"" + f.name + "\" has p0 = 0");
  const long p0 = f.p0.coeff(0).get_si();
  if (2 % p0 != 0) throw InvalidFamily("2/p0 is not an integer for \"" + f.name + "\"");
  return 2 / p0;
}

SequenceCache::SequenceCache(Family family)
    : family_(std::move(family)), mutex_(std::make_unique<std::mutex>()) {
  terms_.push_back(family_.p0);
  terms_.push_back(family_.p1);
}

Poly recurrence_step(const Family& f, const Poly& prev, const Poly& prev2) {
  auto accumulate = [](std::vector<Integer>& out, const Poly& a, const Poly& b) {
    auto ac = a.coeffs();
    auto bc = b.coeffs();
    for (std::size_t i = 0; i < ac.size(); ++i) {
      if (ac[i] == 0) continue;
      for (std::size_t j = 0; j < bc.size(); ++j)
        if (bc[j] != 0) mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
    }
  };
  std::size_t size = 0;
  if (!prev.is_zero()) size = f.d.coeffs().size() + prev.coeffs().size() - 1;
  if (!prev2.is_zero()) size = std::max(size, f.g.coeffs().size() + prev2.coeffs().size() - 1);
  std::vector<Integer> out(size);
  accumulate(out, f.d, prev);
  accumulate(out, f.g, prev2);
  return Poly(std::move(out));
}

Poly compute_term(const Family& f, std::size_t n) {
  if (n == 0) return f.p0;
  Poly prev2 = f.p0;
  Poly prev = f.p1;
  for (std::size_t k = 2; k <= n; ++k) {
    Poly next = recurrence_step(f, prev, prev2);
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

const Poly& SequenceCache::term(std::size_t n) {
  std::lock_guard lock(*mutex_);
  while (terms_.size() <= n) {
    const std::size_t k = terms_.size();
    terms_.push_back(recurrence_step(family_, terms_[k - 1], terms_[k - 2]));
  }
  return terms_[n];
}

std::size_t SequenceCache::size() const {
  std::lock_guard lock(*mutex_);
  return terms_.size();
}

bool SequenceCache::recurrence_holds() const {
  std::lock_guard lock(*mutex_);
  if (terms_[0] != family_.p0 || terms_[1] != family_.p1) return false;
  for (std::size_t k = 2; k < terms_.size(); ++k)
    if (terms_[k] != family_.d * terms_[k - 1] + family_.g * terms_[k - 2]) return false;
  return true;
}

}  // namespace gfp
