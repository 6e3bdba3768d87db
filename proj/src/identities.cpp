#include "gfp/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>

#include "gfp/errors.hpp"
#include "gfp/parallel.hpp"

namespace gfp {

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

IdentityReport make_report(std::string id, std::string family, Params params, Poly lhs, Poly rhs,
                           std::optional<Poly> witness = std::nullopt) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.family = std::move(family);
  r.params = std::move(params);
  r.pass = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.witness = std::move(witness);
  return r;
}

std::int64_t as_param(std::uint64_t v) { return static_cast<std::int64_t>(v); }

Integer sign_pow(std::uint64_t exponent) { return exponent % 2 == 0 ? Integer(1) : Integer(-1); }

void require_kind(const SequenceCache& cache, Kind kind, const char* op) {
  if (cache.family().kind != kind)
    throw WrongKind(std::string(op) + " needs a " + std::string(to_string(kind)) + " type family, got \"" +
                    cache.family().name + "\"");
}

void require_pair(const SequenceCache& fib, const SequenceCache& lucas, const char* op) {
  require_kind(fib, Kind::fibonacci, op);
  require_kind(lucas, Kind::lucas, op);
  if (!same_recurrence(fib.family(), lucas.family()))
    throw NotEquivalent(std::string(op) + ": \"" + fib.family().name + "\" and \"" + lucas.family().name +
                        "\" differ in d or g");
}

std::string pair_name(const SequenceCache& fib, const SequenceCache& lucas) {
  return fib.family().name + "/" + lucas.family().name;
}

Poly constant(long c) { return Poly{c}; }

}  // namespace

IdentityReport check_convolution(SequenceCache& fib, std::uint64_t m, std::uint64_t n) {
  require_kind(fib, Kind::fibonacci, "check_convolution");
  const Poly& g = fib.family().g;
  Poly rhs = fib.term(m + 1) * fib.term(n + 1) + g * fib.term(m) * fib.term(n);
  return make_report("convolution", fib.family().name, {{"m", as_param(m)}, {"n", as_param(n)}}, fib.term(m + n + 1),
                     std::move(rhs));
}

std::array<IdentityReport, 2> check_addition_laws(SequenceCache& fib, SequenceCache& lucas, std::uint64_t m,
                                                  std::uint64_t n) {
  require_pair(fib, lucas, "check_addition_laws");
  if (n < m) throw IndexOrder("check_addition_laws needs n >= m");
  const Integer a = alpha(lucas.family());
  const Poly shift = pow(-fib.family().g, m) * fib.term(n - m);
  const Poly& lhs = fib.term(n + m);
  Params params{{"m", as_param(m)}, {"n", as_param(n)}};
  return {make_report("addition.minus", pair_name(fib, lucas), params, lhs,
                      a * (fib.term(n) * lucas.term(m)) - shift),
          make_report("addition.plus", pair_name(fib, lucas), params, lhs,
                      a * (fib.term(m) * lucas.term(n)) + shift)};
}

IdentityReport check_addition_cross(SequenceCache& fib, SequenceCache& lucas, std::uint64_t m, std::uint64_t n) {
  require_pair(fib, lucas, "check_addition_cross");
  if (n < m) throw IndexOrder("check_addition_cross needs n >= m");
  const Integer a = alpha(lucas.family());
  Poly lhs = Integer(2) * (pow(-fib.family().g, m) * fib.term(n - m));
  Poly rhs = a * (fib.term(n) * lucas.term(m) - fib.term(m) * lucas.term(n));
  return make_report("addition-cross", pair_name(fib, lucas), {{"m", as_param(m)}, {"n", as_param(n)}},
                     std::move(lhs), std::move(rhs));
}

std::array<IdentityReport, 2> check_discriminant_laws(SequenceCache& fib, SequenceCache& lucas, std::uint64_t m,
                                                      std::uint64_t n) {
  require_pair(fib, lucas, "check_discriminant_laws");
  const Integer a = alpha(lucas.family());
  const Poly& g = lucas.family().g;
  const Poly upper = lucas.term(m + 1) * lucas.term(n + 1);
  const Poly lower = lucas.term(m) * lucas.term(n);
  Params params{{"m", as_param(m)}, {"n", as_param(n)}};
  return {make_report("discriminant.fib", pair_name(fib, lucas), params,
                      discriminant(fib.family()) * fib.term(m + n + 1), (a * a) * (upper + g * lower)),
          make_report("discriminant.lucas", pair_name(fib, lucas), params, lucas.term(m + n + 2),
                      a * upper + g * (a * lower - lucas.term(m + n)))};
}

IdentityReport check_discriminant_coprime(SequenceCache& lucas, std::uint64_t n) {
  require_kind(lucas, Kind::lucas, "check_discriminant_coprime");
  if (n == 0) throw DomainError("check_discriminant_coprime needs n >= 1");
  return make_report("discriminant-coprime", lucas.family().name, {{"n", as_param(n)}},
                     gcd(discriminant(lucas.family()), lucas.term(n)), constant(1));
}

IdentityReport check_lucas_addition(SequenceCache& lucas, std::uint64_t m, std::uint64_t n) {
  require_kind(lucas, Kind::lucas, "check_lucas_addition");
  if (m > n) throw IndexOrder("check_lucas_addition needs m <= n");
  const Integer a = alpha(lucas.family());
  Poly rhs = a * (lucas.term(m) * lucas.term(n)) + sign_pow(m + 1) * (pow(lucas.family().g, m) * lucas.term(n - m));
  return make_report("lucas-addition", lucas.family().name, {{"m", as_param(m)}, {"n", as_param(n)}},
                     lucas.term(m + n), std::move(rhs));
}

Poly mod_gm_correction(SequenceCache& lucas, std::uint64_t m, std::uint64_t q, std::uint64_t r) {
  require_kind(lucas, Kind::lucas, "decompose_mod_gm");
  if (m == 0 || q == 0) throw DomainError("decompose_mod_gm needs m, q >= 1");
  if (r >= m) throw IndexOrder("decompose_mod_gm needs r < m");
  const Poly& g = lucas.family().g;
  const std::uint64_t t = (q + 1) / 2;
  if (q % 2 == 1) return sign_pow(m * (t - 1) + t + r) * (pow(g, (t - 1) * m + r) * lucas.term(m - r));
  return sign_pow((m + 1) * t) * (pow(g, m * t) * lucas.term(r));
}

IdentityReport decompose_mod_gm(SequenceCache& lucas, std::uint64_t m, std::uint64_t q, std::uint64_t r) {
  const Poly correction = mod_gm_correction(lucas, m, q, r);
  const Poly& target = lucas.term(m * q + r);
  const Poly& divisor = lucas.term(m);
  std::optional<Poly> witness = divisor.is_zero() ? std::nullopt : exact_div(target - correction, divisor);
  Poly rhs = witness ? divisor * *witness + correction : correction;
  return make_report("dic2-mod", lucas.family().name, {{"m", as_param(m)}, {"q", as_param(q)}, {"r", as_param(r)}},
                     target, std::move(rhs), std::move(witness));
}

Poly pow2_correction(SequenceCache& lucas, unsigned n, std::uint64_t r) {
  require_kind(lucas, Kind::lucas, "decompose_pow2");
  if (n < 2) throw IndexOrder("decompose_pow2 needs n >= 2");
  if (r == 0) throw DomainError("decompose_pow2 needs r >= 1");
  const Integer two_over_alpha = Integer(2) / alpha(lucas.family());
  return two_over_alpha * pow(lucas.family().g, (std::uint64_t{1} << (n - 1)) * r);
}

IdentityReport decompose_pow2(SequenceCache& lucas, unsigned n, std::uint64_t r) {
  const Poly correction = pow2_correction(lucas, n, r);
  const Poly& target = lucas.term((std::uint64_t{1} << n) * r);
  const Poly& divisor = lucas.term(r);
  std::optional<Poly> witness = divisor.is_zero() ? std::nullopt : exact_div(target - correction, divisor);
  Poly rhs = witness ? divisor * *witness + correction : correction;
  return make_report("dic2-pow2", lucas.family().name, {{"n", n}, {"r", as_param(r)}}, target, std::move(rhs),
                     std::move(witness));
}

IdentityReport witness_soundness(const IdentityReport& decomposition, const Poly& divisor, const Poly& correction,
                                 const Poly& original) {
  Poly rebuilt = decomposition.witness ? divisor * *decomposition.witness + correction : correction;
  return make_report(decomposition.identity_id + ".witness", decomposition.family, decomposition.params,
                     std::move(rebuilt), original);
}

IdentityReport divides_iff(SequenceCache& fib, std::uint64_t m, std::uint64_t n) {
  require_kind(fib, Kind::fibonacci, "divides_iff");
  if (m == 0 || n == 0) throw DomainError("divides_iff needs m, n >= 1");
  const Poly& gm = fib.term(m);
  std::optional<Poly> quotient = gm.is_zero() ? std::nullopt : exact_div(fib.term(n), gm);
  const bool unit = gm == Poly{1} || gm == Poly{-1};
  const bool expected = n % m == 0 || unit;
  return make_report("divides-iff", fib.family().name, {{"m", as_param(m)}, {"n", as_param(n)}},
                     constant(quotient ? 1 : 0), constant(expected ? 1 : 0), std::move(quotient));
}

IdentityReport odd_divisor_divides(SequenceCache& lucas, std::uint64_t m, std::uint64_t q) {
  require_kind(lucas, Kind::lucas, "odd_divisor_divides");
  if (m == 0 || q == 0 || q % 2 == 0 || m % q != 0)
    throw BadDivisor("odd_divisor_divides needs an odd q dividing m (m=" + std::to_string(m) +
                     ", q=" + std::to_string(q) + ")");
  const Poly& target = lucas.term(m);
  const Poly& divisor = lucas.term(m / q);
  std::optional<Poly> quotient = divisor.is_zero() ? std::nullopt : exact_div(target, divisor);
  Poly rhs = quotient ? divisor * *quotient : Poly{};
  return make_report("odd-divisor", lucas.family().name, {{"m", as_param(m)}, {"q", as_param(q)}}, target,
                     std::move(rhs), std::move(quotient));
}

IdentityReport neighbor_gcd(SequenceCache& cache, std::uint64_t m, std::uint64_t n) {
  const std::uint64_t gap = m > n ? m - n : n - m;
  if (gap == 0 || gap > 2) throw IndexOrder("neighbor_gcd needs 0 < |m - n| <= 2");
  if (m == 0 || n == 0) throw DomainError("neighbor_gcd needs positive indices");
  Poly predicted = constant(1);
  if (cache.family().kind == Kind::lucas) {
    if (m % 2 == 1 && n % 2 == 1) predicted = normalized(cache.term(1));
  } else if (m % 2 == 0 && n % 2 == 0) {
    predicted = normalized(cache.term(2));
  }
  return make_report("neighbor-gcd", cache.family().name, {{"m", as_param(m)}, {"n", as_param(n)}},
                     gcd(cache.term(m), cache.term(n)), std::move(predicted));
}

std::vector<IdentityReport> mixed_shift_gcd(SequenceCache& fib, SequenceCache& lucas, std::uint64_t m,
                                            std::uint64_t n) {
  require_pair(fib, lucas, "mixed_shift_gcd");
  if (m == 0 || n == 0) throw DomainError("mixed_shift_gcd needs positive indices");
  const std::string name = pair_name(fib, lucas);
  const Params params{{"m", as_param(m)}, {"n", as_param(n)}};
  const Poly& gn = lucas.term(n);
  std::vector<IdentityReport> out;
  out.push_back(make_report("mixed-shift.1", name, params, gcd(fib.term(m + n + 1), gn), gcd(lucas.term(m + 1), gn)));
  if (m > n)
    out.push_back(
        make_report("mixed-shift.2", name, params, gcd(fib.term(m - n + 1), gn), gcd(lucas.term(m + 1), gn)));
  if (m < n)
    out.push_back(
        make_report("mixed-shift.3", name, params, gcd(fib.term(n - m + 1), gn), gcd(lucas.term(m - 1), gn)));
  return out;
}

namespace {

constexpr std::array<std::string_view, 12> kGroups = {
    "convolution", "addition",  "addition-cross", "discriminant", "discriminant-coprime", "lucas-addition",
    "dic2-mod",    "dic2-pow2", "divides-iff",    "odd-divisor",  "neighbor-gcd",         "mixed-shift"};

}  // namespace

std::span<const std::string_view> identity_groups() { return kGroups; }

std::string_view identity_group(std::string_view identity_id) {
  return identity_id.substr(0, identity_id.find('.'));
}

std::vector<std::string> parse_identity_filter(std::string_view text) {
  if (text == "all") return {kGroups.begin(), kGroups.end()};
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (std::find(kGroups.begin(), kGroups.end(), item) == kGroups.end())
      throw UnknownIdentity("unknown identity \"" + std::string(item) + "\"");
    if (std::find(out.begin(), out.end(), item) == out.end()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  // Catalog order keeps the report stream independent of the filter order.
  std::vector<std::string> ordered;
  for (auto g : kGroups)
    if (std::find(out.begin(), out.end(), g) != out.end()) ordered.emplace_back(g);
  return ordered;
}

namespace {

using Task = std::function<std::vector<IdentityReport>()>;

template <typename... R>
std::vector<IdentityReport> collect(R&&... reports) {
  std::vector<IdentityReport> out;
  (out.push_back(std::forward<R>(reports)), ...);
  return out;
}

void add_single_tasks(std::vector<Task>& tasks, SequenceCache& c, std::string_view group, std::uint64_t N) {
  const Kind kind = c.family().kind;
  SequenceCache* cache = &c;
  if (group == "convolution" && kind == Kind::fibonacci) {
    for (std::uint64_t m = 0; m <= N; ++m)
      for (std::uint64_t n = 0; n <= N; ++n) tasks.push_back([=] { return collect(check_convolution(*cache, m, n)); });
  } else if (group == "discriminant-coprime" && kind == Kind::lucas) {
    for (std::uint64_t n = 1; n <= N; ++n)
      tasks.push_back([=] { return collect(check_discriminant_coprime(*cache, n)); });
  } else if (group == "lucas-addition" && kind == Kind::lucas) {
    for (std::uint64_t n = 0; n <= N; ++n)
      for (std::uint64_t m = 0; m <= n; ++m)
        tasks.push_back([=] { return collect(check_lucas_addition(*cache, m, n)); });
  } else if (group == "dic2-mod" && kind == Kind::lucas) {
    for (std::uint64_t m = 1; m <= N; ++m)
      for (std::uint64_t q = 1; q <= N; ++q)
        for (std::uint64_t r = 0; r < m; ++r)
          tasks.push_back([=] {
            IdentityReport rep = decompose_mod_gm(*cache, m, q, r);
            IdentityReport sound =
                witness_soundness(rep, cache->term(m), mod_gm_correction(*cache, m, q, r), cache->term(m * q + r));
            return collect(std::move(rep), std::move(sound));
          });
  } else if (group == "dic2-pow2" && kind == Kind::lucas) {
    for (unsigned n = 2; (std::uint64_t{1} << n) <= N * N; ++n)
      for (std::uint64_t r = 1; r <= N && (std::uint64_t{1} << n) * r <= N * N; ++r)
        tasks.push_back([=] {
          IdentityReport rep = decompose_pow2(*cache, n, r);
          IdentityReport sound = witness_soundness(rep, cache->term(r), pow2_correction(*cache, n, r),
                                                   cache->term((std::uint64_t{1} << n) * r));
          return collect(std::move(rep), std::move(sound));
        });
  } else if (group == "divides-iff" && kind == Kind::fibonacci) {
    for (std::uint64_t m = 1; m <= N; ++m)
      for (std::uint64_t n = 1; n <= N; ++n) tasks.push_back([=] { return collect(divides_iff(*cache, m, n)); });
  } else if (group == "odd-divisor" && kind == Kind::lucas) {
    for (std::uint64_t m = 1; m <= N; ++m)
      for (std::uint64_t q = 1; q <= m; q += 2)
        if (m % q == 0) tasks.push_back([=] { return collect(odd_divisor_divides(*cache, m, q)); });
  } else if (group == "neighbor-gcd") {
    for (std::uint64_t m = 1; m <= N; ++m)
      for (std::uint64_t n = 1; n <= N; ++n) {
        const std::uint64_t gap = m > n ? m - n : n - m;
        if (gap >= 1 && gap <= 2) tasks.push_back([=] { return collect(neighbor_gcd(*cache, m, n)); });
      }
  }
}

void add_pair_tasks(std::vector<Task>& tasks, SequenceCache& f, SequenceCache& l, std::string_view group,
                    std::uint64_t N) {
  SequenceCache* fib = &f;
  SequenceCache* lucas = &l;
  if (group == "addition") {
    for (std::uint64_t n = 0; n <= N; ++n)
      for (std::uint64_t m = 0; m <= n; ++m)
        tasks.push_back([=] {
          auto [minus, plus] = check_addition_laws(*fib, *lucas, m, n);
          return collect(std::move(minus), std::move(plus));
        });
  } else if (group == "addition-cross") {
    for (std::uint64_t n = 0; n <= N; ++n)
      for (std::uint64_t m = 0; m <= n; ++m)
        tasks.push_back([=] { return collect(check_addition_cross(*fib, *lucas, m, n)); });
  } else if (group == "discriminant") {
    for (std::uint64_t m = 0; m <= N; ++m)
      for (std::uint64_t n = 0; n <= N; ++n)
        tasks.push_back([=] {
          auto [a, b] = check_discriminant_laws(*fib, *lucas, m, n);
          return collect(std::move(a), std::move(b));
        });
  } else if (group == "mixed-shift") {
    for (std::uint64_t m = 1; m <= N; ++m)
      for (std::uint64_t n = 1; n <= N; ++n) tasks.push_back([=] { return mixed_shift_gcd(*fib, *lucas, m, n); });
  }
}

bool is_pair_group(std::string_view group) {
  return group == "addition" || group == "addition-cross" || group == "discriminant" || group == "mixed-shift";
}

std::string pair_key(const Family& lucas) {
  return to_string(lucas.d) + "|" + to_string(lucas.g) + "|" + to_string(lucas.p0);
}

}  // namespace

std::vector<IdentityReport> run_identity_grid(const std::vector<Family>& families, const IdentityGrid& grid) {
  std::vector<std::unique_ptr<SequenceCache>> caches;
  std::vector<std::pair<SequenceCache*, SequenceCache*>> pairs;
  std::map<std::string, bool> seen_pairs;

  for (const auto& f : families) require_valid(f);
  for (const auto& f : families) caches.push_back(std::make_unique<SequenceCache>(f));

  const bool any_pair_group = std::any_of(grid.groups.begin(), grid.groups.end(), [](const std::string& g) {
    return is_pair_group(g);
  });
  if (any_pair_group) {
    std::vector<std::unique_ptr<SequenceCache>> partners;
    for (std::size_t i = 0; i < families.size(); ++i) {
      std::optional<Family> partner;
      try {
        partner = equivalent_family(families[i]);
      } catch (const NoValidEquivalent&) {
        continue;
      }
      const Family& lucas = families[i].kind == Kind::lucas ? families[i] : *partner;
      if (seen_pairs[pair_key(lucas)]) continue;
      seen_pairs[pair_key(lucas)] = true;
      partners.push_back(std::make_unique<SequenceCache>(*partner));
      SequenceCache* own = caches[i].get();
      SequenceCache* other = partners.back().get();
      if (families[i].kind == Kind::fibonacci)
        pairs.emplace_back(own, other);
      else
        pairs.emplace_back(other, own);
    }
    for (auto& p : partners) caches.push_back(std::move(p));
  }

  std::vector<Task> tasks;
  for (std::size_t i = 0; i < families.size(); ++i)
    for (const auto& group : grid.groups)
      if (!is_pair_group(group)) add_single_tasks(tasks, *caches[i], group, grid.max_index);
  for (auto [fib, lucas] : pairs)
    for (const auto& group : grid.groups)
      if (is_pair_group(group)) add_pair_tasks(tasks, *fib, *lucas, group, grid.max_index);

  std::vector<std::vector<IdentityReport>> results(tasks.size());
  parallel_for(tasks.size(), grid.threads, [&](std::size_t i) { results[i] = tasks[i](); });

  std::vector<IdentityReport> out;
  for (auto& chunk : results)
    for (auto& r : chunk) out.push_back(std::move(r));
  return out;
}

}  // namespace gfp
