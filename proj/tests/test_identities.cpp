#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gfp/errors.hpp"
#include "gfp/identities.hpp"
#include "gfp/random_family.hpp"

using namespace gfp;

namespace {

Poly P(std::string_view text) { return parse_poly(text); }

SequenceCache cache(std::string_view name) { return SequenceCache(builtin_family(name)); }

}  // namespace

TEST(IdentityExamples, Convolution) {
  auto fib = cache("fibonacci");
  IdentityReport a = check_convolution(fib, 1, 1);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.lhs, P("x^2 + 1"));
  EXPECT_TRUE(check_convolution(fib, 2, 3).pass);
  IdentityReport z = check_convolution(fib, 0, 0);
  EXPECT_TRUE(z.pass);
  EXPECT_EQ(z.lhs, P("1"));
  EXPECT_EQ(z.identity_id, "convolution");
  auto lucas = cache("lucas");
  EXPECT_THROW(check_convolution(lucas, 1, 1), WrongKind);
}

TEST(IdentityExamples, AdditionLaws) {
  auto fib = cache("fibonacci");
  auto lucas = cache("lucas");
  auto [minus, plus] = check_addition_laws(fib, lucas, 2, 3);
  EXPECT_TRUE(minus.pass);
  EXPECT_TRUE(plus.pass);
  EXPECT_EQ(minus.lhs, P("x^4 + 3x^2 + 1"));
  EXPECT_EQ(minus.identity_id, "addition.minus");
  EXPECT_EQ(plus.identity_id, "addition.plus");
  auto [m2, p2] = check_addition_laws(fib, lucas, 4, 4);
  EXPECT_TRUE(m2.pass && p2.pass);
  auto pell = cache("pell");
  auto plp = cache("pell-lucas-prime");
  auto [m3, p3] = check_addition_laws(pell, plp, 1, 4);
  EXPECT_TRUE(m3.pass && p3.pass);
  EXPECT_THROW(check_addition_laws(fib, lucas, 3, 2), IndexOrder);
  auto cheb = cache("chebyshev1");
  EXPECT_THROW(check_addition_laws(fib, cheb, 1, 2), NotEquivalent);
}

TEST(IdentityExamples, AdditionCross) {
  auto fib = cache("fibonacci");
  auto lucas = cache("lucas");
  IdentityReport r = check_addition_cross(fib, lucas, 2, 3);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.lhs, P("2"));
  auto pell = cache("pell");
  auto plp = cache("pell-lucas-prime");
  for (std::uint64_t n = 0; n <= 8; ++n)
    for (std::uint64_t m = 0; m <= n; ++m) EXPECT_TRUE(check_addition_cross(pell, plp, m, n).pass);
}

TEST(IdentityExamples, DiscriminantLaws) {
  auto fib = cache("fibonacci");
  auto lucas = cache("lucas");
  auto [a, b] = check_discriminant_laws(fib, lucas, 0, 0);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.lhs, P("x^2 + 4"));
  EXPECT_TRUE(b.pass);
  EXPECT_EQ(b.lhs, P("x^2 + 2"));
  auto fermat = cache("fermat");
  auto fl = cache("fermat-lucas");
  auto [c, d] = check_discriminant_laws(fermat, fl, 1, 2);
  EXPECT_TRUE(c.pass && d.pass);
}

TEST(IdentityExamples, DiscriminantCoprime) {
  auto lucas = cache("lucas");
  for (std::uint64_t n = 1; n <= 10; ++n) EXPECT_TRUE(check_discriminant_coprime(lucas, n).pass);
  EXPECT_THROW(check_discriminant_coprime(lucas, 0), DomainError);
}

TEST(IdentityExamples, LucasAddition) {
  auto lucas = cache("lucas");
  IdentityReport a = check_lucas_addition(lucas, 1, 1);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.lhs, P("x^2 + 2"));
  EXPECT_TRUE(check_lucas_addition(lucas, 2, 5).pass);
  auto cheb = cache("chebyshev1");
  EXPECT_TRUE(check_lucas_addition(cheb, 1, 3).pass);
  EXPECT_THROW(check_lucas_addition(lucas, 3, 2), IndexOrder);
}

TEST(IdentityExamples, ModGmDecomposition) {
  auto lucas = cache("lucas");
  EXPECT_EQ(mod_gm_correction(lucas, 2, 1, 1), P("x"));
  IdentityReport a = decompose_mod_gm(lucas, 2, 1, 1);
  EXPECT_TRUE(a.pass);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(*a.witness, P("x"));
  IdentityReport b = decompose_mod_gm(lucas, 3, 2, 1);
  EXPECT_TRUE(b.pass);
  EXPECT_TRUE(b.witness.has_value());
  for (const auto& f : builtin_families()) {
    if (f.kind != Kind::lucas) continue;
    SequenceCache c(f);
    EXPECT_TRUE(decompose_mod_gm(c, 2, 1, 0).pass) << f.name;
  }
  EXPECT_THROW(decompose_mod_gm(lucas, 2, 1, 2), IndexOrder);
}

TEST(IdentityExamples, PowerOfTwoDecomposition) {
  auto lucas = cache("lucas");
  IdentityReport a = decompose_pow2(lucas, 2, 1);
  EXPECT_TRUE(a.pass);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_EQ(*a.witness, P("x^3 + 4x"));
  auto cheb = cache("chebyshev1");
  EXPECT_EQ(pow2_correction(cheb, 2, 1), P("1"));
  EXPECT_TRUE(decompose_pow2(cheb, 2, 1).pass);
  EXPECT_TRUE(decompose_pow2(lucas, 3, 1).pass);
  EXPECT_THROW(decompose_pow2(lucas, 1, 1), IndexOrder);
}

TEST(IdentityExamples, DividesIff) {
  auto fib = cache("fibonacci");
  IdentityReport a = divides_iff(fib, 3, 9);
  EXPECT_TRUE(a.pass);
  EXPECT_TRUE(a.witness.has_value());
  IdentityReport b = divides_iff(fib, 4, 6);
  EXPECT_TRUE(b.pass);
  EXPECT_FALSE(b.witness.has_value());
  for (std::uint64_t n = 1; n <= 10; ++n) EXPECT_TRUE(divides_iff(fib, 1, n).pass);
  // J_2 = 1 divides every term.
  auto jac = cache("jacobsthal");
  EXPECT_TRUE(divides_iff(jac, 2, 3).pass);
}

TEST(IdentityExamples, OddDivisor) {
  auto lucas = cache("lucas");
  IdentityReport a = odd_divisor_divides(lucas, 6, 3);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(lucas.term(6), P("x^6 + 6x^4 + 9x^2 + 2"));
  EXPECT_TRUE(odd_divisor_divides(lucas, 9, 3).pass);
  EXPECT_TRUE(odd_divisor_divides(lucas, 8, 1).pass);
  EXPECT_THROW(odd_divisor_divides(lucas, 6, 2), BadDivisor);
  EXPECT_THROW(odd_divisor_divides(lucas, 7, 3), BadDivisor);
}

TEST(IdentityExamples, NeighborGcd) {
  auto lucas = cache("lucas");
  IdentityReport a = neighbor_gcd(lucas, 3, 5);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.lhs, P("x"));
  EXPECT_TRUE(neighbor_gcd(lucas, 2, 4).pass);
  auto fib = cache("fibonacci");
  IdentityReport b = neighbor_gcd(fib, 4, 6);
  EXPECT_TRUE(b.pass);
  EXPECT_EQ(b.lhs, P("x"));
  EXPECT_THROW(neighbor_gcd(fib, 4, 4), IndexOrder);
  EXPECT_THROW(neighbor_gcd(fib, 1, 4), IndexOrder);
}

TEST(IdentityExamples, MixedShift) {
  auto fib = cache("fibonacci");
  auto lucas = cache("lucas");
  auto a = mixed_shift_gcd(fib, lucas, 2, 3);
  ASSERT_EQ(a.size(), 2U);
  EXPECT_EQ(a[0].identity_id, "mixed-shift.1");
  EXPECT_EQ(a[1].identity_id, "mixed-shift.3");
  EXPECT_TRUE(a[0].pass && a[1].pass);
  auto b = mixed_shift_gcd(fib, lucas, 4, 2);
  ASSERT_EQ(b.size(), 2U);
  EXPECT_EQ(b[1].identity_id, "mixed-shift.2");
  EXPECT_EQ(b[1].lhs, gcd(fib.term(3), lucas.term(2)));
  EXPECT_EQ(b[1].rhs, gcd(lucas.term(5), lucas.term(2)));
  EXPECT_TRUE(b[1].pass);
  auto c = mixed_shift_gcd(fib, lucas, 1, 3);
  EXPECT_EQ(c[1].rhs, gcd(lucas.term(0), lucas.term(3)));
  EXPECT_TRUE(c[1].pass);
  EXPECT_EQ(mixed_shift_gcd(fib, lucas, 3, 3).size(), 1U);
}

TEST(IdentityExamples, Filter) {
  EXPECT_EQ(parse_identity_filter("all").size(), identity_groups().size());
  auto picked = parse_identity_filter("dic2-pow2,convolution,convolution");
  EXPECT_EQ(picked, (std::vector<std::string>{"convolution", "dic2-pow2"}));
  EXPECT_THROW(parse_identity_filter("convolution,nope"), UnknownIdentity);
  EXPECT_THROW(parse_identity_filter(""), UnknownIdentity);
  EXPECT_EQ(identity_group("addition.plus"), "addition");
  EXPECT_EQ(identity_group("dic2-mod.witness"), "dic2-mod");
  EXPECT_EQ(identity_group("convolution"), "convolution");
}

TEST(IdentityProperties, WitnessSoundnessCatchesTampering) {
  auto lucas = cache("lucas");
  IdentityReport d = decompose_mod_gm(lucas, 3, 3, 2);
  ASSERT_TRUE(d.pass);
  const Poly correction = mod_gm_correction(lucas, 3, 3, 2);
  EXPECT_TRUE(witness_soundness(d, lucas.term(3), correction, lucas.term(11)).pass);
  IdentityReport tampered = d;
  tampered.witness = *d.witness + Poly{1};
  IdentityReport bad = witness_soundness(tampered, lucas.term(3), correction, lucas.term(11));
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.identity_id, "dic2-mod.witness");
}

TEST(IdentityProperties, BuiltinGridPasses) {
  IdentityGrid grid{parse_identity_filter("all"), 12, 1};
  auto reports = run_identity_grid(builtin_families(), grid);
  EXPECT_GT(reports.size(), 10000U);
  std::set<std::string> groups;
  for (const auto& r : reports) {
    ASSERT_TRUE(r.pass) << r.identity_id << " on " << r.family;
    groups.insert(std::string(identity_group(r.identity_id)));
  }
  EXPECT_EQ(groups.size(), identity_groups().size());
}

TEST(IdentityProperties, RandomGridPasses) {
  std::vector<Family> families;
  for (auto& [fib, lucas] : random_pairs(10, 11)) {
    families.push_back(fib);
    families.push_back(lucas);
  }
  IdentityGrid grid{parse_identity_filter("all"), 8, 1};
  for (const auto& r : run_identity_grid(families, grid)) ASSERT_TRUE(r.pass) << r.identity_id << " on " << r.family;
}

TEST(IdentityProperties, GridIsIndependentOfThreadCount) {
  std::vector<Family> families = builtin_families();
  IdentityGrid one{parse_identity_filter("addition,dic2-mod,neighbor-gcd"), 9, 1};
  IdentityGrid four = one;
  four.threads = 4;
  auto a = run_identity_grid(families, one);
  auto b = run_identity_grid(families, four);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].identity_id, b[i].identity_id);
    ASSERT_EQ(a[i].family, b[i].family);
    ASSERT_EQ(a[i].params, b[i].params);
    ASSERT_EQ(a[i].lhs, b[i].lhs);
  }
}

TEST(IdentityProperties, PairIdentitiesRunOncePerPair) {
  IdentityGrid grid{parse_identity_filter("addition-cross"), 3, 1};
  auto both = run_identity_grid({builtin_family("fibonacci"), builtin_family("lucas")}, grid);
  auto one = run_identity_grid({builtin_family("lucas")}, grid);
  EXPECT_EQ(both.size(), one.size());
  EXPECT_EQ(both.front().family, "fibonacci/lucas");
}

TEST(IdentityProperties, InvalidFamilyRejected) {
  Family pell_lucas{"pell-lucas", Kind::lucas, P("2x"), P("1"), P("2"), P("2x")};
  IdentityGrid grid{parse_identity_filter("all"), 3, 1};
  EXPECT_THROW(run_identity_grid({pell_lucas}, grid), InvalidFamily);
}
