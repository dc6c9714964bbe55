#include <gtest/gtest.h>

#include "test_util.hpp"
#include "wordlab/error.hpp"
#include "wordlab/magnus.hpp"
#include "wordlab/random.hpp"

namespace wordlab::magnus {
namespace {

using testing::ab;
using testing::w;

constexpr GenIndex A = 0, B = 1;

TEST(Expand, Examples) {
  const TruncatedSeries s = expand(w("a"), 3);
  EXPECT_EQ(s.terms().size(), 2U);
  EXPECT_EQ(s.coefficient({}), 1);
  EXPECT_EQ(s.coefficient({A}), 1);

  const TruncatedSeries inv = expand(w("a^-1"), 2);
  EXPECT_EQ(inv.terms().size(), 3U);
  EXPECT_EQ(inv.coefficient({A}), -1);
  EXPECT_EQ(inv.coefficient({A, A}), 1);

  // Brute-force product (1-A+A^2)(1-B+B^2)(1+A)(1+B), see tests/oracles/oracle.py.
  const TruncatedSeries c = expand(w("[a,b]"), 2);
  EXPECT_EQ(c.terms().size(), 3U);
  EXPECT_EQ(c.coefficient({}), 1);
  EXPECT_EQ(c.coefficient({A, B}), 1);
  EXPECT_EQ(c.coefficient({B, A}), -1);

  EXPECT_EQ(expand(FreeWord(ab()), 4), TruncatedSeries::one(2, 4));
  EXPECT_THROW(expand(w("a"), 0), DomainError);
}

TEST(Expand, PowerCoefficientsAreBinomial) {
  const TruncatedSeries s = expand(w("a^-3"), 4);
  // (1+A)^-3 = 1 - 3A + 6A^2 - 10A^3 + 15A^4
  EXPECT_EQ(s.coefficient({A}), -3);
  EXPECT_EQ(s.coefficient({A, A}), 6);
  EXPECT_EQ(s.coefficient({A, A, A}), -10);
  EXPECT_EQ(s.coefficient({A, A, A, A}), 15);
  const TruncatedSeries big = expand(FreeWord::generator(ab(), 0, 1'000'000'000'000LL), 3);
  EXPECT_EQ(big.coefficient({A, A, A}).get_str(), "166666666666166666666667000000000000");
}

TEST(Format, DegreeThenLex) {
  EXPECT_EQ(expand(w("[a,b]"), 2).format(*ab()), "1 1\n1 a*b\n-1 b*a\n");
}

TEST(LcsDegree, Examples) {
  EXPECT_EQ(lcs_degree(w("a"), 8).degree, 1U);
  EXPECT_EQ(lcs_degree(w("[a,b]"), 8).degree, 2U);
  EXPECT_EQ(lcs_degree(w("[[a,b],b]"), 8).degree, 3U);
  EXPECT_THROW(lcs_degree(FreeWord(ab()), 8), DomainError);
  const auto capped = lcs_degree(w("[[a,b],b]"), 2);
  EXPECT_TRUE(capped.exceeds_cap());
  EXPECT_EQ(capped.cap_used, 2U);
}

TEST(InLowerCentral, Examples) {
  EXPECT_TRUE(in_lower_central(w("[a,b]"), 2, 4));
  EXPECT_FALSE(in_lower_central(w("[a,b]"), 3, 4));
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(in_lower_central(FreeWord(ab()), n, 6));
  EXPECT_TRUE(in_lower_central(w("a"), 1, 1));
  EXPECT_THROW(in_lower_central(w("a"), 5, 3), DomainError);
  EXPECT_TRUE(in_lower_central(w("[[a,b],[a,b^2]]"), 4, 3));
}

// --- properties --------------------------------------------------------------

TEST(MagnusProperties, Multiplicative) {
  const auto abc = Alphabet::make({"a", "b", "c"});
  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const FreeWord u = gen::word(abc, rng, 10);
    const FreeWord v = gen::word(abc, rng, 10);
    const std::size_t cap = static_cast<std::size_t>(rng.uniform(1, 5));
    ASSERT_EQ(expand(concat(u, v), cap), expand(u, cap) * expand(v, cap));
  }
}

TEST(MagnusProperties, InjectivityShadow) {
  Rng rng(52);
  for (int i = 0; i < 300; ++i) {
    // Half of the corpus lies in the commutator subgroup so that degrees above 1 occur.
    const FreeWord x = i % 2 ? gen::nonneutral_word(ab(), rng, 12) : gen::kernel_word(ab(), rng, 12);
    if (x.is_neutral()) continue;
    const auto r = lcs_degree(x, x.letter_length());
    ASSERT_FALSE(r.exceeds_cap()) << x.format();
  }
}

TEST(MagnusProperties, TorsionShadow) {
  Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    const FreeWord x = i % 2 ? gen::nonneutral_word(ab(), rng, 10) : gen::kernel_word(ab(), rng, 10);
    if (x.is_neutral()) continue;
    const auto base = lcs_degree(x, x.letter_length());
    ASSERT_TRUE(base.degree);
    const std::size_t d = *base.degree;
    const auto k = rng.uniform(2, 5);
    const FreeWord xk = power(x, k);
    ASSERT_EQ(lcs_degree(xk, d).degree, d) << x.format() << " ^ " << k;
    const auto low = expand(x, d).homogeneous(d);
    const auto lowk = expand(xk, d).homogeneous(d);
    ASSERT_EQ(low.size(), lowk.size());
    for (const auto& [m, c] : low) ASSERT_EQ(lowk.at(m), c * static_cast<long>(k));
  }
}

TEST(MagnusProperties, CommutatorDegreeAdditivity) {
  Rng rng(54);
  for (int i = 0; i < 200; ++i) {
    const FreeWord u = i % 3 ? gen::nonneutral_word(ab(), rng, 5) : gen::kernel_word(ab(), rng, 8);
    const FreeWord v = gen::nonneutral_word(ab(), rng, 5);
    const FreeWord c = commutator(u, v);
    if (u.is_neutral() || c.is_neutral()) continue;
    const std::size_t du = *lcs_degree(u, 8).degree;
    const std::size_t dv = *lcs_degree(v, 8).degree;
    const auto dc = lcs_degree(c, du + dv);
    // Either the degree is found at or above du + dv, or it lies beyond the cap.
    if (dc.degree) ASSERT_GE(*dc.degree, du + dv) << u.format() << " , " << v.format();
  }
}

}  // namespace
}  // namespace wordlab::magnus
