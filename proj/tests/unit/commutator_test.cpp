#include <gtest/gtest.h>

#include "test_util.hpp"
#include "wordlab/commutator.hpp"
#include "wordlab/error.hpp"
#include "wordlab/random.hpp"
#include "wordlab/schreier.hpp"
#include "wordlab/tower.hpp"

namespace wordlab {
namespace {

using testing::w;

Split ab_split() { return Split::parse("a|b", testing::ab()); }

TEST(ClLowerBound, Examples) {
  const Split s = ab_split();
  const FreeWord b = w("b");
  EXPECT_EQ(cl_lower_bound(power(commutator(w("a b"), w("b a")), 10), s, b), 2U);
  EXPECT_EQ(cl_lower_bound(FreeWord(testing::ab()), s, b), 0U);
  EXPECT_EQ(weight(w("[a,b]"), s, b), 0);
  EXPECT_EQ(cl_lower_bound(w("[a,b]"), s, b), 1U);
  EXPECT_THROW(cl_lower_bound(w("a"), s, b), InfiniteCommutatorLength);
}

TEST(ClLowerBound, WeightBoundArithmetic) {
  EXPECT_EQ(weight_bound(0), 1U);
  EXPECT_EQ(weight_bound(9), 1U);
  EXPECT_EQ(weight_bound(10), 2U);
  EXPECT_EQ(weight_bound(-20), 2U);
  EXPECT_EQ(weight_bound(21), 2U);
  EXPECT_EQ(weight_bound(22), 3U);
}

TEST(IsCommutator, Examples) {
  EXPECT_TRUE(is_commutator(w("[a,b]")));
  EXPECT_FALSE(is_commutator(w("a")));
  EXPECT_FALSE(is_commutator(w("[a,b]^2")));
  EXPECT_TRUE(is_commutator(FreeWord(testing::ab())));
  EXPECT_TRUE(is_commutator(w("b [a^2, b a] b^-1")));
  EXPECT_FALSE(is_commutator(w("[a,b] [a^2,b^2]")));
}

TEST(ClBounds, Examples) {
  const Split s = ab_split();
  const FreeWord b = w("b");
  const ClBounds inf = cl_bounds(w("a^2 b"), s, b);
  EXPECT_FALSE(inf.lower);
  EXPECT_TRUE(inf.upper.is_infinite());

  const ClBounds one = cl_bounds(w("[a,b]"), s, b);
  EXPECT_EQ(one.lower, 1U);
  EXPECT_EQ(one.upper, ClBound::finite(1));

  const ClBounds two = cl_bounds(w("[a,b] [a^2,b^2]"), s, b);
  ASSERT_TRUE(two.lower);
  EXPECT_GE(*two.lower, 1U);
  EXPECT_LE(two.upper.value(), 2U);
  EXPECT_LE(*two.lower, two.upper.value());

  const ClBounds zero = cl_bounds(FreeWord(testing::ab()), s, b);
  EXPECT_EQ(zero.lower, 0U);
  EXPECT_EQ(zero.upper, ClBound::finite(0));
}

TEST(SupDivergence, Examples) {
  const Split s = ab_split();
  const auto rows = sup_divergence_table(60, s, w("a"), w("b"));
  ASSERT_EQ(rows.size(), 60U);
  EXPECT_EQ(rows[0].L, 1U);
  EXPECT_EQ(rows[0].weight, -2);
  EXPECT_EQ(rows[0].lower_bound, 1U);
  EXPECT_EQ(rows[4].weight, -10);
  EXPECT_EQ(rows[4].lower_bound, 2U);
  EXPECT_EQ(rows[59].weight, -120);
  EXPECT_EQ(rows[59].lower_bound, 11U);
  for (const SupRow& r : rows) EXPECT_EQ(r.weight, -2 * static_cast<std::int64_t>(r.L));
}

TEST(SupDivergence, NonGeneratorFactors) {
  const Split s = Split::parse("x1,x2|x3,x4");
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    const FreeWord a = gen::factor_word(s, Part::A, rng, 6);
    const FreeWord b = gen::factor_word(s, Part::B, rng, 6);
    for (const SupRow& r : sup_divergence_table(12, s, a, b))
      ASSERT_EQ(r.weight, -2 * static_cast<std::int64_t>(r.L)) << a.format() << " / " << b.format();
  }
}

TEST(SupDivergence, Errors) {
  const Split s = ab_split();
  EXPECT_THROW(sup_divergence_table(3, s, w("a"), w("a^2")), DomainError);
  EXPECT_THROW(sup_divergence_table(3, s, FreeWord(testing::ab()), w("b")), DomainError);
  EXPECT_THROW(sup_divergence_table(3, s, w("a b"), w("b")), DomainError);
}

TEST(RemarkIdentity, HoldsUnderRelation) {
  for (std::uint64_t n = 1; n <= 3; ++n) {
    const RemarkReport r = remark_identity_check(n, 20, 5 + n);
    EXPECT_TRUE(r.passed());
    EXPECT_TRUE(r.free_control_differs);
    EXPECT_EQ(r.trials.size(), 20U);
    for (const auto& t : r.trials) EXPECT_EQ(t.b * t.b, Matrix2::identity());
  }
  EXPECT_TRUE(remark_identity_check(0, 5, 1).vacuous);
  EXPECT_TRUE(remark_identity_check(0, 5, 1).passed());
}

TEST(RemarkIdentity, FailsWithoutRelation) {
  // b = [[1,1],[0,1]] has infinite order, so b^2 does not commute with a generic a.
  const FreeWord c = w("[a,b]");
  MatrixAssignment m;
  m.assign(0, Matrix2::of(1, 0, 1, 1));
  m.assign(1, Matrix2::of(1, 1, 0, 1));
  EXPECT_NE(eval_matrix(power(c, 2), m), eval_matrix(commutator(power(c, -1), w("b")), m));
  EXPECT_FALSE(concat(power(c, 2), invert(commutator(power(c, -1), w("b")))).is_neutral());
}

// --- properties --------------------------------------------------------------

TEST(ClProperties, SoundnessSandwich) {
  const Split s = ab_split();
  Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    const FreeWord x = gen::kernel_word(testing::ab(), rng, 60);
    const ClBounds cb = cl_bounds(x, s, w("b"));
    ASSERT_TRUE(cb.lower);
    ASSERT_LE(*cb.lower, cb.upper.value()) << x.format();
  }
}

TEST(ClProperties, WicksConsistency) {
  const Split s = ab_split();
  Rng rng(33);
  for (int i = 0; i < 400; ++i) {
    const FreeWord x = gen::word(testing::ab(), rng, 8);
    const FreeWord y = gen::word(testing::ab(), rng, 8);
    const FreeWord c = commutator(x, y);
    ASSERT_TRUE(is_commutator(c)) << c.format();
    ASSERT_LE(cl_lower_bound(c, s, w("b")), 1U);
    // Conjugates of commutators are commutators.
    const FreeWord z = gen::word(testing::ab(), rng, 5);
    const FreeWord conj[] = {z, c, invert(z)};
    ASSERT_TRUE(is_commutator(concat(conj)));
  }
}

TEST(ClProperties, HomomorphismMonotonicity) {
  const Split& s = tower::split();
  const FreeWord bs[] = {parse("x3", tower::alphabet()), parse("[x3,x4]", tower::alphabet())};
  Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    const FreeWord x = gen::kernel_word(tower::alphabet(), rng, 16);
    const FreeWord image = tower::substitute(x);
    for (const FreeWord& b : bs)
      ASSERT_LE(cl_lower_bound(image, s, b), schreier::cl_upper_bound(x).value()) << x.format();
  }
}

TEST(ClProperties, SubadditivityAtBoundLevel) {
  const Split s = ab_split();
  const FreeWord b = w("b");
  Rng rng(35);
  for (int i = 0; i < 500; ++i) {
    const FreeWord g1 = gen::kernel_word(testing::ab(), rng, 20);
    const FreeWord g2 = rng.coin() ? gen::kernel_word(testing::ab(), rng, 30)
                                   : power(commutator(w("a b"), w("b a")), rng.uniform(1, 12));
    const FreeWord g3 = gen::kernel_word(testing::ab(), rng, 20);
    const FreeWord prod[] = {g1, g2, g3};
    const auto lhs = static_cast<std::int64_t>(cl_lower_bound(g2, s, b)) -
                     static_cast<std::int64_t>(schreier::cl_upper_bound(g1).value()) -
                     static_cast<std::int64_t>(schreier::cl_upper_bound(g3).value());
    ASSERT_LE(lhs, static_cast<std::int64_t>(schreier::cl_upper_bound(concat(prod)).value()));
  }
}

}  // namespace
}  // namespace wordlab
