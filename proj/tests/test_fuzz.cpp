#include <gtest/gtest.h>

#include "pushcat/fuzz.hpp"
#include "pushcat/necklace.hpp"
#include "pushcat/pushout.hpp"
#include "pushcat/reedy.hpp"

namespace pushcat {
namespace {

using fuzz::Rng;

TEST(Fuzz, RandomCategoriesSatisfyAxioms) {
  Rng rng(1);
  for (int i = 0; i < 40; ++i) {
    const auto c = fuzz::random_category(rng);
    check_category_axioms(*c);
    EXPECT_LE(c->num_morphisms(), 40u);
  }
}

TEST(Fuzz, SameSeedSameInstance) {
  Rng r1(9);
  Rng r2(9);
  const Span s1 = fuzz::random_dwyer_span(r1);
  const Span s2 = fuzz::random_dwyer_span(r2);
  EXPECT_EQ(s1.left_cat()->object_names(), s2.left_cat()->object_names());
  EXPECT_TRUE(same_tables(s1.left, s2.left));
  EXPECT_TRUE(same_tables(s1.right, s2.right));
}

TEST(Fuzz, DwyerSpansAreDwyer) {
  Rng rng(2);
  for (int i = 0; i < 60; ++i) {
    const Span span = fuzz::random_dwyer_span(rng);
    check_functor(span.left);
    check_functor(span.right);
    EXPECT_TRUE(check_dwyer(span.left)) << i;
    EXPECT_LE(span.left_cat()->num_objects(), 5u);
  }
}

TEST(Fuzz, PushoutAgreesWithOracle) {
  Rng rng(3);
  for (int i = 0; i < 25; ++i) {
    const Span span = fuzz::random_dwyer_span(rng);
    const auto p = dwyer_pushout(span);
    EXPECT_TRUE(p.oracle.holds()) << i << ": " << p.oracle.disagreement;
    EXPECT_TRUE(is_fully_faithful(p.fbar)) << i;
    check_functor(p.gbar);
  }
}

TEST(Fuzz, PreorderSpansHaveThinPushouts) {
  Rng rng(4);
  for (int i = 0; i < 25; ++i) {
    const auto p = dwyer_pushout(fuzz::random_poset_dwyer_span(rng));
    for (ObjIndex x = 0; x < p.d->num_objects(); ++x)
      for (ObjIndex y = 0; y < p.d->num_objects(); ++y) EXPECT_LE(p.d->hom(x, y).size(), 1u);
  }
}

TEST(Fuzz, FourthSquareConsistent) {
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    const Span span = fuzz::random_poset_dwyer_span(rng, 4);
    for (const auto& check : verify_fourth_square_all(span, 3)) {
      EXPECT_EQ(check.verdict, SquareVerdict::Consistent) << i << ": " << check.detail;
    }
  }
}

TEST(Fuzz, SieveUnionOfDownSets) {
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const auto c = fuzz::random_poset(rng, fuzz::uniform(rng, 1, 5));
    const auto c0 = fuzz::random_down_set(rng, *c);
    const auto c1 = fuzz::random_down_set(rng, *c);
    const auto v = sieve_union_check(c, c0, c1, 6);
    EXPECT_TRUE(v.holds) << i << ": " << v.detail;
  }
}

TEST(Fuzz, SetFunctorsAreFunctors) {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto c = fuzz::random_category(rng, 2, 12);
    check_set_functor(fuzz::random_set_functor(rng, c, 3));
  }
}

TEST(Fuzz, BeckChevalleyOnRandomSpans) {
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    const Span span = fuzz::random_dwyer_span(rng, 4);
    const auto f = fuzz::random_set_functor(rng, span.right_cat(), 2);
    const auto v = verify_beck_chevalley(span, f);
    EXPECT_TRUE(v.holds) << i << ": " << v.detail;
  }
}

TEST(Fuzz, TwoLevelInclusionsAreReedy) {
  Rng rng(10);
  for (int i = 0; i < 10; ++i) {
    const Functor inc = fuzz::random_two_level(rng);
    const auto v = is_reedy_extension(inc);
    EXPECT_TRUE(v) << i << ": " << v.detail;
  }
}

TEST(Fuzz, SegalAwayFromC) {
  Rng rng(11);
  for (int i = 0; i < 8; ++i) {
    const Span span = fuzz::random_full_span(rng, 4);
    const auto np = nerve_pushout(span, 3);
    std::vector<bool> a0 = np.c_vertex;
    EXPECT_TRUE(check_segal_away(*np.sset, a0, 3)) << i;
  }
}

}  // namespace
}  // namespace pushcat
