#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pushcat/comma.hpp"

namespace pushcat {
namespace {

using testing::example_span;
using testing::identity_span;
using testing::include;
using testing::poset;

std::size_t non_identity(const FinCat& c) { return c.num_morphisms() - c.num_objects(); }

TEST(Slice, Examples) {
  auto t = share(terminal_category());
  EXPECT_EQ(slice(t, 0).cat->num_morphisms(), 1u);
  auto a = share(ordinal(1));
  CommaCat over_a = slice(a, 0);
  EXPECT_EQ(over_a.cat->num_objects(), 1u);
  EXPECT_EQ(over_a.cat->num_morphisms(), 1u);
  CommaCat over_b = slice(a, 1);
  EXPECT_EQ(over_b.cat->num_objects(), 2u);
  EXPECT_EQ(non_identity(*over_b.cat), 1u);
  check_functor(over_b.projections[0]);
}

TEST(Coslice, Examples) {
  auto t = share(terminal_category());
  EXPECT_EQ(coslice(t, 0).cat->num_objects(), 1u);
  auto a = share(ordinal(1));
  EXPECT_EQ(coslice(a, 1).cat->num_objects(), 1u);
  auto two = share(ordinal(2));
  CommaCat under0 = coslice(two, 0);
  EXPECT_EQ(under0.cat->num_objects(), 3u);
  EXPECT_EQ(non_identity(*under0.cat), 3u);
  check_functor(under0.projections[0]);
  // The object id_0 is initial.
  const ObjIndex id0 = *under0.cat->find_object("0<=0") ;
  (void)id0;
}

TEST(ArrowCat, Examples) {
  auto t = share(terminal_category());
  EXPECT_EQ(arrow_cat(t).cat->num_morphisms(), 1u);
  auto a = share(ordinal(1));
  CommaCat ar = arrow_cat(a);
  EXPECT_EQ(ar.cat->num_objects(), 3u);
  // Ar([1]) is the poset id_0 <= f <= id_1.
  EXPECT_EQ(ar.cat->num_morphisms(), 6u);
  check_functor(ar.projections[0]);
  check_functor(ar.projections[1]);
}

TEST(Pullback, Diagonal) {
  auto c = poset({"p", "q"}, {{0, 1}});
  CommaCat p = pullback_cat(identity_functor(c), identity_functor(c));
  EXPECT_EQ(p.cat->num_objects(), 2u);
  EXPECT_EQ(p.cat->num_morphisms(), 3u);
}

TEST(Pullback, DisjointImagesAreEmpty) {
  auto z = poset({"1", "2"}, {{0, 1}});
  CommaCat p = pullback_cat(include(z, {"1"}), include(z, {"2"}));
  EXPECT_EQ(p.cat->num_objects(), 0u);
}

TEST(Pullback, MismatchedTarget) {
  auto z = poset({"1", "2"}, {{0, 1}});
  auto w = poset({"1", "2", "3"}, {{0, 1}});
  try {
    pullback_cat(include(z, {"1"}), include(w, {"1"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MismatchedTarget);
  }
}

TEST(Pullback, CosliceOverSubposet) {
  auto b = poset({"1", "2"}, {{0, 1}});
  CommaCat k = coslice(b, 0);
  CommaCat p = pullback_cat(k.projections[0], include(b, {"1"}));
  EXPECT_EQ(p.cat->num_objects(), 1u);
  EXPECT_EQ(b->morphism_id(k.object_tuples[p.object_tuples[0][0]][0]), "id_1");
}

TEST(CommaTriple, IdentitySpanMatchesHom) {
  auto c = poset({"a", "b", "c"}, {{0, 1}, {0, 2}});
  Span s = identity_span(c);
  for (ObjIndex x = 0; x < 3; ++x)
    for (ObjIndex y = 0; y < 3; ++y) {
      CommaCat t = comma_triple(s, x, y, Orientation::BToC);
      const std::size_t expected = c->hom(x, y).size();
      if (expected == 0) {
        EXPECT_EQ(t.cat->num_objects(), 0u);
      } else {
        EXPECT_EQ(components(*t.cat).second, expected);
      }
    }
}

TEST(CommaTriple, ExampleSpan) {
  Span s = example_span();
  CommaCat empty = comma_triple(s, 1, 2, Orientation::BToC);  // from 2_B to 2_C
  EXPECT_EQ(empty.cat->num_objects(), 0u);
  for (ObjIndex c = 0; c < 3; ++c) EXPECT_EQ(comma_triple(s, 1, c, Orientation::BToC).cat->num_objects(), 0u);
  CommaCat one = comma_triple(s, 1, 0, Orientation::CToB);  // from 0_C to 2_B
  ASSERT_EQ(one.cat->num_objects(), 1u);
  const auto& t = one.object_tuples[0];
  EXPECT_EQ(s.right_cat()->morphism_id(t[0]), "0<=1");
  EXPECT_EQ(s.left_cat()->morphism_id(t[2]), "1<=2");
  EXPECT_EQ(one.projections.size(), 3u);
  for (const auto& p : one.projections) check_functor(p);
}

TEST(FourthComma, EmptyApex) {
  auto a = share(empty_category());
  auto b = poset({"x", "y"}, {{0, 1}});
  Functor f{a, b, {}, {}};
  Span s{f, Functor{a, b, {}, {}}};
  FourthComma fc = fourth_comma(s, 0, 1);
  EXPECT_EQ(fc.top.cat->num_objects(), 0u);
  EXPECT_EQ(fc.bottom.cat->num_objects(), 0u);
}

TEST(FourthComma, IdentitySpanConnectsComponents) {
  auto c = poset({"a", "b", "c"}, {{0, 1}, {1, 2}});
  Span s = identity_span(c);
  FourthComma fc = fourth_comma(s, 0, 2);
  EXPECT_EQ(components(*fc.top.cat).second, 1u);
  EXPECT_EQ(components(*fc.bottom.cat).second, 1u);
  check_functor(fc.connecting);
}

TEST(FourthComma, ExampleSpanTopIsEmpty) {
  Span s = example_span();
  FourthComma fc = fourth_comma(s, 1, 1);
  EXPECT_EQ(fc.top.cat->num_objects(), 0u);
  EXPECT_EQ(fc.bottom.cat->num_objects(), 0u);
  FourthComma low = fourth_comma(s, 0, 1);
  EXPECT_EQ(low.top.cat->num_objects(), 1u);
  EXPECT_EQ(low.bottom.cat->num_objects(), 1u);
}

TEST(Grothendieck, Examples) {
  auto c = poset({"p", "q", "r"}, {{0, 1}, {0, 2}});
  CommaCat one = grothendieck(constant_set_functor(c, 1));
  EXPECT_EQ(one.cat->num_objects(), 3u);
  EXPECT_EQ(one.cat->num_morphisms(), c->num_morphisms());
  EXPECT_EQ(grothendieck(constant_set_functor(c, 0)).cat->num_objects(), 0u);
  auto a = share(ordinal(1));
  CommaCat rep = grothendieck(representable(a, 0));
  CommaCat under = coslice(a, 0);
  EXPECT_EQ(rep.cat->num_objects(), under.cat->num_objects());
  EXPECT_EQ(rep.cat->num_morphisms(), under.cat->num_morphisms());
}

TEST(Grothendieck, RejectsNonFunctor) {
  auto a = share(ordinal(1));
  SetFunctor bad{a, {1, 1}, {{0}, {0}, {1}}};
  try {
    grothendieck(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFunctorial);
  }
}

}  // namespace
}  // namespace pushcat
