#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pushcat/necklace.hpp"
#include "pushcat/sset.hpp"

namespace pushcat {
namespace {

using testing::example_span;
using testing::identity_span;
using testing::poset;

TEST(NecklaceMaps, Identity) {
  const Necklace n(3, {0, 1, 3});
  const auto maps = necklace_maps(n, n);
  ASSERT_FALSE(maps.empty());
  EXPECT_NE(std::find(maps.begin(), maps.end(), std::vector<std::size_t>{0, 1, 2, 3}), maps.end());
}

TEST(NecklaceMaps, WedgeToSimplexAndBack) {
  const Necklace wedge(2, {0, 1, 2});
  const Necklace simplex = Necklace::simplex(2);
  EXPECT_EQ(necklace_maps(wedge, simplex).size(), 3u);
  EXPECT_TRUE(necklace_maps(simplex, wedge).empty());
}

TEST(NecklaceMaps, RejectsBadJoints) {
  EXPECT_THROW(Necklace(2, {0, 2, 1}), Error);
  EXPECT_THROW(Necklace(2, {1, 2}), Error);
}

TEST(NecklacesIn, TerminalIsConnected) {
  const auto x = nerve(share(terminal_category()), 3);
  const auto nec = necklaces_in(x, 0, 0, 3);
  // The vertex plus one degenerate necklace per joint set of width 1..3.
  EXPECT_EQ(nec.objects.size(), 1u + 1u + 2u + 4u);
  EXPECT_EQ(components(*nec.cat).second, 1u);
}

TEST(NecklacesIn, ArrowIsConnected) {
  const auto c = share(ordinal(1));
  const auto x = nerve(c, 3);
  const auto nec = necklaces_in(x, 0, 1, 3);
  EXPECT_FALSE(nec.objects.empty());
  EXPECT_EQ(components(*nec.cat).second, 1u);
  EXPECT_TRUE(necklaces_in(x, 1, 0, 3).objects.empty());
}

TEST(NecklacesIn, Bounds) {
  const auto x = nerve(share(ordinal(1)), 2);
  EXPECT_THROW(necklaces_in(x, 0, 1, 0), Error);
  EXPECT_THROW(necklaces_in(x, 0, 1, 3), Error);
}

TEST(WordOracle, IdentitySpanReproducesHom) {
  // Idempotent e on x plus an arrow x -> y absorbing it.
  RawCategory raw;
  raw.objects = {"x", "y"};
  raw.morphisms = {{"1x", "x", "x"}, {"1y", "y", "y"}, {"e", "x", "x"}, {"a", "x", "y"}};
  raw.identities = {{"x", "1x"}, {"y", "1y"}};
  raw.compose = {{"e", "e", "e"}, {"a", "e", "a"}};
  const auto c = share(validate_category(raw));
  WordOracle oracle(identity_span(c), 4);
  for (ObjIndex x = 0; x < 2; ++x)
    for (ObjIndex y = 0; y < 2; ++y) {
      const auto classes = oracle.hom({Side::B, x}, {Side::C, y});
      EXPECT_EQ(classes.size(), c->hom(x, y).size());
      EXPECT_TRUE(classes.stabilized);
    }
}

TEST(WordOracle, ExampleSpan) {
  const Span span = example_span();
  const auto& b = *span.left_cat();
  const auto& c = *span.right_cat();
  const auto two_b = *b.find_object("2");
  const auto zero = *c.find_object("0");
  const auto two_c = *c.find_object("2");
  const auto one_to_two = pushout_hom_sets(span, {Side::C, zero}, {Side::B, two_b}, 8);
  ASSERT_EQ(one_to_two.size(), 1u);
  EXPECT_TRUE(one_to_two.stabilized);
  EXPECT_EQ(one_to_two.representatives[0].size(), 2u);
  EXPECT_EQ(to_string(one_to_two.representatives[0], span), "C:0<=1 · B:1<=2");
  const auto none = pushout_hom_sets(span, {Side::C, two_c}, {Side::B, two_b}, 6);
  EXPECT_EQ(none.size(), 0u);
  EXPECT_TRUE(none.stabilized);
  EXPECT_THROW(pushout_hom_sets(span, {Side::C, zero}, {Side::B, two_b}, 0), Error);
}

TEST(WordOracle, OppositeSymmetry) {
  const Span span = example_span();
  const Span op = opposite(span);
  WordOracle forward(span, 6);
  WordOracle backward(op, 6);
  for (ObjIndex x = 0; x < span.right_cat()->num_objects(); ++x)
    for (ObjIndex y = 0; y < span.left_cat()->num_objects(); ++y) {
      EXPECT_EQ(forward.hom({Side::C, x}, {Side::B, y}).size(), backward.hom({Side::B, y}, {Side::C, x}).size());
      EXPECT_EQ(forward.hom({Side::B, y}, {Side::C, x}).size(), backward.hom({Side::C, x}, {Side::B, y}).size());
    }
}

TEST(WordOracle, ClassifiesWords) {
  const Span span = example_span();
  WordOracle oracle(span, 6);
  const auto& c = *span.right_cat();
  const auto& b = *span.left_cat();
  const Word w{{Side::C, *c.find_morphism("0<=1")}, {Side::B, *b.find_morphism("1<=2")}};
  EXPECT_EQ(oracle.classify({Side::C, *c.find_object("0")}, w), std::optional<std::size_t>(0));
}

TEST(NervePushout, ExampleSpan) {
  const Span span = example_span();
  const auto p = nerve_pushout(span, 3);
  check_simplicial_identities(*p.sset);
  EXPECT_EQ(p.sset->vertex_labels, (std::vector<std::string>{"0", "1", "2", "2′"}));
  EXPECT_EQ(p.c_vertex, (std::vector<bool>{true, true, true, false}));
  // Edges: six from C, plus 2 -> 2 identity and 1 -> 2 from B.
  EXPECT_EQ(p.sset->count[1], 8u);
}

TEST(NervePushout, NecklacesMatchOracle) {
  const Span span = example_span();
  const auto p = nerve_pushout(span, 3);
  WordOracle oracle(span, 6);
  const auto& c = *span.right_cat();
  const auto& b = *span.left_cat();
  for (ObjIndex x = 0; x < c.num_objects(); ++x) {
    const auto classes = oracle.hom({Side::C, x}, {Side::B, *b.find_object("2")});
    const auto nec = necklaces_in(*p.sset, x, 3, 3);
    EXPECT_EQ(components(*nec.cat).second, classes.size()) << c.object_name(x);
  }
}

TEST(SegalAway, NerveHolds) {
  const auto c = poset({"0", "1", "2", "3"}, {{0, 1}, {1, 2}, {0, 3}});
  const auto x = nerve(c, 3);
  EXPECT_TRUE(check_segal_away(x, std::vector<bool>(4, false), 3));
  EXPECT_TRUE(check_segal_away(x, std::vector<bool>{true, false, true, false}, 3));
}

TEST(SegalAway, PushoutHoldsAwayFromC) {
  const Span span = example_span();
  const auto p = nerve_pushout(span, 3);
  const auto v = check_segal_away(*p.sset, p.c_vertex, 3);
  EXPECT_TRUE(v);
  EXPECT_GT(v.necklaces_checked, 0u);
}

TEST(SegalAway, HornFails) {
  const auto x = nerve(share(ordinal(2)), 2);
  const auto horn = sub_sset(x, [&](std::size_t n, SimplexIndex s) {
    bool low = true;
    bool high = true;
    for (std::size_t i = 0; i <= n; ++i) {
      low = low && x.vertex(n, s, i) <= 1;
      high = high && x.vertex(n, s, i) >= 1;
    }
    return low || high;
  });
  check_simplicial_identities(*horn.sset);
  const auto v = check_segal_away(*horn.sset, std::vector<bool>(3, false), 2);
  ASSERT_FALSE(v);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->necklace.necklace, Necklace(2, {0, 1, 2}));
  EXPECT_EQ(v.witness->extensions, 0u);
  EXPECT_EQ(v.witness->joint, 1u);
}

TEST(SegalAway, RejectsNonFullSubset) {
  const auto x = nerve(share(ordinal(1)), 2);
  std::vector<std::vector<bool>> member(3);
  for (std::size_t n = 0; n <= 2; ++n) member[n].assign(x.count[n], false);
  member[0].assign(2, true);
  try {
    check_segal_away(x, member, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFullSubanima);
  }
}

}  // namespace
}  // namespace pushcat
