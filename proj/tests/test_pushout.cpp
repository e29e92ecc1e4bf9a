#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pushcat/kan.hpp"
#include "pushcat/pushout.hpp"

namespace pushcat {
namespace {

using testing::example_span;
using testing::identity_span;
using testing::include;
using testing::poset;

std::vector<std::string> object_names(const FinCat& c) {
  std::vector<std::string> out;
  for (ObjIndex x = 0; x < c.num_objects(); ++x) out.push_back(c.object_name(x));
  return out;
}

/// Hom-set sizes agree under the identity on object indices.
bool same_hom_sizes(const FinCat& x, const FinCat& y) {
  if (x.num_objects() != y.num_objects()) return false;
  for (ObjIndex a = 0; a < x.num_objects(); ++a)
    for (ObjIndex b = 0; b < x.num_objects(); ++b)
      if (x.hom(a, b).size() != y.hom(a, b).size()) return false;
  return true;
}

TEST(DwyerPushout, GoldenPoset) {
  const auto p = dwyer_pushout(example_span());
  const FinCat& d = *p.d;
  EXPECT_EQ(object_names(d), (std::vector<std::string>{"0", "1", "2", "2′"}));
  EXPECT_TRUE(p.oracle.holds());
  // A poset: every hom-set has at most one element.
  const std::vector<std::vector<std::size_t>> expected{
      {1, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (ObjIndex x = 0; x < 4; ++x)
    for (ObjIndex y = 0; y < 4; ++y) EXPECT_EQ(d.hom(x, y).size(), expected[x][y]) << x << "," << y;
  check_functor(p.fbar);
  check_functor(p.gbar);
  EXPECT_EQ(p.gbar.obj_map, (std::vector<ObjIndex>{1, 3}));
}

TEST(DwyerPushout, IdentitySpanGivesC) {
  const auto c = poset({"x", "y", "z"}, {{0, 1}, {0, 2}});
  const auto p = dwyer_pushout(identity_span(c));
  EXPECT_EQ(p.d->num_objects(), 3u);
  EXPECT_EQ(p.d->num_morphisms(), c->num_morphisms());
  EXPECT_TRUE(same_hom_sizes(*p.d, *c));
}

TEST(DwyerPushout, EmptyApexGivesCoproduct) {
  const auto a = share(empty_category());
  const auto b = share(ordinal(1));
  const auto c = share(ordinal(2));
  const Span span{Functor{a, b, {}, {}}, Functor{a, c, {}, {}}};
  const auto p = dwyer_pushout(span);
  EXPECT_EQ(p.d->num_objects(), 5u);
  EXPECT_EQ(components(*p.d).second, 2u);
  EXPECT_TRUE(same_hom_sizes(*p.d, coproduct(*c, *b, "C:", "B:")));
}

TEST(DwyerPushout, RejectsNonSieve) {
  const auto a = poset({"2"}, {});
  const auto b = poset({"1", "2"}, {{0, 1}});
  const Span span{testing::monotone(a, b, {{"2", "2"}}), testing::monotone(a, b, {{"2", "2"}})};
  try {
    dwyer_pushout(span);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDwyer);
  }
}

TEST(DwyerPushout, InducedFunctorFromCocone) {
  const Span span = example_span();
  const auto p = dwyer_pushout(span);
  const Functor u = induced_functor(p, p.gbar, p.fbar);
  check_functor(u);
  for (ObjIndex x = 0; x < p.d->num_objects(); ++x) EXPECT_EQ(u.obj_map[x], x);
}

TEST(MapSpace, ExampleValues) {
  const Span span = example_span();
  const auto& b = *span.left_cat();
  const auto& c = *span.right_cat();
  const PushoutObject two_b{Side::B, *b.find_object("2")};
  const auto r = mapspace_report(span, {Side::C, *c.find_object("0")}, two_b);
  EXPECT_EQ(r.formula, MapSpaceFormula::CommaCToB);
  EXPECT_EQ(r.formula_components, 1u);
  EXPECT_TRUE(r.homotopy_discrete);
  EXPECT_EQ(r.agreement, Agreement::Agree);
  const auto none = mapspace_report(span, {Side::C, *c.find_object("2")}, two_b);
  EXPECT_EQ(none.formula_components, 0u);
  EXPECT_EQ(none.agreement, Agreement::Agree);
}

TEST(MapSpace, TableAgreesEverywhere) {
  const auto table = mapspace_table(example_span());
  EXPECT_EQ(table.size(), 16u);
  for (const auto& r : table) EXPECT_EQ(r.agreement, Agreement::Agree) << r.detail;
}

TEST(FourthSquare, ExampleSpan) {
  const Span span = example_span();
  const auto two = *span.left_cat()->find_object("2");
  const auto v = verify_fourth_square(span, two, two);
  EXPECT_EQ(v.verdict, SquareVerdict::Consistent) << v.detail;
  EXPECT_EQ(v.corners.back(), 1u);
  for (const auto& s : verify_fourth_square_all(span)) EXPECT_TRUE(s) << s.b0 << "," << s.b1 << " " << s.detail;
}

TEST(FourthSquare, SieveNotCertifiable) {
  // A sieve that is not Dwyer: {0, 1} in the poset with 0, 1 < 2.
  const auto b = poset({"0", "1", "2"}, {{0, 2}, {1, 2}});
  const auto a = poset({"0", "1"}, {});
  const Span span{testing::monotone(a, b, {{"0", "0"}, {"1", "1"}}), identity_functor(a)};
  EXPECT_FALSE(check_dwyer(span.left));
  EXPECT_TRUE(verify_fourth_square(span, 2, 2));
  EXPECT_TRUE(verify_fourth_square(span, 0, 1));
  try {
    verify_fourth_square(span, 0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCertifiable);
  }
}

TEST(FoldSquare, IdentityAndExample) {
  const auto c = poset({"x", "y"}, {{0, 1}});
  for (const auto& s : verify_fold_square_all(identity_span(c))) EXPECT_TRUE(s) << s.detail;
  const auto checks = verify_fold_square_all(example_span());
  EXPECT_EQ(checks.size(), 4u);
  for (const auto& s : checks) EXPECT_TRUE(s) << s.b0 << "," << s.b1 << " " << s.detail;
}

TEST(SieveUnion, EqualAndDisjoint) {
  const auto c = poset({"0", "1", "2", "3"}, {{0, 1}, {2, 3}});
  EXPECT_TRUE(sieve_union_check(c, {0, 1}, {0, 1}));
  EXPECT_TRUE(sieve_union_check(c, {0, 1}, {2}));
  EXPECT_TRUE(sieve_union_check(c, {0}, {0, 2, 3}));
  try {
    sieve_union_check(c, {1}, {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSieve);
  }
}

TEST(PushoutProduct, SquareCorner) {
  const auto i = share(ordinal(1));
  const auto r = pushout_product_check(i, {0}, i, {0});
  EXPECT_TRUE(r) << r.detail;
  EXPECT_GT(r.comparison.pairs_checked, 0u);
}

TEST(BeckChevalley, Representable) {
  const Span span = example_span();
  const auto c = span.right_cat();
  for (ObjIndex x = 0; x < c->num_objects(); ++x) {
    const auto r = verify_beck_chevalley(span, representable(c, x));
    EXPECT_TRUE(r) << r.detail;
  }
  const auto r = verify_beck_chevalley(span, constant_set_functor(c, 2));
  EXPECT_TRUE(r) << r.detail;
  // At 2 ∈ B the left side is the colimit over the comma {(1, 1<=2)}.
  EXPECT_EQ(r.sizes[1], (std::pair<std::size_t, std::size_t>{2, 2}));
}

TEST(Kan, ColimitAndLimitOfConstant) {
  const auto i = share(ordinal(1));
  const Functor to_point = testing::monotone(i, share(terminal_category()), {{"0", "*"}, {"1", "*"}});
  const auto colim = colimit_at(constant_set_functor(i, 3), to_point, 0);
  EXPECT_EQ(colim.size, 3u);
  const auto lim = limit_at(constant_set_functor(i, 3), to_point, 0);
  EXPECT_EQ(lim.size(), 3u);
  const auto rep = limit_at(representable(i, 0), to_point, 0);
  EXPECT_EQ(rep.size(), 1u);
}

}  // namespace
}  // namespace pushcat
