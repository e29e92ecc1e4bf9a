#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pushcat/reedy.hpp"

namespace pushcat {
namespace {

using testing::include;
using testing::poset;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

/// c ⇄ a with s∘r = id_c and r∘s = e idempotent.
CatPtr retract() {
  RawCategory raw;
  raw.objects = {"c", "a"};
  raw.morphisms = {{"1c", "c", "c"}, {"1a", "a", "a"}, {"r", "c", "a"}, {"s", "a", "c"}, {"e", "a", "a"}};
  raw.identities = {{"c", "1c"}, {"a", "1a"}};
  raw.compose = {{"s", "r", "1c"}, {"r", "s", "e"}, {"e", "e", "e"}, {"e", "r", "r"}, {"s", "e", "s"}};
  return share(validate_category(raw));
}

/// 0 -> a1 -> 2 and 0 -> a2 -> 2 with equal composites.
CatPtr commuting_square() {
  return poset({"0", "a1", "a2", "2"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST(Complement, WholeCategory) {
  const auto b = share(ordinal(2));
  const auto w = find_complementary(identity_functor(b));
  EXPECT_EQ(w.complement->num_objects(), 0u);
  EXPECT_TRUE(is_reedy_extension(identity_functor(b)));
}

TEST(Complement, MiddleOfTwo) {
  const auto b = share(ordinal(2));
  const auto w = find_complementary(include(b, {"1"}));
  ASSERT_EQ(w.complement->num_objects(), 2u);
  EXPECT_EQ(w.complement->object_name(0), "0");
  EXPECT_EQ(w.complement->object_name(1), "2");
  EXPECT_EQ(w.complement->num_morphisms(), 2u);  // identities only
  const auto v = is_reedy_extension(include(b, {"1"}));
  ASSERT_TRUE(v) << v.detail;
  const auto& p = v.witness.pairs[1];  // (0, 2)
  EXPECT_EQ(p.components, 1u);
  EXPECT_EQ(p.hom_c, 0u);
  EXPECT_EQ(p.hom_b, 1u);
  EXPECT_TRUE(p.contractible[0]);
}

TEST(Complement, RetractIdentityFactors) {
  const auto b = retract();
  EXPECT_EQ(code_of([&] { find_complementary(include(b, {"a"})); }), ErrorCode::IdentityFactors);
}

TEST(Complement, TwoComponentsOverOneMorphism) {
  const auto b = commuting_square();
  EXPECT_EQ(code_of([&] { find_complementary(include(b, {"a1", "a2"})); }), ErrorCode::NotMono);
  // With the comparison a1 -> a2 in A the factorizations connect.
  const auto b2 = poset({"0", "a1", "a2", "2"}, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(is_reedy_extension(include(b2, {"a1", "a2"})));
}

TEST(Complement, CompositionEscapes) {
  // x -> y -> z with the composite factoring through a, but neither factor.
  RawCategory raw;
  raw.objects = {"x", "y", "z", "a"};
  raw.morphisms = {{"1x", "x", "x"}, {"1y", "y", "y"}, {"1z", "z", "z"}, {"1a", "a", "a"},
                   {"f", "x", "y"},  {"g", "y", "z"},  {"p", "x", "a"},  {"q", "a", "z"},
                   {"h", "x", "z"}};
  raw.identities = {{"x", "1x"}, {"y", "1y"}, {"z", "1z"}, {"a", "1a"}};
  raw.compose = {{"g", "f", "h"}, {"q", "p", "h"}};
  const auto b = share(validate_category(raw));
  EXPECT_EQ(code_of([&] { find_complementary(include(b, {"a"})); }), ErrorCode::CompositionEscapes);
}

TEST(Latching, PointComma) {
  const auto b = poset({"a", "c"}, {{0, 1}});
  const auto w = find_complementary(include(b, {"a"}));
  const auto a = w.inclusion.source;
  SetFunctor f{a, {3}, {{0, 1, 2}}};
  EXPECT_EQ(latching(f, w, 0).size, 3u);
  EXPECT_EQ(matching(f, w, 0).size(), 1u);  // no morphisms c -> A
}

TEST(Latching, EmptyApex) {
  const auto b = share(ordinal(1));
  const auto empty = share(empty_category());
  const Functor i{empty, b, {}, {}};
  const auto w = find_complementary(i);
  const SetFunctor f{empty, {}, {}};
  EXPECT_EQ(latching(f, w, 0).size, 0u);
  EXPECT_EQ(matching(f, w, 0).size(), 1u);
}

TEST(Latching, ConstantSingletonCountsComponents) {
  // c receives arrows from two unrelated objects of A.
  const auto b = poset({"a1", "a2", "c"}, {{0, 2}, {1, 2}});
  const auto w = find_complementary(include(b, {"a1", "a2"}));
  EXPECT_EQ(latching(constant_set_functor(w.inclusion.source, 1), w, 0).size, 2u);
}

TEST(Matching, PointComma) {
  const auto b = poset({"c", "a"}, {{0, 1}});
  const auto w = find_complementary(include(b, {"a"}));
  const SetFunctor f{w.inclusion.source, {2}, {{0, 1}}};
  EXPECT_EQ(matching(f, w, 0).size(), 2u);
  EXPECT_EQ(latching(f, w, 0).size, 0u);
  const auto b2 = poset({"c", "a1", "a2"}, {{0, 1}, {0, 2}});
  const auto w2 = find_complementary(include(b2, {"a1", "a2"}));
  // The comma is discrete on two objects, so the limit is a product.
  EXPECT_EQ(matching(constant_set_functor(w2.inclusion.source, 1), w2, 0).size(), 1u);
  EXPECT_EQ(matching(constant_set_functor(w2.inclusion.source, 2), w2, 0).size(), 4u);
}

TEST(Reconstruct, ArrowFromLambda) {
  const auto b = share(ordinal(1));
  const auto w = find_complementary(include(b, {"0"}));
  const ReedyData data{SetFunctor{w.inclusion.source, {2}, {{0, 1}}}, SetFunctor{w.complement, {3}, {{0, 1, 2}}},
                       {{2, 0}}, {{0, 0, 0}}};
  const SetFunctor x = reconstruct_functor(data, w);
  EXPECT_EQ(x.sizes, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(x.maps[*b->find_morphism("0<=1")], (std::vector<std::size_t>{2, 0}));
  const ReedyData back = restrict_functor(x, w);
  EXPECT_EQ(back.lambda, data.lambda);
  EXPECT_EQ(back.mu, data.mu);
}

TEST(Reconstruct, EmptyTargetIsMismatch) {
  const auto b = share(ordinal(1));
  const auto w = find_complementary(include(b, {"0"}));
  const ReedyData data{SetFunctor{w.inclusion.source, {1}, {{0}}}, SetFunctor{w.complement, {0}, {{}}}, {{0}}, {{}}};
  EXPECT_EQ(code_of([&] { reconstruct_functor(data, w); }), ErrorCode::CanonicalMapMismatch);
}

TEST(Reconstruct, RoundTripOnTwo) {
  const auto b = share(ordinal(2));
  const auto w = find_complementary(include(b, {"1"}));
  Budget budget;
  std::size_t seen = 0;
  enumerate_set_functors(b, 2, budget, [&](const SetFunctor& x) {
    ++seen;
    EXPECT_EQ(reconstruct_functor(restrict_functor(x, w), w), x);
  });
  EXPECT_EQ(seen, 47u);
}

TEST(ReedySquare, ArrowWithSourceInA) {
  const auto b = share(ordinal(1));
  const auto v = verify_reedy_square(include(b, {"0"}), 2);
  ASSERT_TRUE(v) << v.detail;
  EXPECT_EQ(v.functors, 11u);
  EXPECT_EQ(v.data, 11u);
  EXPECT_EQ(v.functor_classes, 8u);
  EXPECT_EQ(v.data_classes, 8u);
  EXPECT_EQ(v.functor_cardinality, Rational(6));
  EXPECT_EQ(v.data_cardinality, Rational(6));
}

TEST(ReedySquare, MiddleOfTwo) {
  const auto b = share(ordinal(2));
  const auto v = verify_reedy_square(include(b, {"1"}), 2);
  ASSERT_TRUE(v) << v.detail;
  EXPECT_EQ(v.functors, 47u);
  EXPECT_EQ(v.functor_classes, 21u);
  EXPECT_EQ(v.data_classes, 21u);
  EXPECT_EQ(v.data_cardinality, Rational(15));
}

TEST(ReedySquare, WholeCategory) {
  const auto b = share(ordinal(1));
  const auto v = verify_reedy_square(identity_functor(b), 2);
  ASSERT_TRUE(v) << v.detail;
  EXPECT_EQ(v.functor_cardinality, Rational(6));
}

TEST(ReedySquare, BudgetGuard) {
  const auto b = share(ordinal(2));
  EXPECT_EQ(code_of([&] { verify_reedy_square(include(b, {"1"}), 2, 4, 50); }), ErrorCode::ExplosionGuard);
}

TEST(ReedyStructure, OrdinalTwo) {
  const auto c = share(ordinal(2));
  std::vector<bool> l(c->num_morphisms());
  for (MorIndex m = 0; m < c->num_morphisms(); ++m) l[m] = c->is_identity(m);
  const std::vector<bool> r(c->num_morphisms(), true);
  const auto v = check_reedy_structure(c, {0, 1, 2}, l, r, FactorizationOrder::LThenR);
  ASSERT_TRUE(v);
  ASSERT_EQ(v.levels.size(), 2u);
  for (const auto& level : v.levels) EXPECT_TRUE(level);
}

TEST(ReedyStructure, ConstantDegreeNotConservative) {
  const auto c = share(ordinal(1));
  std::vector<bool> l(c->num_morphisms());
  for (MorIndex m = 0; m < c->num_morphisms(); ++m) l[m] = c->is_identity(m);
  const std::vector<bool> r(c->num_morphisms(), true);
  EXPECT_EQ(code_of([&] { check_reedy_structure(c, {0, 0}, l, r, FactorizationOrder::LThenR); }),
            ErrorCode::NotConservative);
}

TEST(ReedyStructure, Terminal) {
  const auto c = share(terminal_category());
  EXPECT_TRUE(check_reedy_structure(c, {0}, {true}, {true}, FactorizationOrder::RThenL));
}

TEST(ReedyStructure, MissingFactorization) {
  const auto c = share(ordinal(1));
  std::vector<bool> only_ids(c->num_morphisms());
  for (MorIndex m = 0; m < c->num_morphisms(); ++m) only_ids[m] = c->is_identity(m);
  EXPECT_EQ(code_of([&] { check_reedy_structure(c, {0, 1}, only_ids, only_ids, FactorizationOrder::LThenR); }),
            ErrorCode::NoFactorization);
}

}  // namespace
}  // namespace pushcat
