#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pushcat/core/constructions.hpp"
#include "pushcat/core/predicates.hpp"

namespace pushcat {
namespace {

using testing::include;
using testing::poset;

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

TEST(Category, TerminalIsValid) {
  RawCategory raw{{"*"}, {}, {}, {}};
  FinCat c = validate_category(raw);
  EXPECT_EQ(c.num_objects(), 1u);
  EXPECT_EQ(c.num_morphisms(), 1u);
  EXPECT_EQ(c.morphism_id(c.identity(0)), "id_*");
}

TEST(Category, ArrowHasThreeMorphisms) {
  RawCategory raw{{"a", "b"}, {{"f", "a", "b"}}, {}, {}};
  FinCat c = validate_category(raw);
  EXPECT_EQ(c.num_morphisms(), 3u);
  EXPECT_EQ(c.hom(0, 1).size(), 1u);
  EXPECT_TRUE(c.hom(1, 0).empty());
}

TEST(Category, NonAssociativeTableIsRejectedWithTriple) {
  // e idempotent on y, but e∘(e∘f) and (e∘e)∘f disagree.
  RawCategory raw{{"x", "y", "z"},
                  {{"f", "x", "y"}, {"f2", "x", "y"}, {"e", "y", "y"}, {"g", "y", "z"}, {"h", "x", "z"}},
                  {},
                  {{"e", "e", "e"},
                   {"e", "f", "f2"},
                   {"e", "f2", "f"},
                   {"g", "e", "g"},
                   {"g", "f", "h"},
                   {"g", "f2", "h"}}};
  try {
    validate_category(raw);
    FAIL() << "accepted a non-associative table";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonAssociative);
    EXPECT_NE(std::string(e.what()).find("(e, e, f)"), std::string::npos) << e.what();
  }
}

TEST(Category, MissingCompositeIsPartial) {
  RawCategory raw{{"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}, {"h", "a", "c"}}, {}, {}};
  EXPECT_EQ(error_of([&] { validate_category(raw); }), ErrorCode::PartialComposition);
}

TEST(Category, DanglingReference) {
  RawCategory raw{{"a"}, {{"f", "a", "nowhere"}}, {}, {}};
  EXPECT_EQ(error_of([&] { validate_category(raw); }), ErrorCode::DanglingReference);
}

TEST(Category, IdentityMustBeAnEndomorphism) {
  RawCategory raw{{"a", "b"}, {{"f", "a", "b"}}, {{"a", "f"}}, {}};
  EXPECT_EQ(error_of([&] { validate_category(raw); }), ErrorCode::MissingIdentity);
}

TEST(Category, DeclaredIdentityMustBeAUnit) {
  RawCategory raw{{"a"}, {{"e", "a", "a"}, {"i", "a", "a"}}, {{"a", "i"}}, {{"e", "e", "e"}, {"i", "e", "i"}}};
  EXPECT_EQ(error_of([&] { validate_category(raw); }), ErrorCode::MissingIdentity);
}

TEST(Category, RoundTripThroughRaw) {
  auto c = poset({"p", "q", "r"}, {{0, 1}, {0, 2}});
  FinCat again = validate_category(to_raw(*c));
  EXPECT_EQ(canonicalize(again), canonicalize(*c));
}

TEST(Functor, IdentityOnArrow) {
  auto c = share(ordinal(1));
  Functor id = validate_functor(RawFunctor{{{"0", "0"}, {"1", "1"}}, {}}, c, c);
  EXPECT_TRUE(same_tables(id, identity_functor(c)));
}

TEST(Functor, ConstantToTerminal) {
  auto c = share(ordinal(2));
  auto t = share(terminal_category());
  Functor k = validate_functor(RawFunctor{{{"0", "*"}, {"1", "*"}, {"2", "*"}}, {}}, c, t);
  for (MorIndex m : k.mor_map) EXPECT_EQ(m, 0u);
}

TEST(Functor, CompositeSentToNonCompositeIsRejected) {
  RawCategory raw{{"0", "1", "2"},
                  {{"a", "0", "1"}, {"b", "1", "2"}, {"c", "0", "2"}, {"d", "0", "2"}},
                  {},
                  {{"b", "a", "c"}}};
  auto t = share(validate_category(raw));
  auto s = share(ordinal(2));
  RawFunctor f{{{"0", "0"}, {"1", "1"}, {"2", "2"}}, {{"0<=1", "a"}, {"1<=2", "b"}, {"0<=2", "d"}}};
  EXPECT_EQ(error_of([&] { validate_functor(f, s, t); }), ErrorCode::NotFunctorial);
}

TEST(Functor, UnforcedImageMustBeGiven) {
  RawCategory raw{{"0", "2"}, {{"c", "0", "2"}, {"d", "0", "2"}}, {}, {}};
  auto t = share(validate_category(raw));
  auto s = share(ordinal(1));
  EXPECT_EQ(error_of([&] { validate_functor(RawFunctor{{{"0", "0"}, {"1", "2"}}, {}}, s, t); }),
            ErrorCode::DanglingReference);
}

TEST(FullyFaithful, Identity) {
  auto c = poset({"a", "b", "c"}, {{0, 1}, {1, 2}});
  EXPECT_TRUE(is_fully_faithful(identity_functor(c)));
}

TEST(FullyFaithful, SubposetInclusion) {
  auto b = poset({"1", "2"}, {{0, 1}});
  EXPECT_TRUE(is_fully_faithful(include(b, {"1"})));
}

TEST(FullyFaithful, CollapseToTerminalFailsOnReversePair) {
  auto c = share(ordinal(1));
  auto t = share(terminal_category());
  Functor k = validate_functor(RawFunctor{{{"0", "*"}, {"1", "*"}}, {}}, c, t);
  auto v = is_fully_faithful(k);
  EXPECT_FALSE(v);
  // Hom(1, 0) is empty but Hom(*, *) is not.
  EXPECT_EQ(v.x, 1u);
  EXPECT_EQ(v.y, 0u);
  EXPECT_EQ(v.failure, FaithfulnessFailure::NotSurjective);
}

TEST(FullyFaithful, NonInjectiveWitness) {
  RawCategory raw{{"x", "y"}, {{"u", "x", "y"}, {"v", "x", "y"}}, {}, {}};
  auto s = share(validate_category(raw));
  auto t = share(ordinal(1));
  Functor k = validate_functor(RawFunctor{{{"x", "0"}, {"y", "1"}}, {}}, s, t);
  auto v = is_fully_faithful(k);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.failure, FaithfulnessFailure::NotInjective);
}

TEST(Sieve, Examples) {
  auto b = poset({"1", "2"}, {{0, 1}});
  EXPECT_TRUE(is_sieve(include(b, {"1"})));
  auto v = is_sieve(include(b, {"2"}));
  EXPECT_FALSE(v);
  EXPECT_EQ(b->morphism_id(v.witness), "1<=2");
  EXPECT_TRUE(is_sieve(include(b, {})));
  EXPECT_TRUE(is_cosieve(include(b, {"2"})));
}

TEST(Sieve, RequiresFullyFaithful) {
  auto c = share(ordinal(1));
  auto t = share(terminal_category());
  Functor k = validate_functor(RawFunctor{{{"0", "*"}, {"1", "*"}}, {}}, c, t);
  EXPECT_EQ(error_of([&] { is_sieve(k); }), ErrorCode::NotFullyFaithful);
}

TEST(Sieve, EssentialImageUpToIsomorphism) {
  // x ≅ y, and y is a source of an arrow into the included object x.
  RawCategory raw{{"x", "y"}, {{"i", "x", "y"}, {"j", "y", "x"}}, {}, {{"j", "i", "id_x"}, {"i", "j", "id_y"}}};
  auto c = share(validate_category(raw));
  EXPECT_TRUE(is_sieve(include(c, {"x"})));
}

TEST(Dwyer, SubposetHasCounit) {
  auto b = poset({"1", "2"}, {{0, 1}});
  DwyerWitness w = is_dwyer(include(b, {"1"}));
  ASSERT_TRUE(w.counits[1].has_value());
  EXPECT_EQ(w.counits[1]->reflection, 0u);
  EXPECT_EQ(b->morphism_id(w.counits[1]->counit), "1<=2");
  EXPECT_TRUE(b->is_identity(w.counits[0]->counit));
}

TEST(Dwyer, IdentityReflectsToItself) {
  auto c = poset({"a", "b", "c"}, {{0, 1}, {0, 2}});
  DwyerWitness w = is_dwyer(identity_functor(c));
  for (ObjIndex x = 0; x < c->num_objects(); ++x) {
    ASSERT_TRUE(w.counits[x]);
    EXPECT_EQ(w.counits[x]->reflection, x);
    EXPECT_TRUE(c->is_identity(w.counits[x]->counit));
  }
}

TEST(Dwyer, CospanHasNoTerminalObject) {
  auto b = poset({"x", "y", "b"}, {{0, 2}, {1, 2}});
  auto check = check_dwyer(include(b, {"x", "y"}));
  ASSERT_FALSE(check);
  EXPECT_EQ(check.failure->code(), ErrorCode::NoTerminalObject);
  EXPECT_NE(check.failure->detail().find("(x, x<=b)"), std::string::npos) << check.failure->detail();
  EXPECT_NE(check.failure->detail().find("(y, y<=b)"), std::string::npos);
}

TEST(Dwyer, NonSieveIsReported) {
  auto b = poset({"1", "2"}, {{0, 1}});
  auto check = check_dwyer(include(b, {"2"}));
  ASSERT_FALSE(check);
  EXPECT_EQ(check.failure->code(), ErrorCode::NotSieve);
}

TEST(Dwyer, ReflectionOfMorphism) {
  auto b = poset({"a", "b1", "b2"}, {{0, 1}, {1, 2}});
  DwyerWitness w = is_dwyer(include(b, {"a"}));
  const MorIndex beta = *b->find_morphism("b1<=b2");
  const MorIndex u = w.reflect(beta);
  EXPECT_TRUE(w.functor.source->is_identity(u));
}

TEST(Opposite, TerminalAndArrow) {
  FinCat t = terminal_category();
  EXPECT_EQ(opposite(t), t);
  FinCat a = ordinal(1);
  FinCat op = opposite(a);
  const MorIndex f = *op.find_morphism("0<=1");
  EXPECT_EQ(op.object_name(op.src(f)), "1");
  EXPECT_EQ(opposite(op), a);
}

TEST(FullSubcategory, Examples) {
  auto c = share(ordinal(2));
  Subcategory all = full_subcategory(c, {0, 1, 2});
  EXPECT_EQ(*all.cat, *c);
  Subcategory none = full_subcategory(c, {});
  EXPECT_EQ(none.cat->num_objects(), 0u);
  Subcategory ends = full_subcategory(c, {0, 2});
  EXPECT_EQ(ends.cat->num_morphisms() - ends.cat->num_objects(), 1u);
  EXPECT_TRUE(is_fully_faithful(ends.inclusion));
  EXPECT_EQ(error_of([&] { full_subcategory_by_name(c, {"7"}); }), ErrorCode::UnknownObject);
}

TEST(Constructions, ProductAndCoproduct) {
  auto a = share(ordinal(1));
  FinCat sq = product(*a, *a);
  EXPECT_EQ(sq.num_objects(), 4u);
  EXPECT_EQ(sq.num_morphisms(), 9u);
  FinCat two = coproduct(*a, *a, "l.", "r.");
  EXPECT_EQ(components(two).second, 2u);
}

TEST(Constructions, ChainBound) {
  EXPECT_TRUE(is_chain_bounded(ordinal(3)));
  EXPECT_EQ(longest_chain(ordinal(3)), 3u);
  RawCategory raw{{"x"}, {{"e", "x", "x"}}, {}, {{"e", "e", "e"}}};
  EXPECT_FALSE(is_chain_bounded(validate_category(raw)));
}

}  // namespace
}  // namespace pushcat
