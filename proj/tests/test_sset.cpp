#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pushcat/sset.hpp"

namespace pushcat {
namespace {

using testing::example_span;
using testing::poset;

CatPtr parallel_pair() {
  return share(validate_category(RawCategory{{"x", "y"}, {{"u", "x", "y"}, {"v", "x", "y"}}, {}, {}}));
}

std::shared_ptr<const TruncatedSSet> shared(TruncatedSSet x) {
  return std::make_shared<const TruncatedSSet>(std::move(x));
}

TEST(Nerve, Terminal) {
  TruncatedSSet n = nerve(share(terminal_category()), 3);
  EXPECT_EQ(n.count, (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(n.nondegenerate_counts(), (std::vector<std::size_t>{1, 0, 0, 0}));
  check_simplicial_identities(n);
}

TEST(Nerve, Arrow) {
  TruncatedSSet n = nerve(share(ordinal(1)), 2);
  EXPECT_EQ(n.nondegenerate_counts(), (std::vector<std::size_t>{2, 1, 0}));
  check_simplicial_identities(n);
}

TEST(Nerve, TwoSimplex) {
  TruncatedSSet n = nerve(share(ordinal(2)), 2);
  EXPECT_EQ(n.nondegenerate_counts(), (std::vector<std::size_t>{3, 3, 1}));
  check_simplicial_identities(n);
  EXPECT_EQ(n.top_nondegenerate, 2u);
}

TEST(Nerve, IdempotentHasUnboundedSimplices) {
  auto c = share(validate_category(RawCategory{{"x"}, {{"e", "x", "x"}}, {}, {{"e", "e", "e"}}}));
  TruncatedSSet n = nerve(c, 4);
  check_simplicial_identities(n);
  EXPECT_EQ(n.nondegenerate_counts(), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_FALSE(n.top_nondegenerate.has_value());
  // The nerve of a category with an idempotent is contractible.
  HomologyReport h = homology(n);
  EXPECT_EQ(h.groups[0].free_rank, 1u);
  for (std::size_t k = 1; k < h.groups.size(); ++k) EXPECT_TRUE(h.groups[k].is_zero());
  EXPECT_FALSE(h.complete);
}

TEST(Nerve, VertexAccessor) {
  auto c = share(ordinal(3));
  Nerve nv = nerve_with_index(c, 3);
  const SimplexIndex top = nv.index[3].at(Tuple{*c->find_morphism("0<=1"), *c->find_morphism("1<=2"),
                                                *c->find_morphism("2<=3")});
  for (std::size_t i = 0; i <= 3; ++i) EXPECT_EQ(nv.sset->vertex(3, top, i), i);
}

TEST(Nerve, FunctorInducesSimplicialMap) {
  auto b = poset({"1", "2"}, {{0, 1}});
  Functor inc = testing::include(b, {"1"});
  Nerve src = nerve_with_index(inc.source, 3);
  Nerve tgt = nerve_with_index(b, 3);
  check_simplicial_map(nerve_map(inc, src, tgt));
}

TEST(Pi0, Examples) {
  EXPECT_EQ(pi0(discrete_sset(1, 1)).count, 1u);
  EXPECT_EQ(pi0(discrete_sset(2, 1)).count, 2u);
  Span s = example_span();
  CommaCat one = comma_triple(s, 1, 0, Orientation::CToB);
  EXPECT_EQ(pi0(nerve(one.cat, 1)).count, 1u);
  try {
    pi0(discrete_sset(2, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationTooLow);
  }
}

TEST(Homology, Point) {
  HomologyReport h = homology(discrete_sset(1, 4));
  ASSERT_EQ(h.groups.size(), 4u);
  EXPECT_EQ(h.groups[0].free_rank, 1u);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_TRUE(h.groups[k].is_zero());
  EXPECT_TRUE(h.complete);
}

TEST(Homology, ParallelArrowsIsACircle) {
  TruncatedSSet n = nerve(parallel_pair(), 3);
  EXPECT_EQ(n.nondegenerate_counts(), (std::vector<std::size_t>{2, 2, 0, 0}));
  HomologyReport h = homology(n);
  EXPECT_EQ(h.groups[0].free_rank, 1u);
  EXPECT_EQ(h.groups[1].free_rank, 1u);
  EXPECT_TRUE(h.groups[1].torsion.empty());
  EXPECT_TRUE(h.groups[2].is_zero());
}

TEST(Homology, ThreePoints) {
  EXPECT_EQ(homology(discrete_sset(3, 2)).groups[0].free_rank, 3u);
}

TEST(Homology, EulerCharacteristicMatchesBetti) {
  for (std::size_t n = 0; n <= 3; ++n) {
    TruncatedSSet x = nerve(share(ordinal(n)), 5);
    HomologyReport h = homology(x);
    long long alt = 0;
    for (std::size_t k = 0; k < h.groups.size(); ++k)
      alt += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(h.groups[k].free_rank);
    EXPECT_EQ(alt, euler_characteristic(x));
  }
}

TEST(Smith, InvariantFactors) {
  SparseMatrix m(2, 2);
  m.add(0, 0, 2);
  m.add(0, 1, 4);
  m.add(1, 0, 6);
  m.add(1, 1, 8);
  EXPECT_EQ(invariant_factors(m), (std::vector<BigInt>{2, 4}));
  SparseMatrix d(3, 3);
  d.add(0, 0, 2);
  d.add(1, 1, 3);
  d.add(2, 2, 1);
  EXPECT_EQ(invariant_factors(d), (std::vector<BigInt>{1, 1, 6}));
  SparseMatrix z(2, 3);
  EXPECT_TRUE(invariant_factors(z).empty());
}

TEST(Smith, LargeEntriesFallBackToBigIntegers) {
  SparseMatrix m(2, 2);
  const std::int64_t big = std::int64_t{1} << 40;
  m.add(0, 0, 1);
  m.add(0, 1, big);
  m.add(1, 0, big);
  m.add(1, 1, 1);
  // det = 1 - 2^80
  const BigInt det = BigInt(1) - BigInt(big) * BigInt(big);
  EXPECT_EQ(invariant_factors(m), (std::vector<BigInt>{1, abs(det)}));
}

TEST(Homology, GroupOfOrderTwoHasTorsion) {
  // B(Z/2) = RP^∞.
  auto c = share(validate_category(RawCategory{{"x"}, {{"e", "x", "x"}}, {}, {{"e", "e", "id_x"}}}));
  HomologyReport h = homology(nerve(c, 4));
  EXPECT_EQ(h.groups[0].free_rank, 1u);
  EXPECT_EQ(h.groups[1].free_rank, 0u);
  EXPECT_EQ(h.groups[1].torsion, (std::vector<BigInt>{2}));
  EXPECT_TRUE(h.groups[2].is_zero());
  EXPECT_EQ(h.groups[3].torsion, (std::vector<BigInt>{2}));
  EXPECT_EQ(to_string(h.groups[1]), "Z/2");
}

TEST(Cylinder, IdentityLegsRecoverX) {
  auto x = shared(nerve(parallel_pair(), 3));
  SimplicialMap id{x, x, {}};
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<SimplexIndex> m(x->count[n]);
    for (SimplexIndex s = 0; s < m.size(); ++s) m[s] = s;
    id.maps.push_back(m);
  }
  TruncatedSSet w = double_mapping_cylinder(id, id);
  check_simplicial_identities(w);
  EXPECT_EQ(homology(w), homology(*x));
}

TEST(Cylinder, SuspensionOfTwoPointsIsACircle) {
  auto s0 = shared(discrete_sset(2, 3));
  auto pt = shared(discrete_sset(1, 3));
  SimplicialMap f = map_to_discrete(s0, pt, {0, 0});
  TruncatedSSet w = double_mapping_cylinder(f, f);
  check_simplicial_identities(w);
  HomologyReport h = homology(w);
  EXPECT_EQ(h.groups[0].free_rank, 1u);
  EXPECT_EQ(h.groups[1].free_rank, 1u);
  EXPECT_TRUE(h.groups[2].is_zero());
  EXPECT_TRUE(h.complete);
}

TEST(Cylinder, EmptySourceIsDisjointUnion) {
  auto empty = shared(discrete_sset(0, 2));
  auto y = shared(nerve(share(ordinal(1)), 2));
  auto z = shared(discrete_sset(2, 2));
  SimplicialMap f{empty, y, {{}, {}, {}}};
  SimplicialMap g{empty, z, {{}, {}, {}}};
  TruncatedSSet w = double_mapping_cylinder(f, g);
  check_simplicial_identities(w);
  EXPECT_EQ(homology(w).groups[0].free_rank, 3u);
}

TEST(Cylinder, RejectsNonSimplicialMap) {
  auto a = shared(nerve(share(ordinal(1)), 2));
  auto two = shared(discrete_sset(2, 2));
  try {
    map_to_discrete(a, two, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSimplicial);
  }
}

TEST(Contractible, Examples) {
  EXPECT_TRUE(is_weakly_contractible_up_to(discrete_sset(1, 3)));
  auto circle = is_weakly_contractible_up_to(nerve(parallel_pair(), 3));
  EXPECT_FALSE(circle);
  EXPECT_EQ(circle.h1.free_rank, 1u);
  EXPECT_FALSE(is_weakly_contractible_up_to(discrete_sset(0, 2)));
  auto cone = poset({"a", "b", "c", "t"}, {{0, 3}, {1, 3}, {2, 3}});
  EXPECT_TRUE(is_weakly_contractible_up_to(nerve(cone, 4)));
  try {
    is_weakly_contractible_up_to(discrete_sset(1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TruncationTooLow);
  }
}

}  // namespace
}  // namespace pushcat
