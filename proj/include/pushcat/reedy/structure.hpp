#ifndef PUSHCAT_REEDY_STRUCTURE_HPP
#define PUSHCAT_REEDY_STRUCTURE_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "pushcat/reedy/complement.hpp"

namespace pushcat {

/// Order of the factors: LThenR means f = r ∘ l, RThenL means f = l ∘ r.
enum class FactorizationOrder { LThenR, RThenL };

struct ReedyStructureVerdict {
  bool holds = false;
  std::size_t max_degree = 0;
  /// One entry per level n >= 1: the inclusion C_{<=n-1} -> C_{<=n}.
  std::vector<ReedyVerdict> levels;

  explicit operator bool() const { return holds; }
};

namespace detail {

inline std::string arrow(const FinCat& c, MorIndex m) {
  return c.morphism_id(m) + " : " + c.object_name(c.src(m)) + " -> " + c.object_name(c.dst(m));
}

}  // namespace detail

/// Checks that (L, R) is a factorization system in the given order, that the
/// degree is conservative on L^op and on R, and that every truncation
/// inclusion is a Reedy extension. Throws NoFactorization, NotConservative or
/// TruncationNotReedy with a witness.
inline ReedyStructureVerdict check_reedy_structure(const CatPtr& cp, const std::vector<std::size_t>& degree,
                                                   const std::vector<bool>& l, const std::vector<bool>& r,
                                                   FactorizationOrder order, std::size_t truncation = 4) {
  const FinCat& c = *cp;
  if (degree.size() != c.num_objects() || l.size() != c.num_morphisms() || r.size() != c.num_morphisms()) {
    throw Error(ErrorCode::DanglingReference, "degree or morphism classes do not cover the category");
  }
  for (MorIndex m = 0; m < c.num_morphisms(); ++m) {
    if (is_isomorphism(c, m) && (!l[m] || !r[m])) {
      throw Error(ErrorCode::NoFactorization, "isomorphism " + detail::arrow(c, m) + " missing from L or R");
    }
  }
  for (MorIndex f = 0; f < c.num_morphisms(); ++f)
    for (MorIndex g : c.out(c.dst(f))) {
      const MorIndex gf = c.compose(g, f);
      if ((l[f] && l[g] && !l[gf]) || (r[f] && r[g] && !r[gf])) {
        throw Error(ErrorCode::NoFactorization, "class not closed under " + c.morphism_id(g) + "∘" + c.morphism_id(f));
      }
    }

  // Factorizations exist and are unique up to a unique comparison iso.
  const bool l_first = order == FactorizationOrder::LThenR;
  for (MorIndex m = 0; m < c.num_morphisms(); ++m) {
    std::vector<std::pair<MorIndex, MorIndex>> facts;  // (first, second)
    for (MorIndex first : c.out(c.src(m)))
      for (MorIndex second : c.out(c.dst(first))) {
        if (c.compose(second, first) != m) continue;
        if (l_first ? (l[first] && r[second]) : (r[first] && l[second])) facts.emplace_back(first, second);
      }
    if (facts.empty()) throw Error(ErrorCode::NoFactorization, "no factorization of " + detail::arrow(c, m));
    const auto [f0, s0] = facts.front();
    for (const auto& [f1, s1] : facts) {
      std::size_t comparisons = 0;
      for (MorIndex theta : c.hom(c.dst(f0), c.dst(f1))) {
        if (is_isomorphism(c, theta) && c.compose(theta, f0) == f1 && c.compose(s1, theta) == s0) ++comparisons;
      }
      if (comparisons != 1) {
        throw Error(ErrorCode::NoFactorization, "factorizations of " + detail::arrow(c, m) + " through " +
                                                    c.object_name(c.dst(f0)) + " and " + c.object_name(c.dst(f1)) +
                                                    " are not uniquely isomorphic");
      }
    }
  }

  for (MorIndex m = 0; m < c.num_morphisms(); ++m) {
    const std::size_t ds = degree[c.src(m)];
    const std::size_t dt = degree[c.dst(m)];
    const bool iso = is_isomorphism(c, m);
    if (iso && ds != dt) throw Error(ErrorCode::NotConservative, "degree differs across " + detail::arrow(c, m));
    if (iso) continue;
    if (r[m] && ds >= dt) throw Error(ErrorCode::NotConservative, "R-morphism " + detail::arrow(c, m) + " does not raise degree");
    if (l[m] && dt >= ds) throw Error(ErrorCode::NotConservative, "L-morphism " + detail::arrow(c, m) + " does not lower degree");
  }

  ReedyStructureVerdict v;
  v.max_degree = c.num_objects() == 0 ? 0 : *std::max_element(degree.begin(), degree.end());
  for (std::size_t n = 1; n <= v.max_degree; ++n) {
    std::vector<ObjIndex> below;
    std::vector<ObjIndex> upto;
    for (ObjIndex x = 0; x < c.num_objects(); ++x) {
      if (degree[x] < n) below.push_back(x);
      if (degree[x] <= n) upto.push_back(x);
    }
    const Subcategory small = full_subcategory(cp, below);
    const Subcategory big = full_subcategory(cp, upto);
    std::vector<ObjIndex> position(c.num_objects(), kNoObject);
    std::vector<MorIndex> mor_position(c.num_morphisms(), kNoMorphism);
    for (ObjIndex x = 0; x < upto.size(); ++x) position[upto[x]] = x;
    for (MorIndex m = 0; m < big.inclusion.mor_map.size(); ++m) mor_position[big.inclusion.mor_map[m]] = m;
    Functor inc{small.cat, big.cat, {}, {}};
    for (ObjIndex x : small.inclusion.obj_map) inc.obj_map.push_back(position[x]);
    for (MorIndex m : small.inclusion.mor_map) inc.mor_map.push_back(mor_position[m]);
    ReedyVerdict level;
    try {
      level = is_reedy_extension(inc, truncation);
    } catch (const Error& e) {
      throw Error(ErrorCode::TruncationNotReedy, "level " + std::to_string(n) + ": " + e.detail());
    }
    if (!level) throw Error(ErrorCode::TruncationNotReedy, "level " + std::to_string(n) + ": " + level.detail);
    v.levels.push_back(std::move(level));
  }
  v.holds = true;
  return v;
}

}  // namespace pushcat

#endif  // PUSHCAT_REEDY_STRUCTURE_HPP
