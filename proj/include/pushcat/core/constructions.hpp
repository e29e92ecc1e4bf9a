#ifndef PUSHCAT_CORE_CONSTRUCTIONS_HPP
#define PUSHCAT_CORE_CONSTRUCTIONS_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pushcat/core/fincat.hpp"
#include "pushcat/core/functor.hpp"

namespace pushcat {

inline FinCat empty_category() { return std::move(CategoryBuilder{}).build(); }

inline FinCat terminal_category(const std::string& name = "*") {
  CategoryBuilder b;
  b.add_identity(b.add_object(name), "id_" + name);
  return std::move(b).build();
}

/// The category generated by a reflexive, transitive relation given by its
/// generating pairs (x, y) meaning x <= y. Morphisms are named "x<=y" and
/// identities "id_x"; hom-sets have at most one element.
inline FinCat preorder_category(const std::vector<std::string>& elements,
                                const std::vector<std::pair<std::size_t, std::size_t>>& generators) {
  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (auto [x, y] : generators) le[x][y] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;

  CategoryBuilder b;
  for (const auto& e : elements) b.add_object(e);
  std::vector<std::vector<MorIndex>> arrow(n, std::vector<MorIndex>(n, kNoMorphism));
  for (std::size_t i = 0; i < n; ++i) arrow[i][i] = b.add_identity(static_cast<ObjIndex>(i), "id_" + elements[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && le[i][j])
        arrow[i][j] = b.add_morphism(elements[i] + "<=" + elements[j], static_cast<ObjIndex>(i), static_cast<ObjIndex>(j));
  std::vector<std::pair<ObjIndex, ObjIndex>> ends;
  for (std::size_t k = 0; k < b.num_morphisms(); ++k) ends.emplace_back(b.morphism(static_cast<MorIndex>(k)).src, b.morphism(static_cast<MorIndex>(k)).dst);
  b.set_composer([arrow, ends](MorIndex g, MorIndex f) { return arrow[ends[f].first][ends[g].second]; });
  return std::move(b).build(Validation::Inherited);
}

/// The ordinal [n] = {0 < 1 < ... < n}.
inline FinCat ordinal(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  for (std::size_t i = 0; i <= n; ++i) names.push_back(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) gens.emplace_back(i, i + 1);
  return preorder_category(names, gens);
}

/// Reverses every morphism. Names are kept, so opposite(opposite(C)) == C.
inline FinCat opposite(const FinCat& c) {
  CategoryBuilder b;
  for (ObjIndex x = 0; x < c.num_objects(); ++x) b.add_object(c.object_name(x));
  for (MorIndex m = 0; m < c.num_morphisms(); ++m) b.add_morphism(c.morphism_id(m), c.dst(m), c.src(m));
  for (ObjIndex x = 0; x < c.num_objects(); ++x) b.set_identity(x, c.identity(x));
  b.set_composer([&c](MorIndex g, MorIndex f) { return c.compose(f, g); });
  return std::move(b).build(Validation::Inherited);
}

inline Functor opposite(const Functor& f, const CatPtr& source_op, const CatPtr& target_op) {
  return Functor{source_op, target_op, f.obj_map, f.mor_map};
}

inline Span opposite(const Span& s) {
  auto a = share(opposite(*s.apex()));
  auto b = share(opposite(*s.left_cat()));
  auto c = share(opposite(*s.right_cat()));
  return Span{opposite(s.left, a, b), opposite(s.right, a, c)};
}

struct Subcategory {
  CatPtr cat;
  Functor inclusion;
};

/// Full subcategory on the given objects (kept in the given order; morphisms
/// keep their relative order).
inline Subcategory full_subcategory(const CatPtr& c, const std::vector<ObjIndex>& objs) {
  std::vector<ObjIndex> local(c->num_objects(), kNoObject);
  CategoryBuilder b;
  for (ObjIndex x : objs) {
    if (x >= c->num_objects()) throw Error(ErrorCode::UnknownObject, "object index out of range");
    if (local[x] != kNoObject) throw Error(ErrorCode::UnknownObject, "object listed twice: " + c->object_name(x));
    local[x] = b.add_object(c->object_name(x));
  }
  std::vector<MorIndex> kept;
  std::vector<MorIndex> local_mor(c->num_morphisms(), kNoMorphism);
  for (MorIndex m = 0; m < c->num_morphisms(); ++m) {
    const ObjIndex x = local[c->src(m)];
    const ObjIndex y = local[c->dst(m)];
    if (x == kNoObject || y == kNoObject) continue;
    local_mor[m] = b.add_morphism(c->morphism_id(m), x, y);
    kept.push_back(m);
  }
  for (ObjIndex x : objs) b.set_identity(local[x], local_mor[c->identity(x)]);
  b.set_composer([&](MorIndex g, MorIndex f) { return local_mor[c->compose(kept[g], kept[f])]; });
  auto sub = share(std::move(b).build(Validation::Inherited));
  Functor inc{sub, c, objs, kept};
  return {sub, std::move(inc)};
}

inline Subcategory full_subcategory_by_name(const CatPtr& c, const std::vector<std::string>& names) {
  std::vector<ObjIndex> objs;
  for (const auto& n : names) {
    auto x = c->find_object(n);
    if (!x) throw Error(ErrorCode::UnknownObject, "unknown object '" + n + "'");
    objs.push_back(*x);
  }
  return full_subcategory(c, objs);
}

/// C × D with objects "(c,d)" and morphisms "(f,g)".
inline FinCat product(const FinCat& c, const FinCat& d) {
  CategoryBuilder b;
  const std::size_t nd = d.num_objects();
  const std::size_t md = d.num_morphisms();
  for (ObjIndex x = 0; x < c.num_objects(); ++x)
    for (ObjIndex y = 0; y < nd; ++y) b.add_object("(" + c.object_name(x) + "," + d.object_name(y) + ")");
  for (MorIndex f = 0; f < c.num_morphisms(); ++f)
    for (MorIndex g = 0; g < md; ++g)
      b.add_morphism("(" + c.morphism_id(f) + "," + d.morphism_id(g) + ")",
                     static_cast<ObjIndex>(c.src(f) * nd + d.src(g)), static_cast<ObjIndex>(c.dst(f) * nd + d.dst(g)));
  for (ObjIndex x = 0; x < c.num_objects(); ++x)
    for (ObjIndex y = 0; y < nd; ++y)
      b.set_identity(static_cast<ObjIndex>(x * nd + y), static_cast<MorIndex>(c.identity(x) * md + d.identity(y)));
  b.set_composer([&c, &d, md](MorIndex u, MorIndex v) {
    return static_cast<MorIndex>(c.compose(u / md, v / md) * md + d.compose(u % md, v % md));
  });
  return std::move(b).build(Validation::Inherited);
}

/// Disjoint union; names are prefixed with `left_prefix` / `right_prefix`.
inline FinCat coproduct(const FinCat& c, const FinCat& d, const std::string& left_prefix = "",
                        const std::string& right_prefix = "") {
  CategoryBuilder b;
  const auto nc = static_cast<ObjIndex>(c.num_objects());
  const auto mc = static_cast<MorIndex>(c.num_morphisms());
  for (ObjIndex x = 0; x < nc; ++x) b.add_object(left_prefix + c.object_name(x));
  for (ObjIndex x = 0; x < d.num_objects(); ++x) b.add_object(right_prefix + d.object_name(x));
  for (MorIndex m = 0; m < mc; ++m) b.add_morphism(left_prefix + c.morphism_id(m), c.src(m), c.dst(m));
  for (MorIndex m = 0; m < d.num_morphisms(); ++m)
    b.add_morphism(right_prefix + d.morphism_id(m), nc + d.src(m), nc + d.dst(m));
  for (ObjIndex x = 0; x < nc; ++x) b.set_identity(x, c.identity(x));
  for (ObjIndex x = 0; x < d.num_objects(); ++x) b.set_identity(nc + x, mc + d.identity(x));
  b.set_composer([&c, &d, mc](MorIndex g, MorIndex f) {
    return g < mc ? c.compose(g, f) : mc + d.compose(g - mc, f - mc);
  });
  return std::move(b).build(Validation::Inherited);
}

/// Connected components of the underlying graph; returns a component index
/// per object and the number of components.
inline std::pair<std::vector<std::size_t>, std::size_t> components(const FinCat& c) {
  std::vector<std::size_t> parent(c.num_objects());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (MorIndex m = 0; m < c.num_morphisms(); ++m) parent[find(c.src(m))] = find(c.dst(m));
  std::vector<std::size_t> label(c.num_objects());
  std::map<std::size_t, std::size_t> ids;
  for (ObjIndex x = 0; x < c.num_objects(); ++x) {
    label[x] = ids.emplace(find(x), ids.size()).first->second;
  }
  return {label, ids.size()};
}

/// Returns the inverse of m if it is an isomorphism.
inline std::optional<MorIndex> inverse(const FinCat& c, MorIndex m) {
  for (MorIndex n : c.hom(c.dst(m), c.src(m))) {
    if (c.compose(n, m) == c.identity(c.src(m)) && c.compose(m, n) == c.identity(c.dst(m))) return n;
  }
  return std::nullopt;
}

inline bool is_isomorphism(const FinCat& c, MorIndex m) { return inverse(c, m).has_value(); }

inline std::optional<MorIndex> find_isomorphism(const FinCat& c, ObjIndex x, ObjIndex y) {
  for (MorIndex m : c.hom(x, y))
    if (is_isomorphism(c, m)) return m;
  return std::nullopt;
}

/// True iff every endomorphism and every isomorphism is an identity; then
/// nondegenerate nerve simplices are strings of non-identity morphisms and
/// vanish above the longest such chain.
inline bool is_chain_bounded(const FinCat& c) {
  for (MorIndex m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    if (c.src(m) == c.dst(m) || is_isomorphism(c, m)) return false;
  }
  return true;
}

/// Length of the longest string of composable non-identity morphisms, for a
/// chain-bounded category.
inline std::size_t longest_chain(const FinCat& c) {
  // Chain-bounded implies the non-identity arrows form a DAG on objects.
  const std::size_t n = c.num_objects();
  std::vector<std::size_t> best(n, 0);
  std::vector<int> state(n, 0);
  std::function<std::size_t(ObjIndex)> visit = [&](ObjIndex x) -> std::size_t {
    if (state[x] == 2) return best[x];
    state[x] = 1;
    std::size_t b = 0;
    for (MorIndex m : c.out(x)) {
      if (c.is_identity(m)) continue;
      b = std::max(b, 1 + visit(c.dst(m)));
    }
    state[x] = 2;
    return best[x] = b;
  };
  std::size_t result = 0;
  for (ObjIndex x = 0; x < n; ++x) result = std::max(result, visit(x));
  return result;
}

}  // namespace pushcat

#endif  // PUSHCAT_CORE_CONSTRUCTIONS_HPP
