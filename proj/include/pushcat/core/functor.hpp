#ifndef PUSHCAT_CORE_FUNCTOR_HPP
#define PUSHCAT_CORE_FUNCTOR_HPP

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pushcat/core/fincat.hpp"

namespace pushcat {

/// A functor between finite categories, stored as object and morphism tables.
struct Functor {
  CatPtr source;
  CatPtr target;
  std::vector<ObjIndex> obj_map;
  std::vector<MorIndex> mor_map;

  ObjIndex operator()(ObjIndex x) const { return obj_map[x]; }
  MorIndex on_morphism(MorIndex m) const { return mor_map[m]; }
};

/// The span B <- A -> C with `left` : A -> B and `right` : A -> C.
struct Span {
  Functor left;
  Functor right;

  const CatPtr& apex() const { return left.source; }
  const CatPtr& left_cat() const { return left.target; }
  const CatPtr& right_cat() const { return right.target; }
};

/// Exhaustive functoriality scan; throws NotFunctorial with a witness.
inline void check_functor(const Functor& f) {
  const FinCat& s = *f.source;
  const FinCat& t = *f.target;
  if (f.obj_map.size() != s.num_objects() || f.mor_map.size() != s.num_morphisms()) {
    throw Error(ErrorCode::DanglingReference, "functor tables do not cover the source category");
  }
  for (ObjIndex x : f.obj_map) {
    if (x >= t.num_objects()) throw Error(ErrorCode::DanglingReference, "functor maps to an unknown object");
  }
  for (MorIndex m = 0; m < s.num_morphisms(); ++m) {
    const MorIndex fm = f.mor_map[m];
    if (fm >= t.num_morphisms()) throw Error(ErrorCode::DanglingReference, "functor maps to an unknown morphism");
    if (t.src(fm) != f.obj_map[s.src(m)] || t.dst(fm) != f.obj_map[s.dst(m)]) {
      throw Error(ErrorCode::NotFunctorial, "image of " + s.morphism_id(m) + " has the wrong endpoints");
    }
  }
  for (ObjIndex x = 0; x < s.num_objects(); ++x) {
    if (f.mor_map[s.identity(x)] != t.identity(f.obj_map[x])) {
      throw Error(ErrorCode::NotFunctorial, "identity of " + s.object_name(x) + " is not preserved");
    }
  }
  for (MorIndex a = 0; a < s.num_morphisms(); ++a) {
    for (MorIndex b : s.out(s.dst(a))) {
      if (f.mor_map[s.compose(b, a)] != t.compose(f.mor_map[b], f.mor_map[a])) {
        throw Error(ErrorCode::NotFunctorial, "F(" + s.morphism_id(b) + "∘" + s.morphism_id(a) +
                                                  ") != F(" + s.morphism_id(b) + ")∘F(" + s.morphism_id(a) + ")");
      }
    }
  }
}

struct RawFunctor {
  /// source object -> target object
  std::vector<std::pair<std::string, std::string>> objects;
  /// source morphism -> target morphism. Identities may be omitted, as may
  /// any morphism whose target hom-set has exactly one element.
  std::vector<std::pair<std::string, std::string>> morphisms;
};

inline Functor validate_functor(const RawFunctor& raw, CatPtr source, CatPtr target) {
  Functor f{source, target, std::vector<ObjIndex>(source->num_objects(), kNoObject),
            std::vector<MorIndex>(source->num_morphisms(), kNoMorphism)};
  for (const auto& [a, b] : raw.objects) {
    auto x = source->find_object(a);
    auto y = target->find_object(b);
    if (!x || !y) throw Error(ErrorCode::DanglingReference, "functor object entry '" + a + "' -> '" + b + "'");
    f.obj_map[*x] = *y;
  }
  for (ObjIndex x = 0; x < source->num_objects(); ++x) {
    if (f.obj_map[x] == kNoObject) {
      throw Error(ErrorCode::DanglingReference, "functor does not map object '" + source->object_name(x) + "'");
    }
  }
  for (const auto& [a, b] : raw.morphisms) {
    auto m = source->find_morphism(a);
    auto n = target->find_morphism(b);
    if (!m || !n) throw Error(ErrorCode::DanglingReference, "functor morphism entry '" + a + "' -> '" + b + "'");
    f.mor_map[*m] = *n;
  }
  for (MorIndex m = 0; m < source->num_morphisms(); ++m) {
    if (f.mor_map[m] != kNoMorphism) continue;
    const auto hom = target->hom(f.obj_map[source->src(m)], f.obj_map[source->dst(m)]);
    if (source->is_identity(m)) {
      f.mor_map[m] = target->identity(f.obj_map[source->src(m)]);
    } else if (hom.size() == 1) {
      f.mor_map[m] = hom[0];
    } else {
      throw Error(ErrorCode::DanglingReference,
                  "functor does not map morphism '" + source->morphism_id(m) + "' and its image is not forced");
    }
  }
  check_functor(f);
  return f;
}

inline Functor identity_functor(const CatPtr& c) {
  Functor f{c, c, std::vector<ObjIndex>(c->num_objects()), std::vector<MorIndex>(c->num_morphisms())};
  for (ObjIndex x = 0; x < c->num_objects(); ++x) f.obj_map[x] = x;
  for (MorIndex m = 0; m < c->num_morphisms(); ++m) f.mor_map[m] = m;
  return f;
}

/// g ∘ f
inline Functor compose(const Functor& g, const Functor& f) {
  if (f.target.get() != g.source.get() && !(*f.target == *g.source)) {
    throw Error(ErrorCode::MismatchedTarget, "functors are not composable");
  }
  Functor r{f.source, g.target, std::vector<ObjIndex>(f.obj_map.size()), std::vector<MorIndex>(f.mor_map.size())};
  for (std::size_t x = 0; x < f.obj_map.size(); ++x) r.obj_map[x] = g.obj_map[f.obj_map[x]];
  for (std::size_t m = 0; m < f.mor_map.size(); ++m) r.mor_map[m] = g.mor_map[f.mor_map[m]];
  return r;
}

inline bool same_tables(const Functor& a, const Functor& b) {
  return a.obj_map == b.obj_map && a.mor_map == b.mor_map;
}

inline RawFunctor to_raw(const Functor& f) {
  RawFunctor raw;
  for (ObjIndex x = 0; x < f.source->num_objects(); ++x) {
    raw.objects.emplace_back(f.source->object_name(x), f.target->object_name(f.obj_map[x]));
  }
  for (MorIndex m = 0; m < f.source->num_morphisms(); ++m) {
    raw.morphisms.emplace_back(f.source->morphism_id(m), f.target->morphism_id(f.mor_map[m]));
  }
  std::sort(raw.objects.begin(), raw.objects.end());
  std::sort(raw.morphisms.begin(), raw.morphisms.end());
  return raw;
}

}  // namespace pushcat

#endif  // PUSHCAT_CORE_FUNCTOR_HPP
