#ifndef PUSHCAT_CORE_SET_FUNCTOR_HPP
#define PUSHCAT_CORE_SET_FUNCTOR_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pushcat/core/fincat.hpp"

namespace pushcat {

/// A functor from a finite category to finite sets. The set at object x is
/// {0, ..., sizes[x] - 1}; maps[m][i] is the image of i under m.
struct SetFunctor {
  CatPtr source;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::size_t>> maps;

  std::size_t apply(MorIndex m, std::size_t element) const { return maps[m][element]; }

  friend bool operator==(const SetFunctor& a, const SetFunctor& b) {
    return a.sizes == b.sizes && a.maps == b.maps;
  }
};

inline void check_set_functor(const SetFunctor& f) {
  const FinCat& c = *f.source;
  if (f.sizes.size() != c.num_objects() || f.maps.size() != c.num_morphisms()) {
    throw Error(ErrorCode::DanglingReference, "set functor tables do not cover the source category");
  }
  for (MorIndex m = 0; m < c.num_morphisms(); ++m) {
    const auto& map = f.maps[m];
    if (map.size() != f.sizes[c.src(m)]) {
      throw Error(ErrorCode::NotFunctorial, "map for " + c.morphism_id(m) + " has the wrong domain size");
    }
    for (std::size_t v : map) {
      if (v >= f.sizes[c.dst(m)]) throw Error(ErrorCode::NotFunctorial, "map for " + c.morphism_id(m) + " leaves its codomain");
    }
  }
  for (ObjIndex x = 0; x < c.num_objects(); ++x) {
    const auto& map = f.maps[c.identity(x)];
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (map[i] != i) throw Error(ErrorCode::NotFunctorial, "identity of " + c.object_name(x) + " acts nontrivially");
    }
  }
  for (MorIndex a = 0; a < c.num_morphisms(); ++a) {
    for (MorIndex b : c.out(c.dst(a))) {
      const auto& ba = f.maps[c.compose(b, a)];
      for (std::size_t i = 0; i < f.sizes[c.src(a)]; ++i) {
        if (ba[i] != f.maps[b][f.maps[a][i]]) {
          throw Error(ErrorCode::NotFunctorial,
                      "composite " + c.morphism_id(b) + "∘" + c.morphism_id(a) + " is not respected");
        }
      }
    }
  }
}

/// Constant functor with value a set of the given size.
inline SetFunctor constant_set_functor(const CatPtr& c, std::size_t size) {
  SetFunctor f{c, std::vector<std::size_t>(c->num_objects(), size), {}};
  std::vector<std::size_t> id(size);
  for (std::size_t i = 0; i < size; ++i) id[i] = i;
  f.maps.assign(c->num_morphisms(), id);
  return f;
}

/// Hom(x, -), with Hom(x, y) enumerated in the order of FinCat::hom.
inline SetFunctor representable(const CatPtr& c, ObjIndex x) {
  SetFunctor f{c, {}, {}};
  for (ObjIndex y = 0; y < c->num_objects(); ++y) f.sizes.push_back(c->hom(x, y).size());
  std::vector<std::size_t> pos(c->num_morphisms(), 0);
  for (ObjIndex y = 0; y < c->num_objects(); ++y) {
    const auto hom = c->hom(x, y);
    for (std::size_t i = 0; i < hom.size(); ++i) pos[hom[i]] = i;
  }
  for (MorIndex m = 0; m < c->num_morphisms(); ++m) {
    const auto hom = c->hom(x, c->src(m));
    std::vector<std::size_t> map;
    for (MorIndex h : hom) map.push_back(pos[c->compose(m, h)]);
    f.maps.push_back(std::move(map));
  }
  return f;
}

}  // namespace pushcat

#endif  // PUSHCAT_CORE_SET_FUNCTOR_HPP
