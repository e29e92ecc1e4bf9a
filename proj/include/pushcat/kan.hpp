#ifndef PUSHCAT_KAN_HPP
#define PUSHCAT_KAN_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "pushcat/comma.hpp"

namespace pushcat {

/// F ∘ h.
inline SetFunctor precompose(const SetFunctor& f, const Functor& h) {
  SetFunctor out{h.source, {}, {}};
  for (ObjIndex x = 0; x < h.source->num_objects(); ++x) out.sizes.push_back(f.sizes[h.obj_map[x]]);
  for (MorIndex m = 0; m < h.source->num_morphisms(); ++m) out.maps.push_back(f.maps[h.mor_map[m]]);
  return out;
}

/// The colimit of G over A ×_B B_{/b} for h : A -> B, i.e. (h_! G)(b).
struct ColimitAt {
  /// Objects [a, phi] with phi : h(a) -> b.
  std::vector<Tuple> index;
  /// element[k][x]: class of x ∈ G(a_k) in the colimit.
  std::vector<std::vector<std::size_t>> element;
  std::size_t size = 0;

  /// Position of the index object (a, phi), or npos.
  std::size_t find(ObjIndex a, MorIndex phi) const {
    for (std::size_t k = 0; k < index.size(); ++k)
      if (index[k][0] == a && index[k][1] == phi) return k;
    return static_cast<std::size_t>(-1);
  }
};

/// Computed as π0 of the Grothendieck construction of G restricted to the
/// comma category.
inline ColimitAt colimit_at(const SetFunctor& g, const Functor& h, ObjIndex b) {
  CommaCat over = slice(h.target, b);
  CommaCat comma = pullback_cat(h, over.projections[0]);
  ColimitAt out;
  for (const Tuple& t : comma.object_tuples) out.index.push_back({t[0], over.object_tuples[t[1]][0]});
  CommaCat total = grothendieck(precompose(g, comma.projections[0]));
  const auto [label, count] = components(*total.cat);
  out.size = count;
  out.element.resize(out.index.size());
  for (std::size_t k = 0; k < out.index.size(); ++k) out.element[k].assign(g.sizes[out.index[k][0]], 0);
  for (ObjIndex o = 0; o < total.cat->num_objects(); ++o) {
    const Tuple& t = total.object_tuples[o];
    out.element[t[0]][t[1]] = label[o];
  }
  return out;
}

/// The limit of G over B_{b/} ×_B A for h : A -> B, i.e. (h_* G)(b), as the
/// list of compatible families in lexicographic order.
struct LimitAt {
  /// Objects [a, psi] with psi : b -> h(a).
  std::vector<Tuple> index;
  /// families[e][k] ∈ G(a_k)
  std::vector<std::vector<std::size_t>> families;

  std::size_t size() const { return families.size(); }
  /// Position of the index object (a, psi), or npos.
  std::size_t find_index(ObjIndex a, MorIndex psi) const {
    for (std::size_t k = 0; k < index.size(); ++k)
      if (index[k][0] == a && index[k][1] == psi) return k;
    return static_cast<std::size_t>(-1);
  }
  std::size_t find(const std::vector<std::size_t>& family) const {
    auto it = std::lower_bound(families.begin(), families.end(), family);
    return it != families.end() && *it == family ? static_cast<std::size_t>(it - families.begin())
                                                 : static_cast<std::size_t>(-1);
  }
};

inline LimitAt limit_at(const SetFunctor& g, const Functor& h, ObjIndex b, std::size_t budget = 1'000'000) {
  CommaCat under = coslice(h.target, b);
  CommaCat comma = pullback_cat(under.projections[0], h);
  LimitAt out;
  const FinCat& j = *comma.cat;
  for (const Tuple& t : comma.object_tuples) out.index.push_back({t[1], under.object_tuples[t[0]][0]});
  const std::size_t n = out.index.size();
  std::vector<std::size_t> family(n, 0);
  std::size_t visited = 0;
  const Functor& to_a = comma.projections[1];
  // Backtracking; a morphism is checked once both ends are assigned.
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (++visited > budget) throw Error(ErrorCode::ExplosionGuard, "limit enumeration exceeds its budget");
    if (k == n) {
      out.families.push_back(family);
      return;
    }
    const ObjIndex a = out.index[k][0];
    for (std::size_t x = 0; x < g.sizes[a]; ++x) {
      family[k] = x;
      bool ok = true;
      for (MorIndex m = 0; ok && m < j.num_morphisms(); ++m) {
        const ObjIndex s = j.src(m);
        const ObjIndex t = j.dst(m);
        if (s > k || t > k || (s != k && t != k)) continue;
        ok = g.maps[to_a.mor_map[m]][family[s]] == family[t];
      }
      if (ok) self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace pushcat

#endif  // PUSHCAT_KAN_HPP
