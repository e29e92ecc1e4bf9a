#ifndef PUSHCAT_SSET_NERVE_HPP
#define PUSHCAT_SSET_NERVE_HPP

#include <memory>
#include <unordered_map>
#include <vector>

#include "pushcat/comma.hpp"
#include "pushcat/core/constructions.hpp"
#include "pushcat/sset/simplicial_set.hpp"

namespace pushcat {

/// Nerve together with the string of morphisms behind every simplex.
struct Nerve {
  CatPtr cat;
  std::shared_ptr<const TruncatedSSet> sset;
  /// strings[n][s]: n composable morphisms for n >= 1, the object for n = 0.
  std::vector<std::vector<Tuple>> strings;
  std::vector<std::unordered_map<Tuple, SimplexIndex, TupleHash>> index;
};

/// Nerve of C through dimension d: n-simplices are composable strings
/// x0 -> x1 -> ... -> xn.
inline Nerve nerve_with_index(const CatPtr& c, std::size_t d) {
  const FinCat& cat = *c;
  Nerve nv{c, nullptr, std::vector<std::vector<Tuple>>(d + 1),
           std::vector<std::unordered_map<Tuple, SimplexIndex, TupleHash>>(d + 1)};
  auto x = std::make_shared<TruncatedSSet>(d);
  for (ObjIndex o = 0; o < cat.num_objects(); ++o) {
    nv.strings[0].push_back({o});
    x->vertex_labels.push_back(cat.object_name(o));
  }
  if (d >= 1)
    for (MorIndex m = 0; m < cat.num_morphisms(); ++m) nv.strings[1].push_back({m});
  for (std::size_t n = 2; n <= d; ++n)
    for (const Tuple& t : nv.strings[n - 1])
      for (MorIndex m : cat.out(cat.dst(t.back()))) {
        Tuple next = t;
        next.push_back(m);
        nv.strings[n].push_back(std::move(next));
      }
  for (std::size_t n = 0; n <= d; ++n) {
    x->count[n] = nv.strings[n].size();
    nv.index[n].reserve(nv.strings[n].size());
    for (SimplexIndex s = 0; s < nv.strings[n].size(); ++s) nv.index[n].emplace(nv.strings[n][s], s);
  }
  auto end_object = [&](const Tuple& t, std::size_t n, bool last) -> ObjIndex {
    if (n == 0) return t[0];
    return last ? cat.dst(t.back()) : cat.src(t.front());
  };
  for (std::size_t n = 1; n <= d; ++n) {
    auto& table = x->faces[n];
    table.reserve(x->count[n] * (n + 1));
    for (const Tuple& t : nv.strings[n])
      for (std::size_t i = 0; i <= n; ++i) {
        Tuple face;
        if (n == 1) {
          face = {i == 0 ? cat.dst(t[0]) : cat.src(t[0])};
        } else if (i == 0) {
          face.assign(t.begin() + 1, t.end());
        } else if (i == n) {
          face.assign(t.begin(), t.end() - 1);
        } else {
          face.assign(t.begin(), t.begin() + (i - 1));
          face.push_back(cat.compose(t[i], t[i - 1]));
          face.insert(face.end(), t.begin() + (i + 1), t.end());
        }
        table.push_back(nv.index[n - 1].at(face));
      }
  }
  for (std::size_t n = 0; n < d; ++n) {
    auto& table = x->degeneracies[n];
    table.reserve(x->count[n] * (n + 1));
    for (const Tuple& t : nv.strings[n])
      for (std::size_t i = 0; i <= n; ++i) {
        Tuple up;
        if (n == 0) {
          up = {cat.identity(t[0])};
        } else {
          // Insert the identity at vertex i.
          const ObjIndex v = i == 0 ? end_object(t, n, false) : cat.dst(t[i - 1]);
          up = t;
          up.insert(up.begin() + i, cat.identity(v));
        }
        table.push_back(nv.index[n + 1].at(up));
      }
  }
  if (is_chain_bounded(cat)) x->top_nondegenerate = longest_chain(cat);
  nv.sset = std::move(x);
  return nv;
}

inline TruncatedSSet nerve(const CatPtr& c, std::size_t d) { return *nerve_with_index(c, d).sset; }

/// N(F) : N(A) -> N(B).
inline SimplicialMap nerve_map(const Functor& f, const Nerve& source, const Nerve& target) {
  SimplicialMap m{source.sset, target.sset, std::vector<std::vector<SimplexIndex>>(source.sset->dim + 1)};
  for (std::size_t n = 0; n <= source.sset->dim; ++n)
    for (const Tuple& t : source.strings[n]) {
      Tuple image = t;
      for (auto& v : image) v = n == 0 ? f.obj_map[v] : f.mor_map[v];
      m.maps[n].push_back(target.index[n].at(image));
    }
  return m;
}

}  // namespace pushcat

#endif  // PUSHCAT_SSET_NERVE_HPP
