#ifndef PUSHCAT_NECKLACE_NERVE_PUSHOUT_HPP
#define PUSHCAT_NECKLACE_NERVE_PUSHOUT_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "pushcat/core/predicates.hpp"
#include "pushcat/sset/nerve.hpp"

namespace pushcat {

/// N(B) ⊔_{N(A)} N(C) for a span whose left leg is fully faithful and
/// injective on objects.
struct NervePushout {
  std::shared_ptr<const TruncatedSSet> sset;
  /// from_b[n][s], from_c[n][s]: images of the n-simplices of N(B) and N(C).
  std::vector<std::vector<SimplexIndex>> from_b;
  std::vector<std::vector<SimplexIndex>> from_c;
  /// Vertices coming from C.
  std::vector<bool> c_vertex;
};

inline NervePushout nerve_pushout(const Span& span, std::size_t d) {
  require_fully_faithful(span.left);
  const FinCat& a = *span.apex();
  {
    std::vector<bool> hit(span.left_cat()->num_objects(), false);
    for (ObjIndex x = 0; x < a.num_objects(); ++x) {
      if (hit[span.left.obj_map[x]]) {
        throw Error(ErrorCode::NotFullyFaithful, "left leg identifies objects at " + a.object_name(x));
      }
      hit[span.left.obj_map[x]] = true;
    }
  }
  const Nerve na = nerve_with_index(span.apex(), d);
  const Nerve nb = nerve_with_index(span.left_cat(), d);
  const Nerve nc = nerve_with_index(span.right_cat(), d);
  const SimplicialMap f = nerve_map(span.left, na, nb);
  const SimplicialMap g = nerve_map(span.right, na, nc);
  const TruncatedSSet& xb = *nb.sset;
  const TruncatedSSet& xc = *nc.sset;

  NervePushout out;
  out.from_b.resize(d + 1);
  out.from_c.resize(d + 1);
  auto p = std::make_shared<TruncatedSSet>(d);
  for (std::size_t n = 0; n <= d; ++n) {
    out.from_c[n].resize(xc.count[n]);
    for (SimplexIndex s = 0; s < xc.count[n]; ++s) out.from_c[n][s] = s;
    out.from_b[n].assign(xb.count[n], 0);
    std::vector<bool> in_a(xb.count[n], false);
    for (SimplexIndex s = 0; s < na.sset->count[n]; ++s) {
      in_a[f.maps[n][s]] = true;
      out.from_b[n][f.maps[n][s]] = g.maps[n][s];
    }
    SimplexIndex next = static_cast<SimplexIndex>(xc.count[n]);
    for (SimplexIndex s = 0; s < xb.count[n]; ++s)
      if (!in_a[s]) out.from_b[n][s] = next++;
    p->count[n] = next;
  }
  // Simplices of P in order: C first, then B outside the image of A.
  std::vector<std::vector<SimplexIndex>> b_of(d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    b_of[n].assign(p->count[n] - xc.count[n], 0);
    for (SimplexIndex s = 0; s < xb.count[n]; ++s)
      if (out.from_b[n][s] >= xc.count[n]) b_of[n][out.from_b[n][s] - xc.count[n]] = s;
  }
  for (std::size_t n = 0; n <= d; ++n) {
    for (SimplexIndex s = 0; s < p->count[n]; ++s) {
      const bool c_side = s < xc.count[n];
      const SimplexIndex local = c_side ? s : b_of[n][s - xc.count[n]];
      for (std::size_t i = 0; n >= 1 && i <= n; ++i) {
        p->faces[n].push_back(c_side ? xc.face(n, local, i) : out.from_b[n - 1][xb.face(n, local, i)]);
      }
      for (std::size_t i = 0; n < d && i <= n; ++i) {
        p->degeneracies[n].push_back(c_side ? xc.degeneracy(n, local, i)
                                            : out.from_b[n + 1][xb.degeneracy(n, local, i)]);
      }
    }
  }
  std::unordered_set<std::string> used;
  for (SimplexIndex v = 0; v < p->count[0]; ++v) {
    std::string name = v < xc.count[0] ? xc.vertex_labels[v] : xb.vertex_labels[b_of[0][v - xc.count[0]]];
    while (!used.insert(name).second) name += "′";
    p->vertex_labels.push_back(std::move(name));
    out.c_vertex.push_back(v < xc.count[0]);
  }
  if (xb.top_nondegenerate && xc.top_nondegenerate) {
    p->top_nondegenerate = std::max(*xb.top_nondegenerate, *xc.top_nondegenerate);
  }
  out.sset = std::move(p);
  return out;
}

}  // namespace pushcat

#endif  // PUSHCAT_NECKLACE_NERVE_PUSHOUT_HPP
