#ifndef PUSHCAT_SSET_CYLINDER_HPP
#define PUSHCAT_SSET_CYLINDER_HPP

#include <algorithm>
#include <vector>

#include "pushcat/sset/simplicial_set.hpp"

namespace pushcat {

/// Y ⊔ X×Δ¹ ⊔ Z with X×{0} glued to Y along f and X×{1} glued to Z along g.
///
/// Simplices in degree n: those of Y, then those of Z, then pairs (x, k) with
/// x an n-simplex of X and 1 <= k <= n the number of vertices sent to 0 by the
/// nonconstant map [n] -> [1].
inline TruncatedSSet double_mapping_cylinder(const SimplicialMap& f, const SimplicialMap& g) {
  check_simplicial_map(f);
  check_simplicial_map(g);
  if (f.source.get() != g.source.get()) {
    throw Error(ErrorCode::NotSimplicial, "cylinder legs must share their source");
  }
  const TruncatedSSet& x = *f.source;
  const TruncatedSSet& y = *f.target;
  const TruncatedSSet& z = *g.target;
  const std::size_t d = x.dim;
  TruncatedSSet w(d);
  auto z_offset = [&](std::size_t n) { return static_cast<SimplexIndex>(y.count[n]); };
  auto x_offset = [&](std::size_t n) { return static_cast<SimplexIndex>(y.count[n] + z.count[n]); };
  // (x, k) in degree n sits at x_offset(n) + x * n + (k - 1).
  auto pair = [&](std::size_t n, SimplexIndex s, std::size_t k) {
    return static_cast<SimplexIndex>(x_offset(n) + s * n + (k - 1));
  };
  for (std::size_t n = 0; n <= d; ++n) w.count[n] = y.count[n] + z.count[n] + x.count[n] * n;

  for (std::size_t n = 1; n <= d; ++n) {
    auto& table = w.faces[n];
    table.reserve(w.count[n] * (n + 1));
    for (SimplexIndex s = 0; s < y.count[n]; ++s)
      for (std::size_t i = 0; i <= n; ++i) table.push_back(y.face(n, s, i));
    for (SimplexIndex s = 0; s < z.count[n]; ++s)
      for (std::size_t i = 0; i <= n; ++i) table.push_back(z_offset(n - 1) + z.face(n, s, i));
    for (SimplexIndex s = 0; s < x.count[n]; ++s)
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = 0; i <= n; ++i) {
          const SimplexIndex face = x.face(n, s, i);
          const std::size_t zeros = i < k ? k - 1 : k;
          if (zeros == 0) {
            table.push_back(z_offset(n - 1) + g.maps[n - 1][face]);
          } else if (zeros == n) {
            table.push_back(f.maps[n - 1][face]);
          } else {
            table.push_back(pair(n - 1, face, zeros));
          }
        }
  }
  for (std::size_t n = 0; n < d; ++n) {
    auto& table = w.degeneracies[n];
    table.reserve(w.count[n] * (n + 1));
    for (SimplexIndex s = 0; s < y.count[n]; ++s)
      for (std::size_t i = 0; i <= n; ++i) table.push_back(y.degeneracy(n, s, i));
    for (SimplexIndex s = 0; s < z.count[n]; ++s)
      for (std::size_t i = 0; i <= n; ++i) table.push_back(z_offset(n + 1) + z.degeneracy(n, s, i));
    for (SimplexIndex s = 0; s < x.count[n]; ++s)
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = 0; i <= n; ++i) table.push_back(pair(n + 1, x.degeneracy(n, s, i), i < k ? k + 1 : k));
  }
  for (const auto& l : y.vertex_labels) w.vertex_labels.push_back("L:" + l);
  for (const auto& l : z.vertex_labels) w.vertex_labels.push_back("R:" + l);
  if (x.top_nondegenerate && y.top_nondegenerate && z.top_nondegenerate) {
    w.top_nondegenerate = std::max({*x.top_nondegenerate + 1, *y.top_nondegenerate, *z.top_nondegenerate});
  }
  return w;
}

}  // namespace pushcat

#endif  // PUSHCAT_SSET_CYLINDER_HPP
