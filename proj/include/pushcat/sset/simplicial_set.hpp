#ifndef PUSHCAT_SSET_SIMPLICIAL_SET_HPP
#define PUSHCAT_SSET_SIMPLICIAL_SET_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pushcat/error.hpp"

namespace pushcat {

using SimplexIndex = std::uint32_t;

/// A simplicial set recorded through dimension `dim`.
///
/// Face d_i of the n-simplex s is faces[n][s * (n + 1) + i] (n >= 1) and the
/// degeneracy s_i is degeneracies[n][s * (n + 1) + i] (n < dim).
struct TruncatedSSet {
  std::size_t dim = 0;
  std::vector<std::size_t> count;
  std::vector<std::vector<SimplexIndex>> faces;
  std::vector<std::vector<SimplexIndex>> degeneracies;
  std::vector<std::string> vertex_labels;
  /// Known bound on the dimension of nondegenerate simplices of the
  /// untruncated simplicial set, if any.
  std::optional<std::size_t> top_nondegenerate;

  explicit TruncatedSSet(std::size_t d = 0)
      : dim(d), count(d + 1, 0), faces(d + 1), degeneracies(d + 1) {}

  std::size_t num_vertices() const { return count[0]; }

  SimplexIndex face(std::size_t n, SimplexIndex s, std::size_t i) const { return faces[n][s * (n + 1) + i]; }
  SimplexIndex degeneracy(std::size_t n, SimplexIndex s, std::size_t i) const {
    return degeneracies[n][s * (n + 1) + i];
  }

  /// Vertex i of an n-simplex.
  SimplexIndex vertex(std::size_t n, SimplexIndex s, std::size_t i) const {
    // Drop every other vertex: d_0 removes the ones before i, d_last the rest.
    for (std::size_t k = n; k > i; --k) s = face(k, s, k);
    for (std::size_t k = i; k > 0; --k) s = face(k, s, 0);
    return s;
  }

  /// degenerate[n][s] for every recorded simplex.
  std::vector<std::vector<bool>> degenerate_flags() const {
    std::vector<std::vector<bool>> flags(dim + 1);
    for (std::size_t n = 0; n <= dim; ++n) flags[n].assign(count[n], false);
    for (std::size_t n = 0; n < dim; ++n)
      for (SimplexIndex s = 0; s < count[n]; ++s)
        for (std::size_t i = 0; i <= n; ++i) flags[n + 1][degeneracy(n, s, i)] = true;
    return flags;
  }

  std::vector<std::size_t> nondegenerate_counts() const {
    auto flags = degenerate_flags();
    std::vector<std::size_t> out(dim + 1, 0);
    for (std::size_t n = 0; n <= dim; ++n)
      for (bool f : flags[n]) out[n] += f ? 0 : 1;
    return out;
  }
};

/// Exhaustive check of the simplicial identities on the recorded range.
inline void check_simplicial_identities(const TruncatedSSet& x) {
  auto fail = [](const std::string& what, std::size_t n, SimplexIndex s) {
    throw Error(ErrorCode::NotSimplicial, what + " fails on " + std::to_string(n) + "-simplex " + std::to_string(s));
  };
  for (std::size_t n = 0; n <= x.dim; ++n) {
    if (n >= 1 && x.faces[n].size() != x.count[n] * (n + 1)) fail("face table size", n, 0);
    if (n < x.dim && x.degeneracies[n].size() != x.count[n] * (n + 1)) fail("degeneracy table size", n, 0);
    for (SimplexIndex s = 0; s < x.count[n]; ++s) {
      if (n >= 1)
        for (std::size_t i = 0; i <= n; ++i)
          if (x.face(n, s, i) >= x.count[n - 1]) fail("face range", n, s);
      if (n < x.dim)
        for (std::size_t i = 0; i <= n; ++i)
          if (x.degeneracy(n, s, i) >= x.count[n + 1]) fail("degeneracy range", n, s);
    }
  }
  for (std::size_t n = 2; n <= x.dim; ++n)
    for (SimplexIndex s = 0; s < x.count[n]; ++s)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (x.face(n - 1, x.face(n, s, j), i) != x.face(n - 1, x.face(n, s, i), j - 1)) fail("d_i d_j", n, s);
  for (std::size_t n = 0; n < x.dim; ++n)
    for (SimplexIndex s = 0; s < x.count[n]; ++s)
      for (std::size_t j = 0; j <= n; ++j) {
        const SimplexIndex sj = x.degeneracy(n, s, j);
        for (std::size_t i = 0; i <= n + 1; ++i) {
          const SimplexIndex lhs = x.face(n + 1, sj, i);
          if (i == j || i == j + 1) {
            if (lhs != s) fail("d_j s_j", n, s);
          } else if (i < j) {
            if (lhs != x.degeneracy(n - 1, x.face(n, s, i), j - 1)) fail("d_i s_j", n, s);
          } else {
            if (lhs != x.degeneracy(n - 1, x.face(n, s, i - 1), j)) fail("d_i s_j", n, s);
          }
        }
        if (n + 1 < x.dim)
          for (std::size_t i = 0; i <= j; ++i)
            if (x.degeneracy(n + 1, sj, i) != x.degeneracy(n + 1, x.degeneracy(n, s, i), j + 1)) fail("s_i s_j", n, s);
      }
}

/// Discrete simplicial set on k vertices.
inline TruncatedSSet discrete_sset(std::size_t k, std::size_t dim, std::vector<std::string> labels = {}) {
  TruncatedSSet x(dim);
  for (std::size_t n = 0; n <= dim; ++n) {
    x.count[n] = k;
    if (n >= 1)
      for (SimplexIndex s = 0; s < k; ++s)
        for (std::size_t i = 0; i <= n; ++i) x.faces[n].push_back(s);
    if (n < dim)
      for (SimplexIndex s = 0; s < k; ++s)
        for (std::size_t i = 0; i <= n; ++i) x.degeneracies[n].push_back(s);
  }
  if (labels.empty())
    for (std::size_t v = 0; v < k; ++v) labels.push_back(std::to_string(v));
  x.vertex_labels = std::move(labels);
  x.top_nondegenerate = 0;
  return x;
}

/// A map of truncated simplicial sets, maps[n][s] = image of the n-simplex s.
struct SimplicialMap {
  std::shared_ptr<const TruncatedSSet> source;
  std::shared_ptr<const TruncatedSSet> target;
  std::vector<std::vector<SimplexIndex>> maps;
};

inline void check_simplicial_map(const SimplicialMap& f) {
  const TruncatedSSet& x = *f.source;
  const TruncatedSSet& y = *f.target;
  if (x.dim != y.dim || f.maps.size() != x.dim + 1) {
    throw Error(ErrorCode::NotSimplicial, "simplicial map between different truncation levels");
  }
  for (std::size_t n = 0; n <= x.dim; ++n) {
    if (f.maps[n].size() != x.count[n]) throw Error(ErrorCode::NotSimplicial, "simplicial map table size");
    for (SimplexIndex s = 0; s < x.count[n]; ++s) {
      const SimplexIndex fs = f.maps[n][s];
      if (fs >= y.count[n]) throw Error(ErrorCode::NotSimplicial, "simplicial map leaves its target");
      for (std::size_t i = 0; n >= 1 && i <= n; ++i)
        if (f.maps[n - 1][x.face(n, s, i)] != y.face(n, fs, i)) {
          throw Error(ErrorCode::NotSimplicial, "map does not commute with d_" + std::to_string(i) + " in degree " +
                                                    std::to_string(n));
        }
      for (std::size_t i = 0; n < x.dim && i <= n; ++i)
        if (f.maps[n + 1][x.degeneracy(n, s, i)] != y.degeneracy(n, fs, i)) {
          throw Error(ErrorCode::NotSimplicial, "map does not commute with s_" + std::to_string(i) + " in degree " +
                                                    std::to_string(n));
        }
    }
  }
}

/// The map to a discrete simplicial set sending each simplex to the label of
/// its first vertex. check_simplicial_map rejects labels that are not
/// constant on edges.
inline SimplicialMap map_to_discrete(std::shared_ptr<const TruncatedSSet> x,
                                     std::shared_ptr<const TruncatedSSet> discrete,
                                     const std::vector<SimplexIndex>& vertex_label) {
  SimplicialMap f{x, discrete, std::vector<std::vector<SimplexIndex>>(x->dim + 1)};
  for (std::size_t n = 0; n <= x->dim; ++n)
    for (SimplexIndex s = 0; s < x->count[n]; ++s) f.maps[n].push_back(vertex_label[x->vertex(n, s, 0)]);
  check_simplicial_map(f);
  return f;
}

/// Connected components of the vertices; requires 1-simplices.
struct Components {
  std::vector<std::size_t> label;
  std::size_t count = 0;
};

inline Components pi0(const TruncatedSSet& x) {
  if (x.dim < 1) throw Error(ErrorCode::TruncationTooLow, "pi0 needs the 1-simplices");
  std::vector<std::size_t> parent(x.count[0]);
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (SimplexIndex e = 0; e < x.count[1]; ++e) parent[find(x.face(1, e, 0))] = find(x.face(1, e, 1));
  Components c;
  c.label.assign(parent.size(), 0);
  std::vector<std::size_t> id(parent.size(), SIZE_MAX);
  for (std::size_t v = 0; v < parent.size(); ++v) {
    const std::size_t r = find(v);
    if (id[r] == SIZE_MAX) id[r] = c.count++;
    c.label[v] = id[r];
  }
  return c;
}

}  // namespace pushcat

#endif  // PUSHCAT_SSET_SIMPLICIAL_SET_HPP
