#ifndef PUSHCAT_NECKLACE_NECKLACE_HPP
#define PUSHCAT_NECKLACE_NECKLACE_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "pushcat/comma.hpp"
#include "pushcat/sset/simplicial_set.hpp"

namespace pushcat {

/// ([n], J): a wedge of simplices whose gluing vertices and endpoints are the
/// joints J.
struct Necklace {
  std::size_t width = 0;
  std::vector<std::size_t> joints;

  Necklace() : joints{0} {}
  Necklace(std::size_t n, std::vector<std::size_t> j) : width(n), joints(std::move(j)) { validate(); }

  /// The simplex Δ^n as a necklace.
  static Necklace simplex(std::size_t n) { return n == 0 ? Necklace() : Necklace(n, {0, n}); }

  void validate() const {
    if (joints.empty() || joints.front() != 0 || joints.back() != width ||
        !std::is_sorted(joints.begin(), joints.end()) ||
        std::adjacent_find(joints.begin(), joints.end()) != joints.end()) {
      throw Error(ErrorCode::ParseError, "necklace joints must increase strictly from 0 to the width");
    }
  }

  std::size_t num_beads() const { return joints.size() - 1; }
  std::size_t bead_dim(std::size_t i) const { return joints[i + 1] - joints[i]; }
  bool is_joint(std::size_t v) const { return std::binary_search(joints.begin(), joints.end(), v); }

  friend bool operator==(const Necklace&, const Necklace&) = default;
};

inline std::string to_string(const Necklace& n) {
  std::string s = "([" + std::to_string(n.width) + "], {";
  for (std::size_t i = 0; i < n.joints.size(); ++i) s += (i ? "," : "") + std::to_string(n.joints[i]);
  return s + "})";
}

/// Monotone d : [n] -> [m] with d(0) = 0, d(n) = m and d(J_N) ⊇ J_M, as
/// value tables.
inline std::vector<std::vector<std::size_t>> necklace_maps(const Necklace& from, const Necklace& to) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = from.width;
  const std::size_t m = to.width;
  if (n == 0) {
    if (m == 0) out.push_back({0});
    return out;
  }
  std::vector<std::size_t> d(n + 1, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      d[n] = m;
      if (d[n - 1] > m) return;
      for (std::size_t b : to.joints) {
        bool hit = false;
        for (std::size_t a : from.joints) hit = hit || d[a] == b;
        if (!hit) return;
      }
      out.push_back(d);
      return;
    }
    for (std::size_t v = d[i - 1]; v <= m; ++v) {
      d[i] = v;
      self(self, i + 1);
    }
  };
  d[0] = 0;
  rec(rec, 1);
  return out;
}

/// θ^*(s) for an n-simplex s and monotone θ : [p] -> [n] given as values.
inline SimplexIndex apply_monotone(const TruncatedSSet& x, std::size_t n, SimplexIndex s,
                                   const std::vector<std::size_t>& theta) {
  // Remove vertices outside the image, highest first.
  std::vector<bool> hit(n + 1, false);
  for (std::size_t v : theta) hit[v] = true;
  std::size_t dim = n;
  for (std::size_t v = n + 1; v-- > 0;) {
    if (hit[v]) continue;
    s = x.face(dim, s, v);
    --dim;
  }
  // Then repeat vertices left to right.
  for (std::size_t j = 0; j + 1 < theta.size(); ++j) {
    if (theta[j] != theta[j + 1]) continue;
    s = x.degeneracy(dim, s, j);
    ++dim;
  }
  return s;
}

/// A necklace map N -> X: one simplex per bead, consecutive beads glued.
struct NecklaceInX {
  Necklace necklace;
  std::vector<SimplexIndex> beads;
};

/// The category of necklaces in X from x0 to x1 of width at most the bound,
/// with necklace maps over X as morphisms.
struct NecklaceCategory {
  CatPtr cat;
  std::vector<NecklaceInX> objects;
  /// morphism -> the underlying map [n] -> [m]
  std::vector<std::vector<std::size_t>> maps;
};

namespace detail {

inline std::vector<Necklace> necklaces_of_width(std::size_t n) {
  std::vector<Necklace> out;
  if (n == 0) return {Necklace()};
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    std::vector<std::size_t> j{0};
    for (std::size_t v = 1; v < n; ++v)
      if (mask >> (v - 1) & 1) j.push_back(v);
    j.push_back(n);
    out.emplace_back(n, std::move(j));
  }
  return out;
}

/// Index of the bead of N containing the interval [lo, hi].
inline std::size_t bead_containing(const Necklace& n, std::size_t lo, std::size_t hi) {
  for (std::size_t i = 0; i < n.num_beads(); ++i)
    if (n.joints[i] <= lo && hi <= n.joints[i + 1]) return i;
  return n.num_beads();
}

/// Restriction f' ∘ d of a necklace in X along d : N -> N'.
inline std::vector<SimplexIndex> restrict_along(const TruncatedSSet& x, const NecklaceInX& target, const Necklace& source,
                                                const std::vector<std::size_t>& d, SimplexIndex base) {
  std::vector<SimplexIndex> out;
  const Necklace& tn = target.necklace;
  for (std::size_t i = 0; i < source.num_beads(); ++i) {
    const std::size_t lo = source.joints[i];
    const std::size_t hi = source.joints[i + 1];
    if (tn.width == 0) {
      // Constant at the base vertex.
      SimplexIndex s = base;
      for (std::size_t k = 0; k < hi - lo; ++k) s = x.degeneracy(k, s, 0);
      out.push_back(s);
      continue;
    }
    const std::size_t t = bead_containing(tn, d[lo], d[hi]);
    std::vector<std::size_t> theta;
    for (std::size_t v = lo; v <= hi; ++v) theta.push_back(d[v] - tn.joints[t]);
    out.push_back(apply_monotone(x, tn.bead_dim(t), target.beads[t], theta));
  }
  return out;
}

}  // namespace detail

inline NecklaceCategory necklaces_in(const TruncatedSSet& x, SimplexIndex x0, SimplexIndex x1, std::size_t width_bound) {
  if (width_bound < 1) throw Error(ErrorCode::BoundTooSmall, "necklace width bound must be at least 1");
  if (width_bound > x.dim) {
    throw Error(ErrorCode::TruncationTooLow, "necklaces of width " + std::to_string(width_bound) +
                                                 " need simplices of that dimension");
  }
  // by_first[k][v]: k-simplices with first vertex v
  std::vector<std::vector<std::vector<SimplexIndex>>> by_first(width_bound + 1);
  std::vector<std::vector<SimplexIndex>> last(width_bound + 1);
  for (std::size_t k = 1; k <= width_bound; ++k) {
    by_first[k].resize(x.count[0]);
    for (SimplexIndex s = 0; s < x.count[k]; ++s) {
      by_first[k][x.vertex(k, s, 0)].push_back(s);
      last[k].push_back(x.vertex(k, s, k));
    }
  }
  NecklaceCategory out;
  if (x0 == x1) out.objects.push_back({Necklace(), {}});
  for (std::size_t n = 1; n <= width_bound; ++n)
    for (const Necklace& nk : detail::necklaces_of_width(n)) {
      std::vector<SimplexIndex> beads;
      auto rec = [&](auto&& self, std::size_t i, SimplexIndex at) -> void {
        if (i == nk.num_beads()) {
          if (at == x1) out.objects.push_back({nk, beads});
          return;
        }
        const std::size_t k = nk.bead_dim(i);
        for (SimplexIndex s : by_first[k][at]) {
          beads.push_back(s);
          self(self, i + 1, last[k][s]);
          beads.pop_back();
        }
      };
      rec(rec, 0, x0);
    }

  detail::KeyedBuilder kb;
  for (std::size_t o = 0; o < out.objects.size(); ++o) {
    kb.add_object(to_string(out.objects[o].necklace) + "#" + std::to_string(o), {static_cast<std::uint32_t>(o)});
  }
  for (ObjIndex a = 0; a < out.objects.size(); ++a)
    for (ObjIndex b = 0; b < out.objects.size(); ++b) {
      const auto& src = out.objects[a];
      const auto& dst = out.objects[b];
      for (const auto& d : necklace_maps(src.necklace, dst.necklace)) {
        if (detail::restrict_along(x, dst, src.necklace, d, x0) != src.beads) continue;
        Tuple key(d.begin(), d.end());
        const MorIndex m = kb.add_morphism(std::to_string(a) + "->" + std::to_string(b) + ":" +
                                               std::to_string(out.maps.size()),
                                           a, b, key);
        bool identity = a == b;
        for (std::size_t v = 0; identity && v < d.size(); ++v) identity = d[v] == v;
        if (identity) kb.set_identity(a, m);
        out.maps.push_back(d);
      }
    }
  out.cat = kb.build([](const Tuple& g, const Tuple& f) {
    Tuple gf(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) gf[v] = g[f[v]];
    return gf;
  });
  return out;
}

}  // namespace pushcat

#endif  // PUSHCAT_NECKLACE_NECKLACE_HPP
