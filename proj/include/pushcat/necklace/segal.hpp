#ifndef PUSHCAT_NECKLACE_SEGAL_HPP
#define PUSHCAT_NECKLACE_SEGAL_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pushcat/necklace/necklace.hpp"

namespace pushcat {

/// A simplicial subset given by membership flags, reindexed as a simplicial
/// set of its own.
struct SubSSet {
  std::shared_ptr<const TruncatedSSet> sset;
  /// to_parent[n][s]: index in the ambient simplicial set.
  std::vector<std::vector<SimplexIndex>> to_parent;
};

/// The simplices of X selected by `keep`, which must be closed under faces and
/// degeneracies.
inline SubSSet sub_sset(const TruncatedSSet& x, const std::function<bool(std::size_t, SimplexIndex)>& keep) {
  SubSSet out;
  out.to_parent.resize(x.dim + 1);
  std::vector<std::vector<std::int64_t>> local(x.dim + 1);
  auto y = std::make_shared<TruncatedSSet>(x.dim);
  for (std::size_t n = 0; n <= x.dim; ++n) {
    local[n].assign(x.count[n], -1);
    for (SimplexIndex s = 0; s < x.count[n]; ++s)
      if (keep(n, s)) {
        local[n][s] = static_cast<std::int64_t>(out.to_parent[n].size());
        out.to_parent[n].push_back(s);
      }
    y->count[n] = out.to_parent[n].size();
  }
  auto lookup = [&](std::size_t n, SimplexIndex s, const char* what) {
    if (local[n][s] < 0) {
      throw Error(ErrorCode::NotSimplicial,
                  std::string("selection is not closed under ") + what + " in degree " + std::to_string(n));
    }
    return static_cast<SimplexIndex>(local[n][s]);
  };
  for (std::size_t n = 0; n <= x.dim; ++n)
    for (SimplexIndex s : out.to_parent[n]) {
      for (std::size_t i = 0; n >= 1 && i <= n; ++i) y->faces[n].push_back(lookup(n - 1, x.face(n, s, i), "faces"));
      for (std::size_t i = 0; n < x.dim && i <= n; ++i)
        y->degeneracies[n].push_back(lookup(n + 1, x.degeneracy(n, s, i), "degeneracies"));
    }
  for (SimplexIndex v : out.to_parent[0]) y->vertex_labels.push_back(v < x.vertex_labels.size() ? x.vertex_labels[v] : "");
  y->top_nondegenerate = x.top_nondegenerate;
  out.sset = std::move(y);
  return out;
}

/// Membership flags of the full simplicial subset on a vertex set: a simplex
/// belongs when all of its vertices do.
inline std::vector<std::vector<bool>> full_on_vertices(const TruncatedSSet& x, const std::vector<bool>& vertices) {
  std::vector<std::vector<bool>> member(x.dim + 1);
  for (std::size_t n = 0; n <= x.dim; ++n) {
    member[n].assign(x.count[n], true);
    for (SimplexIndex s = 0; s < x.count[n]; ++s)
      for (std::size_t i = 0; i <= n && member[n][s]; ++i) member[n][s] = vertices[x.vertex(n, s, i)];
  }
  return member;
}

enum class SegalOutcome { HoldsUpToBound, Fails };

struct SegalFailure {
  /// ([p+q], {0, p, p+q}) with beads (front, back) glued at the joint p.
  NecklaceInX necklace;
  std::size_t joint = 0;
  /// Number of (p+q)-simplices restricting to the necklace.
  std::size_t extensions = 0;
};

struct SegalAwayVerdict {
  SegalOutcome outcome = SegalOutcome::HoldsUpToBound;
  std::vector<bool> a0;
  std::size_t bound = 0;
  std::size_t necklaces_checked = 0;
  std::optional<SegalFailure> witness;

  explicit operator bool() const { return outcome == SegalOutcome::HoldsUpToBound; }
};

/// Unique extension of every necklace of width at most `bound` across each
/// inner joint whose vertex lies outside A_0. Two-bead necklaces suffice:
/// merging one joint of a longer necklace only involves its two neighbours.
inline SegalAwayVerdict check_segal_away(const TruncatedSSet& x, const std::vector<std::vector<bool>>& a,
                                         std::size_t bound) {
  if (bound < 2) throw Error(ErrorCode::BoundTooSmall, "Segal checks need necklaces of width at least 2");
  if (bound > x.dim) throw Error(ErrorCode::TruncationTooLow, "bound exceeds the truncation");
  if (a.size() != x.dim + 1) throw Error(ErrorCode::NotFullSubanima, "membership does not cover every degree");
  for (std::size_t n = 0; n <= x.dim; ++n) {
    if (a[n].size() != x.count[n]) throw Error(ErrorCode::NotFullSubanima, "membership size in degree " + std::to_string(n));
  }
  const auto full = full_on_vertices(x, a[0]);
  for (std::size_t n = 0; n <= x.dim; ++n)
    for (SimplexIndex s = 0; s < x.count[n]; ++s) {
      if (a[n][s] == full[n][s]) continue;
      throw Error(ErrorCode::NotFullSubanima,
                  std::to_string(n) + "-simplex " + std::to_string(s) +
                      (a[n][s] ? " lies in A with a vertex outside A_0" : " has all vertices in A_0 but is missing"));
    }
  SegalAwayVerdict v;
  v.a0 = a[0];
  v.bound = bound;
  // (p + q, p, front, back) -> number of (p+q)-simplices with these faces.
  std::map<std::tuple<std::size_t, std::size_t, SimplexIndex, SimplexIndex>, std::size_t> fillers;
  for (std::size_t m = 2; m <= bound; ++m)
    for (SimplexIndex t = 0; t < x.count[m]; ++t)
      for (std::size_t p = 1; p < m; ++p) {
        std::vector<std::size_t> front(p + 1);
        std::vector<std::size_t> back(m - p + 1);
        for (std::size_t i = 0; i <= p; ++i) front[i] = i;
        for (std::size_t i = 0; i <= m - p; ++i) back[i] = p + i;
        ++fillers[{m, p, apply_monotone(x, m, t, front), apply_monotone(x, m, t, back)}];
      }
  for (std::size_t m = 2; m <= bound; ++m)
    for (std::size_t p = 1; p < m; ++p) {
      const std::size_t q = m - p;
      for (SimplexIndex s1 = 0; s1 < x.count[p]; ++s1) {
        const SimplexIndex joint = x.vertex(p, s1, p);
        if (v.a0[joint]) continue;
        for (SimplexIndex s2 = 0; s2 < x.count[q]; ++s2) {
          if (x.vertex(q, s2, 0) != joint) continue;
          ++v.necklaces_checked;
          auto it = fillers.find({m, p, s1, s2});
          const std::size_t count = it == fillers.end() ? 0 : it->second;
          if (count == 1) continue;
          v.outcome = SegalOutcome::Fails;
          v.witness = SegalFailure{{Necklace(m, {0, p, m}), {s1, s2}}, p, count};
          return v;
        }
      }
    }
  return v;
}

inline SegalAwayVerdict check_segal_away(const TruncatedSSet& x, const std::vector<bool>& a0, std::size_t bound) {
  return check_segal_away(x, full_on_vertices(x, a0), bound);
}

}  // namespace pushcat

#endif  // PUSHCAT_NECKLACE_SEGAL_HPP
