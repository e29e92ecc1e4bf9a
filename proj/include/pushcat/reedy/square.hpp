#ifndef PUSHCAT_REEDY_SQUARE_HPP
#define PUSHCAT_REEDY_SQUARE_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pushcat/reedy/extension.hpp"

namespace pushcat {

using Rational = boost::multiprecision::cpp_rational;

/// Counts enumeration steps and throws ExplosionGuard past the limit.
struct Budget {
  std::size_t limit = 20'000'000;
  std::size_t used = 0;

  void step(const char* what) {
    if (++used > limit) throw Error(ErrorCode::ExplosionGuard, std::string(what) + " exceeds the enumeration budget");
  }
};

/// Calls visit(F) for every functor c -> {sets of size <= k}.
inline void enumerate_set_functors(const CatPtr& c, std::size_t k, Budget& budget,
                                   const std::function<void(const SetFunctor&)>& visit) {
  const FinCat& cat = *c;
  const std::size_t nm = cat.num_morphisms();
  std::vector<MorIndex> order;
  for (MorIndex m = 0; m < nm; ++m)
    if (!cat.is_identity(m)) order.push_back(m);
  std::vector<std::size_t> rank(nm, 0);
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r + 1;
  // Composition constraints (g, f, g∘f), checked at the latest non-identity.
  std::vector<std::vector<std::array<MorIndex, 3>>> checks(order.size() + 1);
  for (MorIndex f = 0; f < nm; ++f)
    for (MorIndex g : cat.out(cat.dst(f))) {
      const MorIndex h = cat.compose(g, f);
      checks[std::max({rank[f], rank[g], rank[h]})].push_back({g, f, h});
    }

  SetFunctor x{c, std::vector<std::size_t>(cat.num_objects(), 0), std::vector<std::vector<std::size_t>>(nm)};
  auto assign = [&](auto&& self, std::size_t r) -> void {
    budget.step("set functor enumeration");
    if (r == order.size()) {
      visit(x);
      return;
    }
    const MorIndex m = order[r];
    const std::size_t ns = x.sizes[cat.src(m)];
    const std::size_t nt = x.sizes[cat.dst(m)];
    if (ns > 0 && nt == 0) return;
    auto& map = x.maps[m];
    map.assign(ns, 0);
    while (true) {
      bool ok = true;
      for (const auto& [g, f, h] : checks[r + 1]) {
        for (std::size_t e = 0; ok && e < x.sizes[cat.src(f)]; ++e) ok = x.maps[g][x.maps[f][e]] == x.maps[h][e];
        if (!ok) break;
      }
      if (ok) self(self, r + 1);
      std::size_t pos = 0;
      while (pos < ns && ++map[pos] == nt) map[pos++] = 0;
      if (pos == ns) break;
    }
  };
  std::vector<std::size_t>& sizes = x.sizes;
  while (true) {
    for (ObjIndex o = 0; o < cat.num_objects(); ++o) {
      auto& id = x.maps[cat.identity(o)];
      id.resize(sizes[o]);
      std::iota(id.begin(), id.end(), std::size_t{0});
    }
    assign(assign, 0);
    std::size_t pos = 0;
    while (pos < sizes.size() && ++sizes[pos] == k + 1) sizes[pos++] = 0;
    if (pos == sizes.size()) break;
  }
}

namespace detail {

/// Iterates over all tuples of permutations of {0..n_i-1}.
class Relabelings {
 public:
  explicit Relabelings(const std::vector<std::size_t>& sizes) {
    for (std::size_t n : sizes) {
      perms_.emplace_back(n);
      std::iota(perms_.back().begin(), perms_.back().end(), std::size_t{0});
    }
  }
  const std::vector<std::vector<std::size_t>>& current() const { return perms_; }
  bool next() {
    for (auto& p : perms_)
      if (std::next_permutation(p.begin(), p.end())) return true;
    return false;
  }

 private:
  std::vector<std::vector<std::size_t>> perms_;
};

inline Rational inverse_factorial_product(const std::vector<std::size_t>& sizes) {
  boost::multiprecision::cpp_int d = 1;
  for (std::size_t n : sizes)
    for (std::size_t i = 2; i <= n; ++i) d *= i;
  return Rational(1) / Rational(d);
}

}  // namespace detail

/// Least encoding over relabelings, and the number of relabelings fixing it.
struct CanonicalForm {
  std::vector<std::size_t> code;
  std::size_t automorphisms = 0;
};

/// Iso class of a set-valued functor: sizes followed by the relabeled tables.
inline CanonicalForm canonical_form(const SetFunctor& x) {
  const FinCat& c = *x.source;
  CanonicalForm out;
  detail::Relabelings r(x.sizes);
  std::vector<std::size_t> code;
  do {
    const auto& p = r.current();
    code.assign(x.sizes.begin(), x.sizes.end());
    for (MorIndex m = 0; m < c.num_morphisms(); ++m) {
      const auto& map = x.maps[m];
      std::vector<std::size_t> relabeled(map.size());
      for (std::size_t e = 0; e < map.size(); ++e) relabeled[p[c.src(m)][e]] = p[c.dst(m)][map[e]];
      code.insert(code.end(), relabeled.begin(), relabeled.end());
    }
    if (out.automorphisms == 0 || code < out.code) {
      out.code = code;
      out.automorphisms = 1;
    } else if (code == out.code) {
      ++out.automorphisms;
    }
  } while (r.next());
  return out;
}

/// Element-level encoding of pullback data, independent of how latching
/// classes and matching families are numbered. Relabels F's sets by pa and
/// G's sets by pc.
inline std::vector<std::size_t> encode(const ReedyData& d, const Boundary& bd, const std::vector<std::vector<std::size_t>>& pa,
                                       const std::vector<std::vector<std::size_t>>& pc) {
  const FinCat& a = *d.f.source;
  const FinCat& c = *d.g.source;
  std::vector<std::size_t> code(d.f.sizes.begin(), d.f.sizes.end());
  code.insert(code.end(), d.g.sizes.begin(), d.g.sizes.end());
  auto table = [&](const SetFunctor& x, const FinCat& cat, const std::vector<std::vector<std::size_t>>& p) {
    for (MorIndex m = 0; m < cat.num_morphisms(); ++m) {
      std::vector<std::size_t> relabeled(x.maps[m].size());
      for (std::size_t e = 0; e < relabeled.size(); ++e) relabeled[p[cat.src(m)][e]] = p[cat.dst(m)][x.maps[m][e]];
      code.insert(code.end(), relabeled.begin(), relabeled.end());
    }
  };
  table(d.f, a, pa);
  table(d.g, c, pc);
  for (ObjIndex x = 0; x < c.num_objects(); ++x) {
    const ColimitAt& lat = bd.latching[x];
    for (std::size_t k = 0; k < lat.index.size(); ++k) {
      const auto& perm = pa[lat.index[k][0]];
      std::vector<std::size_t> values(lat.element[k].size());
      for (std::size_t e = 0; e < values.size(); ++e) values[perm[e]] = pc[x][d.lambda[x][lat.element[k][e]]];
      code.insert(code.end(), values.begin(), values.end());
    }
    const LimitAt& mat = bd.matching[x];
    std::vector<std::vector<std::size_t>> families(d.g.sizes[x]);
    for (std::size_t y = 0; y < d.g.sizes[x]; ++y) {
      const auto& family = mat.families[d.mu[x][y]];
      for (std::size_t k = 0; k < family.size(); ++k) families[pc[x][y]].push_back(pa[mat.index[k][0]][family[k]]);
    }
    for (const auto& f : families) code.insert(code.end(), f.begin(), f.end());
  }
  return code;
}

inline std::vector<std::vector<std::size_t>> identity_labels(const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t n : sizes) {
    out.emplace_back(n);
    std::iota(out.back().begin(), out.back().end(), std::size_t{0});
  }
  return out;
}

inline CanonicalForm canonical_form(const ReedyData& d, const Boundary& bd) {
  std::vector<std::size_t> sizes = d.f.sizes;
  sizes.insert(sizes.end(), d.g.sizes.begin(), d.g.sizes.end());
  const std::size_t na = d.f.sizes.size();
  CanonicalForm out;
  detail::Relabelings r(sizes);
  do {
    const auto& p = r.current();
    const std::vector<std::vector<std::size_t>> pa(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(na));
    const std::vector<std::vector<std::size_t>> pc(p.begin() + static_cast<std::ptrdiff_t>(na), p.end());
    auto code = encode(d, bd, pa, pc);
    if (out.automorphisms == 0 || code < out.code) {
      out.code = std::move(code);
      out.automorphisms = 1;
    } else if (code == out.code) {
      ++out.automorphisms;
    }
  } while (r.next());
  return out;
}

/// Calls visit(data) for every (F, G, λ, μ) over F with μ∘λ canonical and
/// λ, μ natural.
inline void enumerate_pullback_data(const ReedyWitness& w, std::size_t k, Budget& budget,
                                    const std::function<void(const ReedyData&, const Boundary&)>& visit) {
  const FinCat& c = *w.complement;
  const std::size_t nc = c.num_objects();
  enumerate_set_functors(w.inclusion.source, k, budget, [&](const SetFunctor& f) {
    const Boundary bd = boundary(f, w, budget.limit);
    enumerate_set_functors(w.complement, k, budget, [&](const SetFunctor& g) {
      ReedyData data{f, g, std::vector<std::vector<std::size_t>>(nc), std::vector<std::vector<std::size_t>>(nc)};
      auto choose = [&](auto&& self, ObjIndex x) -> void {
        if (x == nc) {
          visit(data, bd);
          return;
        }
        const std::size_t nl = bd.latching[x].size;
        const std::size_t ng = g.sizes[x];
        const std::size_t nmat = bd.matching[x].size();
        if ((nl > 0 && ng == 0) || (ng > 0 && nmat == 0)) return;
        auto& lambda = data.lambda[x];
        auto& mu = data.mu[x];
        mu.assign(ng, 0);
        while (true) {
          lambda.assign(nl, 0);
          while (true) {
            budget.step("pullback data enumeration");
            bool ok = true;
            for (std::size_t l = 0; ok && l < nl; ++l) ok = mu[lambda[l]] == bd.canonical[x][l];
            for (MorIndex gamma = 0; ok && gamma < c.num_morphisms(); ++gamma) {
              if (c.src(gamma) > x || c.dst(gamma) > x || (c.src(gamma) != x && c.dst(gamma) != x)) continue;
              ok = naturality_failure(data, bd, w, gamma).empty();
            }
            if (ok) self(self, x + 1);
            std::size_t pos = 0;
            while (pos < nl && ++lambda[pos] == ng) lambda[pos++] = 0;
            if (pos == nl) break;
          }
          std::size_t pos = 0;
          while (pos < ng && ++mu[pos] == nmat) mu[pos++] = 0;
          if (pos == ng) break;
        }
      };
      choose(choose, 0);
    });
  });
}

struct ReedySquareVerdict {
  bool holds = false;
  std::size_t size_bound = 0;
  std::size_t functors = 0;       // labeled functors B -> Set<=k
  std::size_t data = 0;           // labeled pullback data
  std::size_t functor_classes = 0;
  std::size_t data_classes = 0;
  /// Σ 1/|Aut| over iso classes.
  Rational functor_cardinality;
  Rational data_cardinality;
  std::string detail;

  explicit operator bool() const { return holds; }
};

/// Fun(B, Set<=k) against the pullback of the latching-matching square:
/// restriction is a bijection on labeled objects and on iso classes, and both
/// groupoid cardinalities agree.
inline ReedySquareVerdict verify_reedy_square(const ReedyWitness& w, std::size_t k, std::size_t budget_limit = 20'000'000) {
  Budget budget{budget_limit, 0};
  ReedySquareVerdict v;
  v.size_bound = k;

  // Pullback side.
  std::set<std::vector<std::size_t>> data_codes;
  std::map<std::vector<std::size_t>, std::size_t> data_classes;
  Rational data_labeled = 0;
  enumerate_pullback_data(w, k, budget, [&](const ReedyData& d, const Boundary& bd) {
    ++v.data;
    data_codes.insert(encode(d, bd, identity_labels(d.f.sizes), identity_labels(d.g.sizes)));
    std::vector<std::size_t> sizes = d.f.sizes;
    sizes.insert(sizes.end(), d.g.sizes.begin(), d.g.sizes.end());
    data_labeled += detail::inverse_factorial_product(sizes);
    const CanonicalForm form = canonical_form(d, bd);
    data_classes.emplace(form.code, form.automorphisms);
  });

  // Functor side, through restriction.
  std::map<std::vector<std::size_t>, Boundary> boundaries;
  std::set<std::vector<std::size_t>> hit;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> class_map;
  std::map<std::vector<std::size_t>, std::size_t> functor_classes;
  Rational functor_labeled = 0;
  bool ok = true;
  enumerate_set_functors(w.inclusion.target, k, budget, [&](const SetFunctor& x) {
    ++v.functors;
    functor_labeled += detail::inverse_factorial_product(x.sizes);
    const CanonicalForm form = canonical_form(x);
    functor_classes.emplace(form.code, form.automorphisms);
    if (!ok) return;
    const SetFunctor f = precompose(x, w.inclusion);
    std::vector<std::size_t> key(f.sizes.begin(), f.sizes.end());
    for (const auto& m : f.maps) key.insert(key.end(), m.begin(), m.end());
    auto it = boundaries.find(key);
    if (it == boundaries.end()) it = boundaries.emplace(key, boundary(f, w, budget.limit)).first;
    const ReedyData d = restrict_functor(x, w, it->second);
    const auto code = encode(d, it->second, identity_labels(d.f.sizes), identity_labels(d.g.sizes));
    if (!data_codes.count(code)) {
      ok = false;
      v.detail = "a restricted functor is missing from the pullback data";
      return;
    }
    if (!hit.insert(code).second) {
      ok = false;
      v.detail = "two functors restrict to the same pullback data";
      return;
    }
    if (!(reconstruct_functor(d, w, it->second) == x)) {
      ok = false;
      v.detail = "reconstruction does not return the functor";
      return;
    }
    auto image = canonical_form(d, it->second).code;
    auto [slot, fresh] = class_map.emplace(form.code, image);
    if (!fresh && slot->second != image) {
      ok = false;
      v.detail = "restriction is not constant on an iso class";
    }
  });

  v.functor_classes = functor_classes.size();
  v.data_classes = data_classes.size();
  for (const auto& [code, aut] : functor_classes) v.functor_cardinality += Rational(1) / Rational(aut);
  for (const auto& [code, aut] : data_classes) v.data_cardinality += Rational(1) / Rational(aut);
  if (v.functor_cardinality != functor_labeled || v.data_cardinality != data_labeled) {
    throw Error(ErrorCode::CanonicalMapMismatch, "orbit counting disagrees with the labeled count");
  }
  if (ok && hit.size() != data_codes.size()) {
    ok = false;
    v.detail = std::to_string(data_codes.size() - hit.size()) + " pullback data are not restrictions";
  }
  if (ok) {
    std::set<std::vector<std::size_t>> images;
    for (const auto& [from, to] : class_map) images.insert(to);
    if (images.size() != class_map.size() || images.size() != data_classes.size()) {
      ok = false;
      v.detail = "restriction is not a bijection on iso classes";
    }
  }
  if (ok && v.functor_cardinality != v.data_cardinality) {
    ok = false;
    v.detail = "groupoid cardinalities differ";
  }
  v.holds = ok;
  return v;
}

inline ReedySquareVerdict verify_reedy_square(const Functor& i, std::size_t k, std::size_t truncation = 4,
                                              std::size_t budget_limit = 20'000'000) {
  const ReedyVerdict r = is_reedy_extension(i, truncation);
  if (!r) {
    ReedySquareVerdict v;
    v.size_bound = k;
    v.detail = "not a Reedy extension: " + r.detail;
    return v;
  }
  return verify_reedy_square(r.witness, k, budget_limit);
}

}  // namespace pushcat

#endif  // PUSHCAT_REEDY_SQUARE_HPP
