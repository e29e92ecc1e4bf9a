#ifndef PUSHCAT_FUZZ_HPP
#define PUSHCAT_FUZZ_HPP

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pushcat/core/constructions.hpp"
#include "pushcat/core/functor.hpp"
#include "pushcat/core/set_functor.hpp"

/// Random generators for the property suites. Every generator is a pure
/// function of the engine state, so a seed reproduces the instance.
namespace pushcat::fuzz {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline std::vector<std::string> names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// A poset on {prefix0, ..., prefix(n-1)} whose order extends the index order.
inline CatPtr random_poset(Rng& rng, std::size_t n, double density = 0.4, const std::string& prefix = "") {
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, density)) gens.emplace_back(i, j);
  return share(preorder_category(names(prefix, n), gens));
}

/// A subcategory of finite sets: objects are sets of size 1..3, morphisms the
/// closure of a few random maps under composition. Gives idempotents, parallel
/// arrows and nontrivial endomorphism monoids.
inline CatPtr random_category(Rng& rng, std::size_t max_objects = 3, std::size_t max_morphisms = 40) {
  while (true) {
    const std::size_t n = uniform(rng, 1, max_objects);
    std::vector<std::size_t> size(n);
    for (auto& s : size) s = uniform(rng, 1, 3);
    using Map = std::vector<std::size_t>;
    // (src, dst, table) keyed for deduplication.
    std::map<std::tuple<std::size_t, std::size_t, Map>, MorIndex> index;
    std::vector<std::tuple<std::size_t, std::size_t, Map>> arrows;
    auto add = [&](std::size_t s, std::size_t t, Map m) {
      auto key = std::make_tuple(s, t, std::move(m));
      if (index.count(key)) return false;
      index.emplace(key, static_cast<MorIndex>(arrows.size()));
      arrows.push_back(std::move(key));
      return true;
    };
    for (std::size_t x = 0; x < n; ++x) {
      Map id(size[x]);
      for (std::size_t e = 0; e < size[x]; ++e) id[e] = e;
      add(x, x, id);
    }
    const std::size_t generators = uniform(rng, 1, 4);
    for (std::size_t g = 0; g < generators; ++g) {
      const std::size_t s = uniform(rng, 0, n - 1);
      const std::size_t t = uniform(rng, 0, n - 1);
      Map m(size[s]);
      for (auto& v : m) v = uniform(rng, 0, size[t] - 1);
      add(s, t, m);
    }
    bool overflow = false;
    for (bool grew = true; grew && !overflow;) {
      grew = false;
      const std::size_t count = arrows.size();
      for (std::size_t f = 0; f < count && !overflow; ++f)
        for (std::size_t g = 0; g < count && !overflow; ++g) {
          const auto& [fs, ft, fm] = arrows[f];
          const auto& [gs, gt, gm] = arrows[g];
          if (ft != gs) continue;
          Map h(fm.size());
          for (std::size_t e = 0; e < fm.size(); ++e) h[e] = gm[fm[e]];
          const std::size_t s = fs;
          const std::size_t t = gt;
          if (add(s, t, std::move(h))) grew = true;
          overflow = arrows.size() > max_morphisms;
        }
    }
    if (overflow) continue;
    CategoryBuilder b;
    for (std::size_t x = 0; x < n; ++x) b.add_object("x" + std::to_string(x));
    for (std::size_t m = 0; m < arrows.size(); ++m) {
      const auto& [s, t, table] = arrows[m];
      const std::string id = m < n ? "id_x" + std::to_string(m) : "m" + std::to_string(m - n);
      b.add_morphism(id, static_cast<ObjIndex>(s), static_cast<ObjIndex>(t));
    }
    for (std::size_t x = 0; x < n; ++x) b.set_identity(static_cast<ObjIndex>(x), static_cast<MorIndex>(x));
    b.set_composer([&](MorIndex g, MorIndex f) {
      const auto& [fs, ft, fm] = arrows[f];
      const auto& [gs, gt, gm] = arrows[g];
      Map h(fm.size());
      for (std::size_t e = 0; e < fm.size(); ++e) h[e] = gm[fm[e]];
      return index.at(std::make_tuple(fs, gt, h));
    });
    return share(std::move(b).build(Validation::Full));
  }
}

/// B = A extended by new objects q, each with a reflection R(q) ∈ A or none:
/// Hom(a, q) = Hom_A(a, R q), Hom(q, a) = ∅ and Hom(q, q') = Hom_A(Rq, Rq')
/// (or identities only when `discrete`). The inclusion of A is Dwyer.
inline Functor dwyer_extension(Rng& rng, const CatPtr& a, std::size_t extra, bool discrete) {
  const FinCat& ac = *a;
  const std::size_t na = ac.num_objects();
  std::vector<ObjIndex> reflection(extra, kNoObject);
  for (auto& r : reflection)
    if (na > 0 && coin(rng, 0.8)) r = static_cast<ObjIndex>(uniform(rng, 0, na - 1));

  CategoryBuilder b;
  for (ObjIndex x = 0; x < na; ++x) b.add_object(ac.object_name(x));
  std::vector<std::string> qnames;
  for (std::size_t q = 0; q < extra; ++q) {
    std::string name = "q" + std::to_string(q);
    while (ac.find_object(name)) name += "_";
    qnames.push_back(name);
    b.add_object(name);
  }
  // Morphism kinds: (0, m) from A; (1, q, m) a -> q given by m : a -> Rq;
  // (2, q, q', m) for q -> q' given by m : Rq -> Rq', or identity when R is undefined.
  struct Kind {
    int kind;
    std::size_t q0;
    std::size_t q1;
    MorIndex m;
  };
  std::vector<Kind> kinds;
  std::map<std::tuple<int, std::size_t, std::size_t, MorIndex>, MorIndex> lookup;
  auto add = [&](Kind k, const std::string& id, ObjIndex s, ObjIndex t) {
    const MorIndex idx = b.add_morphism(id, s, t);
    kinds.push_back(k);
    lookup.emplace(std::make_tuple(k.kind, k.q0, k.q1, k.m), idx);
    return idx;
  };
  for (MorIndex m = 0; m < ac.num_morphisms(); ++m) add({0, 0, 0, m}, ac.morphism_id(m), ac.src(m), ac.dst(m));
  for (ObjIndex x = 0; x < na; ++x) b.set_identity(x, ac.identity(x));
  const auto qobj = [&](std::size_t q) { return static_cast<ObjIndex>(na + q); };
  for (std::size_t q = 0; q < extra; ++q) {
    if (reflection[q] == kNoObject) continue;
    for (ObjIndex x = 0; x < na; ++x)
      for (MorIndex m : ac.hom(x, reflection[q])) add({1, q, 0, m}, ac.morphism_id(m) + "/" + qnames[q], x, qobj(q));
  }
  std::vector<std::vector<bool>> linked(extra, std::vector<bool>(extra, false));
  for (std::size_t q = 0; q < extra; ++q) linked[q][q] = true;
  if (!discrete) {
    for (std::size_t q = 0; q < extra; ++q)
      for (std::size_t p = q + 1; p < extra; ++p) {
        // Keep q -> p only when R-defined objects are closed upwards.
        if (reflection[q] != kNoObject && reflection[p] == kNoObject) continue;
        if (reflection[q] == kNoObject && reflection[p] != kNoObject) continue;
        linked[q][p] = coin(rng, 0.5);
      }
    for (std::size_t k = 0; k < extra; ++k)
      for (std::size_t i = 0; i < extra; ++i)
        if (linked[i][k])
          for (std::size_t j = 0; j < extra; ++j)
            if (linked[k][j]) linked[i][j] = true;
  }
  for (std::size_t q = 0; q < extra; ++q)
    for (std::size_t p = 0; p < extra; ++p) {
      if (!linked[q][p]) continue;
      if (reflection[q] == kNoObject) {
        add({2, q, p, kNoMorphism}, q == p ? "id_" + qnames[q] : qnames[q] + "->" + qnames[p], qobj(q), qobj(p));
        continue;
      }
      for (MorIndex m : ac.hom(reflection[q], reflection[p])) {
        const std::string id = q == p && ac.is_identity(m) ? "id_" + qnames[q] : ac.morphism_id(m) + "/" + qnames[q] + "->" + qnames[p];
        add({2, q, p, m}, id, qobj(q), qobj(p));
      }
    }
  for (std::size_t q = 0; q < extra; ++q) {
    const MorIndex id = reflection[q] == kNoObject ? lookup.at(std::make_tuple(2, q, q, kNoMorphism))
                                                   : lookup.at(std::make_tuple(2, q, q, ac.identity(reflection[q])));
    b.set_identity(qobj(q), id);
  }
  b.set_composer([&](MorIndex g, MorIndex f) -> MorIndex {
    const Kind& kf = kinds[f];
    const Kind& kg = kinds[g];
    if (kf.kind == 0 && kg.kind == 0) return lookup.at(std::make_tuple(0, 0, 0, ac.compose(kg.m, kf.m)));
    if (kf.kind == 0 && kg.kind == 1) return lookup.at(std::make_tuple(1, kg.q0, 0, ac.compose(kg.m, kf.m)));
    if (kf.kind == 1 && kg.kind == 2) return lookup.at(std::make_tuple(1, kg.q1, 0, ac.compose(kg.m, kf.m)));
    if (kf.kind == 2 && kg.kind == 2) {
      const MorIndex m = kf.m == kNoMorphism ? kNoMorphism : ac.compose(kg.m, kf.m);
      return lookup.at(std::make_tuple(2, kf.q0, kg.q1, m));
    }
    return kNoMorphism;
  });
  auto bc = share(std::move(b).build(Validation::Full));
  Functor inc{a, bc, {}, {}};
  for (ObjIndex x = 0; x < na; ++x) inc.obj_map.push_back(x);
  for (MorIndex m = 0; m < ac.num_morphisms(); ++m) inc.mor_map.push_back(m);
  return inc;
}

/// The unique functor to the terminal category.
inline Functor to_terminal(const CatPtr& a) {
  auto t = share(terminal_category());
  return Functor{a, t, std::vector<ObjIndex>(a->num_objects(), 0), std::vector<MorIndex>(a->num_morphisms(), 0)};
}

/// Monotone map of a poset onto the chain of its heights.
inline Functor height_map(const CatPtr& a) {
  const FinCat& c = *a;
  std::vector<std::size_t> height(c.num_objects(), 0);
  // Objects of a fuzzed poset are index ordered, so one pass suffices.
  for (ObjIndex y = 0; y < c.num_objects(); ++y)
    for (ObjIndex x = 0; x < y; ++x)
      if (!c.hom(x, y).empty()) height[y] = std::max(height[y], height[x] + 1);
  const std::size_t top = c.num_objects() == 0 ? 0 : *std::max_element(height.begin(), height.end());
  auto chain = share(ordinal(top));
  Functor f{a, chain, {}, {}};
  for (ObjIndex x = 0; x < c.num_objects(); ++x) f.obj_map.push_back(static_cast<ObjIndex>(height[x]));
  for (MorIndex m = 0; m < c.num_morphisms(); ++m) {
    f.mor_map.push_back(chain->hom(f.obj_map[c.src(m)], f.obj_map[c.dst(m)])[0]);
  }
  return f;
}

/// Renames every object and morphism of the target of `f` with a prefix.
inline Functor with_prefix(const Functor& f, const std::string& prefix) {
  const FinCat& t = *f.target;
  CategoryBuilder b;
  for (ObjIndex x = 0; x < t.num_objects(); ++x) b.add_object(prefix + t.object_name(x));
  for (MorIndex m = 0; m < t.num_morphisms(); ++m) b.add_morphism(prefix + t.morphism_id(m), t.src(m), t.dst(m));
  for (ObjIndex x = 0; x < t.num_objects(); ++x) b.set_identity(x, t.identity(x));
  b.set_composer([&](MorIndex g, MorIndex h) { return t.compose(g, h); });
  return Functor{f.source, share(std::move(b).build(Validation::Inherited)), f.obj_map, f.mor_map};
}

/// A Dwyer span of posets with at most `max_objects` objects per category.
inline Span random_poset_dwyer_span(Rng& rng, std::size_t max_objects = 5) {
  const std::size_t na = uniform(rng, 1, std::max<std::size_t>(1, max_objects - 1));
  auto a = random_poset(rng, na, 0.4, "a");
  Functor f = dwyer_extension(rng, a, uniform(rng, 1, max_objects - na), coin(rng, 0.5));
  Functor g;
  switch (uniform(rng, 0, 2)) {
    case 0: g = height_map(a); break;
    case 1: g = dwyer_extension(rng, a, uniform(rng, 0, max_objects - na), coin(rng, 0.5)); break;
    default: g = identity_functor(a); break;
  }
  return Span{with_prefix(f, "b"), with_prefix(g, "c")};
}

/// A Dwyer span whose categories need not be posets. The apex has at most
/// `apex_morphisms` morphisms; B and C are redrawn until each has at most
/// `max_morphisms`. Larger endomorphism monoids make the word oracle and the
/// nerves of the fourth comma categories grow quickly.
inline Span random_dwyer_span(Rng& rng, std::size_t max_objects = 5, std::size_t max_morphisms = 12,
                              std::size_t apex_morphisms = 3) {
  if (coin(rng, 0.5)) return random_poset_dwyer_span(rng, max_objects);
  while (true) {
    auto a = random_category(rng, 2, apex_morphisms);
    const std::size_t room = max_objects > a->num_objects() ? max_objects - a->num_objects() : 1;
    Functor f = dwyer_extension(rng, a, uniform(rng, 1, room), coin(rng, 0.5));
    Functor g;
    switch (uniform(rng, 0, 2)) {
      case 0: g = to_terminal(a); break;
      case 1: g = dwyer_extension(rng, a, uniform(rng, 0, room), coin(rng, 0.5)); break;
      default: g = identity_functor(a); break;
    }
    if (f.target->num_morphisms() > max_morphisms || g.target->num_morphisms() > max_morphisms) continue;
    return Span{with_prefix(f, "b"), with_prefix(g, "c")};
  }
}

/// A span of posets whose left leg is a full subcategory inclusion.
inline Span random_full_span(Rng& rng, std::size_t max_objects = 5) {
  const std::size_t nb = uniform(rng, 2, max_objects);
  auto b = random_poset(rng, nb, 0.4, "b");
  std::vector<ObjIndex> keep;
  for (ObjIndex x = 0; x < nb; ++x)
    if (coin(rng, 0.5)) keep.push_back(x);
  if (keep.empty()) keep.push_back(static_cast<ObjIndex>(uniform(rng, 0, nb - 1)));
  const Subcategory sub = full_subcategory(b, keep);
  Functor g = coin(rng, 0.5) ? height_map(sub.cat) : identity_functor(sub.cat);
  return Span{sub.inclusion, with_prefix(g, "c")};
}

/// A random functor c -> {sets of size <= k}, found by randomized search.
inline SetFunctor random_set_functor(Rng& rng, const CatPtr& c, std::size_t k) {
  const FinCat& cat = *c;
  for (int attempt = 0; attempt < 50; ++attempt) {
    SetFunctor x{c, std::vector<std::size_t>(cat.num_objects()), std::vector<std::vector<std::size_t>>(cat.num_morphisms())};
    for (auto& s : x.sizes) s = uniform(rng, 1, k);
    for (ObjIndex o = 0; o < cat.num_objects(); ++o) {
      auto& id = x.maps[cat.identity(o)];
      for (std::size_t e = 0; e < x.sizes[o]; ++e) id.push_back(e);
    }
    std::vector<MorIndex> order;
    for (MorIndex m = 0; m < cat.num_morphisms(); ++m)
      if (!cat.is_identity(m)) order.push_back(m);
    std::vector<bool> assigned(cat.num_morphisms(), false);
    for (ObjIndex o = 0; o < cat.num_objects(); ++o) assigned[cat.identity(o)] = true;
    std::size_t steps = 0;
    auto consistent = [&](MorIndex m) {
      for (MorIndex f = 0; f < cat.num_morphisms(); ++f)
        for (MorIndex g : cat.out(cat.dst(f))) {
          const MorIndex h = cat.compose(g, f);
          if (f != m && g != m && h != m) continue;
          if (!assigned[f] || !assigned[g] || !assigned[h]) continue;
          for (std::size_t e = 0; e < x.sizes[cat.src(f)]; ++e)
            if (x.maps[g][x.maps[f][e]] != x.maps[h][e]) return false;
        }
      return true;
    };
    auto search = [&](auto&& self, std::size_t r) -> bool {
      if (++steps > 20000) return false;
      if (r == order.size()) return true;
      const MorIndex m = order[r];
      const std::size_t ns = x.sizes[cat.src(m)];
      const std::size_t nt = x.sizes[cat.dst(m)];
      for (int tries = 0; tries < 8; ++tries) {
        x.maps[m].assign(ns, 0);
        for (auto& v : x.maps[m]) v = uniform(rng, 0, nt - 1);
        assigned[m] = true;
        if (consistent(m) && self(self, r + 1)) return true;
        assigned[m] = false;
      }
      return false;
    };
    if (search(search, 0)) return x;
  }
  return constant_set_functor(c, 1);
}

/// B with objects a0.. (level 0, discrete) and c0.. (level 1) and random
/// parallel arrows between levels, all pointing up or all pointing down.
/// Returns the inclusion of level 0.
inline Functor random_two_level(Rng& rng, std::size_t max_per_level = 2, std::size_t max_parallel = 2) {
  const std::size_t na = uniform(rng, 1, max_per_level);
  const std::size_t nc = uniform(rng, 1, max_per_level);
  const bool up = coin(rng, 0.5);
  CategoryBuilder b;
  for (std::size_t i = 0; i < na; ++i) b.add_object("a" + std::to_string(i));
  for (std::size_t i = 0; i < nc; ++i) b.add_object("c" + std::to_string(i));
  for (ObjIndex x = 0; x < na + nc; ++x) {
    const std::string name = x < na ? "a" + std::to_string(x) : "c" + std::to_string(x - na);
    b.add_identity(x, "id_" + name);
  }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      const std::size_t count = uniform(rng, 0, max_parallel);
      for (std::size_t p = 0; p < count; ++p) {
        const auto ai = static_cast<ObjIndex>(i);
        const auto cj = static_cast<ObjIndex>(na + j);
        const std::string id = "a" + std::to_string(i) + (up ? "->" : "<-") + "c" + std::to_string(j) + "#" + std::to_string(p);
        up ? b.add_morphism(id, ai, cj) : b.add_morphism(id, cj, ai);
      }
    }
  auto bc = share(std::move(b).build(Validation::Full));
  std::vector<ObjIndex> level0(na);
  for (std::size_t i = 0; i < na; ++i) level0[i] = static_cast<ObjIndex>(i);
  return full_subcategory(bc, level0).inclusion;
}

/// A random downward-closed subset of a poset.
inline std::vector<ObjIndex> random_down_set(Rng& rng, const FinCat& c) {
  std::vector<bool> in(c.num_objects(), false);
  for (ObjIndex x = 0; x < c.num_objects(); ++x)
    if (coin(rng, 0.4)) in[x] = true;
  for (ObjIndex y = 0; y < c.num_objects(); ++y)
    if (in[y])
      for (ObjIndex x = 0; x < c.num_objects(); ++x)
        if (!c.hom(x, y).empty()) in[x] = true;
  std::vector<ObjIndex> out;
  for (ObjIndex x = 0; x < c.num_objects(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

}  // namespace pushcat::fuzz

#endif  // PUSHCAT_FUZZ_HPP
