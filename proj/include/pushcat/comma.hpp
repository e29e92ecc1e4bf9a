#ifndef PUSHCAT_COMMA_HPP
#define PUSHCAT_COMMA_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "pushcat/core/constructions.hpp"
#include "pushcat/core/functor.hpp"
#include "pushcat/core/predicates.hpp"
#include "pushcat/core/set_functor.hpp"

namespace pushcat {

using Tuple = std::vector<std::uint32_t>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const { return boost::hash_range(t.begin(), t.end()); }
};

/// A category built from other categories together with its projections.
///
/// `object_tuples` / `morphism_tuples` record positional provenance and are
/// construction specific:
///   slice, coslice      object [phi]          morphism [h]
///   arrow               object [m]            morphism [u0, u1]
///   pullback            object [x, y]         morphism [u, v]
///   comma_triple        object [phi, a, psi]  morphism [u]
///   fourth (top)        object [phi, a, chi]  morphism [u]
///   fourth (bottom)     object [phi, a, psi, a', chi]  morphism [u, w]
///   grothendieck        object [c, x]         morphism [u, x]
/// where Latin letters are object indices and Greek letters morphism indices
/// of the constituent categories.
struct CommaCat {
  CatPtr cat;
  std::vector<Functor> projections;
  std::string provenance;
  std::vector<Tuple> object_tuples;
  std::vector<Tuple> morphism_tuples;
};

namespace detail {

/// Builds a category whose morphisms are keyed by (src, dst, components...).
class KeyedBuilder {
 public:
  ObjIndex add_object(std::string name, Tuple tuple) {
    object_tuples.push_back(std::move(tuple));
    return b_.add_object(unique(std::move(name), object_names_));
  }

  MorIndex add_morphism(std::string id, ObjIndex s, ObjIndex t, Tuple components) {
    Tuple key{s, t};
    key.insert(key.end(), components.begin(), components.end());
    const MorIndex m = b_.add_morphism(unique(std::move(id), morphism_names_), s, t);
    ends_.emplace_back(s, t);
    index_.emplace(std::move(key), m);
    morphism_tuples.push_back(std::move(components));
    return m;
  }

  MorIndex find(ObjIndex s, ObjIndex t, const Tuple& components) const {
    Tuple key{s, t};
    key.insert(key.end(), components.begin(), components.end());
    auto it = index_.find(key);
    return it == index_.end() ? kNoMorphism : it->second;
  }

  void set_identity(ObjIndex x, MorIndex m) { b_.set_identity(x, m); }

  /// `compose_components(g, f)` returns the components of g∘f.
  template <typename F>
  CatPtr build(F compose_components) {
    b_.set_composer([this, &compose_components](MorIndex g, MorIndex f) {
      return find(ends_[f].first, ends_[g].second, compose_components(morphism_tuples[g], morphism_tuples[f]));
    });
    return share(std::move(b_).build(Validation::Inherited));
  }

  std::vector<Tuple> object_tuples;
  std::vector<Tuple> morphism_tuples;

 private:
  // Tuple-derived names can collide when component names contain commas.
  static std::string unique(std::string name, std::unordered_set<std::string>& used) {
    if (used.insert(name).second) return name;
    for (std::size_t k = 1;; ++k) {
      std::string alt = name + "#" + std::to_string(k);
      if (used.insert(alt).second) return alt;
    }
  }

  CategoryBuilder b_;
  std::unordered_set<std::string> object_names_;
  std::unordered_set<std::string> morphism_names_;
  std::vector<std::pair<ObjIndex, ObjIndex>> ends_;
  std::unordered_map<Tuple, MorIndex, TupleHash> index_;
};

}  // namespace detail

/// C_{/c}: objects are morphisms x -> c, morphisms are commuting triangles.
inline CommaCat slice(const CatPtr& c, ObjIndex target) {
  if (target >= c->num_objects()) throw Error(ErrorCode::UnknownObject, "slice over an unknown object");
  const FinCat& cat = *c;
  detail::KeyedBuilder kb;
  std::vector<MorIndex> arrows;
  std::vector<ObjIndex> local(cat.num_morphisms(), kNoObject);
  for (ObjIndex x = 0; x < cat.num_objects(); ++x)
    for (MorIndex phi : cat.hom(x, target)) {
      local[phi] = kb.add_object(cat.morphism_id(phi), {phi});
      arrows.push_back(phi);
    }
  std::vector<MorIndex> underlying;
  for (MorIndex phi : arrows)
    for (MorIndex phi2 : arrows)
      for (MorIndex h : cat.hom(cat.src(phi), cat.src(phi2))) {
        if (cat.compose(phi2, h) != phi) continue;
        const MorIndex m = kb.add_morphism(cat.morphism_id(h) + ":" + cat.morphism_id(phi) + "->" + cat.morphism_id(phi2),
                                           local[phi], local[phi2], {h});
        if (cat.is_identity(h) && phi == phi2) kb.set_identity(local[phi], m);
        underlying.push_back(h);
      }
  auto result = kb.build([&cat](const Tuple& g, const Tuple& f) { return Tuple{cat.compose(g[0], f[0])}; });
  Functor proj{result, c, {}, underlying};
  for (MorIndex phi : arrows) proj.obj_map.push_back(cat.src(phi));
  return {result, {std::move(proj)}, "slice(" + cat.object_name(target) + ")", std::move(kb.object_tuples),
          std::move(kb.morphism_tuples)};
}

/// C_{c/}, computed as the opposite of a slice of the opposite.
inline CommaCat coslice(const CatPtr& c, ObjIndex source) {
  auto op = share(opposite(*c));
  CommaCat s = slice(op, source);
  auto cat = share(opposite(*s.cat));
  Functor proj{cat, c, s.projections[0].obj_map, s.projections[0].mor_map};
  return {cat, {std::move(proj)}, "coslice(" + c->object_name(source) + ")", std::move(s.object_tuples),
          std::move(s.morphism_tuples)};
}

/// Ar(C) with source and target projections (in that order).
inline CommaCat arrow_cat(const CatPtr& c) {
  const FinCat& cat = *c;
  detail::KeyedBuilder kb;
  for (MorIndex m = 0; m < cat.num_morphisms(); ++m) kb.add_object(cat.morphism_id(m), {m});
  std::vector<MorIndex> src_part, dst_part;
  for (MorIndex m = 0; m < cat.num_morphisms(); ++m)
    for (MorIndex n = 0; n < cat.num_morphisms(); ++n)
      for (MorIndex u0 : cat.hom(cat.src(m), cat.src(n)))
        for (MorIndex u1 : cat.hom(cat.dst(m), cat.dst(n))) {
          if (cat.compose(n, u0) != cat.compose(u1, m)) continue;
          const MorIndex k = kb.add_morphism("[" + cat.morphism_id(u0) + "," + cat.morphism_id(u1) + "]:" +
                                                 cat.morphism_id(m) + "->" + cat.morphism_id(n),
                                             m, n, {u0, u1});
          if (m == n && cat.is_identity(u0) && cat.is_identity(u1)) kb.set_identity(m, k);
          src_part.push_back(u0);
          dst_part.push_back(u1);
        }
  auto result = kb.build(
      [&cat](const Tuple& g, const Tuple& f) { return Tuple{cat.compose(g[0], f[0]), cat.compose(g[1], f[1])}; });
  Functor s{result, c, {}, src_part};
  Functor t{result, c, {}, dst_part};
  for (MorIndex m = 0; m < cat.num_morphisms(); ++m) {
    s.obj_map.push_back(cat.src(m));
    t.obj_map.push_back(cat.dst(m));
  }
  return {result, {std::move(s), std::move(t)}, "arrow", std::move(kb.object_tuples), std::move(kb.morphism_tuples)};
}

/// Strict pullback X ×_Z Y of F : X -> Z and G : Y -> Z. Projections are
/// returned in the order (to X, to Y).
///
/// Every leg this library pulls back along is a slice or coslice projection
/// (or a base change of one); those are isofibrations, so the strict pullback
/// computes the homotopy pullback.
inline CommaCat pullback_cat(const Functor& f, const Functor& g) {
  if (f.target.get() != g.target.get() && !(*f.target == *g.target)) {
    throw Error(ErrorCode::MismatchedTarget, "pullback legs have different targets");
  }
  const FinCat& x = *f.source;
  const FinCat& y = *g.source;
  const FinCat& z = *f.target;
  detail::KeyedBuilder kb;
  std::vector<std::pair<ObjIndex, ObjIndex>> objs;
  std::vector<std::vector<ObjIndex>> y_over(z.num_objects());
  for (ObjIndex b = 0; b < y.num_objects(); ++b) y_over[g.obj_map[b]].push_back(b);
  for (ObjIndex a = 0; a < x.num_objects(); ++a)
    for (ObjIndex b : y_over[f.obj_map[a]]) {
      kb.add_object("(" + x.object_name(a) + "," + y.object_name(b) + ")", {a, b});
      objs.emplace_back(a, b);
    }
  std::vector<MorIndex> px, py;
  for (ObjIndex i = 0; i < objs.size(); ++i)
    for (ObjIndex j = 0; j < objs.size(); ++j) {
      const auto [a, b] = objs[i];
      const auto [a2, b2] = objs[j];
      const auto vs = y.hom(b, b2);
      if (vs.empty()) continue;
      for (MorIndex u : x.hom(a, a2)) {
        const MorIndex fu = f.mor_map[u];
        for (MorIndex v : vs) {
          if (g.mor_map[v] != fu) continue;
          const MorIndex k = kb.add_morphism("(" + x.morphism_id(u) + "," + y.morphism_id(v) + ")", i, j, {u, v});
          if (i == j && x.is_identity(u) && y.is_identity(v)) kb.set_identity(i, k);
          px.push_back(u);
          py.push_back(v);
        }
      }
    }
  auto result = kb.build(
      [&x, &y](const Tuple& gg, const Tuple& ff) { return Tuple{x.compose(gg[0], ff[0]), y.compose(gg[1], ff[1])}; });
  Functor to_x{result, f.source, {}, px};
  Functor to_y{result, g.source, {}, py};
  for (auto [a, b] : objs) {
    to_x.obj_map.push_back(a);
    to_y.obj_map.push_back(b);
  }
  return {result, {std::move(to_x), std::move(to_y)}, "pullback", std::move(kb.object_tuples),
          std::move(kb.morphism_tuples)};
}

enum class Orientation {
  /// B_{b/} ×_B A ×_C C_{/c}: factorizations b -> f(a), g(a) -> c.
  BToC,
  /// C_{c/} ×_C A ×_B B_{/b}: factorizations c -> g(a), f(a) -> b.
  CToB,
};

namespace detail {

struct UnderPullback {
  CommaCat coslice;
  /// objects (k, a) with k an object of `coslice`
  CommaCat pullback;
};

/// (coslice(X, x) -> X) pulled back along h : A -> X.
inline UnderPullback under_pullback(const CatPtr& x_cat, ObjIndex x, const Functor& h) {
  CommaCat k = coslice(x_cat, x);
  CommaCat p = pullback_cat(k.projections[0], h);
  return {std::move(k), std::move(p)};
}

}  // namespace detail

/// The iterated strict pullback whose realization computes the mixed mapping
/// anima of the pushout. Projections: (coslice, A, slice).
inline CommaCat comma_triple(const Span& span, ObjIndex b, ObjIndex c, Orientation orientation) {
  const bool b_to_c = orientation == Orientation::BToC;
  const Functor& first_leg = b_to_c ? span.left : span.right;
  const Functor& second_leg = b_to_c ? span.right : span.left;
  const ObjIndex start = b_to_c ? b : c;
  const ObjIndex end = b_to_c ? c : b;
  if (start >= first_leg.target->num_objects() || end >= second_leg.target->num_objects()) {
    throw Error(ErrorCode::UnknownObject, "comma_triple endpoint out of range");
  }
  auto [k, under] = detail::under_pullback(first_leg.target, start, first_leg);  // (phi, a)
  Functor to_second = compose(second_leg, under.projections[1]);
  CommaCat over = slice(second_leg.target, end);
  CommaCat triple = pullback_cat(to_second, over.projections[0]);  // ((phi, a), psi)

  CommaCat result;
  result.cat = triple.cat;
  result.provenance = b_to_c ? "comma_triple(B->C)" : "comma_triple(C->B)";
  Functor to_coslice = compose(under.projections[0], triple.projections[0]);
  Functor to_apex = compose(under.projections[1], triple.projections[0]);
  Functor to_slice = triple.projections[1];
  for (ObjIndex o = 0; o < triple.cat->num_objects(); ++o) {
    const auto& outer = triple.object_tuples[o];
    const auto& inner = under.object_tuples[outer[0]];
    result.object_tuples.push_back(
        {k.object_tuples[inner[0]][0], inner[1], over.object_tuples[outer[1]][0]});
  }
  for (MorIndex m = 0; m < triple.cat->num_morphisms(); ++m) result.morphism_tuples.push_back({to_apex.mor_map[m]});
  result.projections = {std::move(to_coslice), std::move(to_apex), std::move(to_slice)};
  return result;
}

struct FourthComma {
  /// B_{b0/} ×_B A ×_B B_{/b1}
  CommaCat top;
  /// B_{b0/} ×_B A ×_C Ar(C) ×_C A ×_B B_{/b1}
  CommaCat bottom;
  /// a ↦ (a, id_{g(a)}, a)
  Functor connecting;
};

/// Both factorization categories of the fourth mapping anima and the functor
/// between them.
inline FourthComma fourth_comma(const Span& span, ObjIndex b0, ObjIndex b1) {
  require_fully_faithful(span.left);
  const Functor& f = span.left;
  const Functor& g = span.right;
  const CatPtr& bcat = span.left_cat();
  const CatPtr& ccat = span.right_cat();

  // top: ((phi, a), chi)
  auto [k, under] = detail::under_pullback(bcat, b0, f);
  CommaCat over = slice(bcat, b1);
  CommaCat top = pullback_cat(compose(f, under.projections[1]), over.projections[0]);

  // bottom: ((((phi, a), psi), a'), chi)
  CommaCat ar = arrow_cat(ccat);
  CommaCat p2 = pullback_cat(compose(g, under.projections[1]), ar.projections[0]);
  CommaCat p3 = pullback_cat(compose(ar.projections[1], p2.projections[1]), g);
  CommaCat bottom = pullback_cat(compose(f, p3.projections[1]), over.projections[0]);

  FourthComma out;
  out.top.cat = top.cat;
  out.top.provenance = "fourth_top";
  out.top.projections = top.projections;
  for (ObjIndex o = 0; o < top.cat->num_objects(); ++o) {
    const auto& t = top.object_tuples[o];
    const auto& u = under.object_tuples[t[0]];
    Tuple flat{k.object_tuples[u[0]][0], u[1], over.object_tuples[t[1]][0]};
    out.top.object_tuples.push_back(flat);
  }
  Functor top_apex = compose(under.projections[1], top.projections[0]);
  for (MorIndex m = 0; m < top.cat->num_morphisms(); ++m) out.top.morphism_tuples.push_back({top_apex.mor_map[m]});

  out.bottom.cat = bottom.cat;
  out.bottom.provenance = "fourth_bottom";
  out.bottom.projections = bottom.projections;
  std::unordered_map<Tuple, ObjIndex, TupleHash> bottom_index;
  Functor to_a0 = compose(under.projections[1], compose(p2.projections[0], compose(p3.projections[0], bottom.projections[0])));
  Functor to_a1 = compose(p3.projections[1], bottom.projections[0]);
  for (ObjIndex o = 0; o < bottom.cat->num_objects(); ++o) {
    const auto& t4 = bottom.object_tuples[o];
    const auto& t3 = p3.object_tuples[t4[0]];
    const auto& t2 = p2.object_tuples[t3[0]];
    const auto& t1 = under.object_tuples[t2[0]];
    Tuple flat{k.object_tuples[t1[0]][0], t1[1], ar.object_tuples[t2[1]][0], t3[1], over.object_tuples[t4[1]][0]};
    bottom_index.emplace(flat, o);
    out.bottom.object_tuples.push_back(std::move(flat));
  }
  for (MorIndex m = 0; m < bottom.cat->num_morphisms(); ++m) {
    out.bottom.morphism_tuples.push_back({to_a0.mor_map[m], to_a1.mor_map[m]});
  }

  // Connecting functor.
  out.connecting = Functor{top.cat, bottom.cat, {}, {}};
  const FinCat& ccat_ref = *ccat;
  for (ObjIndex o = 0; o < top.cat->num_objects(); ++o) {
    const auto& t = out.top.object_tuples[o];
    Tuple flat{t[0], t[1], ccat_ref.identity(g.obj_map[t[1]]), t[1], t[2]};
    out.connecting.obj_map.push_back(bottom_index.at(flat));
  }
  // Index bottom morphisms by (src, dst, u, w).
  std::unordered_map<Tuple, MorIndex, TupleHash> bottom_mor;
  for (MorIndex m = 0; m < bottom.cat->num_morphisms(); ++m) {
    bottom_mor.emplace(Tuple{bottom.cat->src(m), bottom.cat->dst(m), to_a0.mor_map[m], to_a1.mor_map[m]}, m);
  }
  for (MorIndex m = 0; m < top.cat->num_morphisms(); ++m) {
    const MorIndex u = out.top.morphism_tuples[m][0];
    out.connecting.mor_map.push_back(bottom_mor.at(
        Tuple{out.connecting.obj_map[top.cat->src(m)], out.connecting.obj_map[top.cat->dst(m)], u, u}));
  }
  check_functor(out.connecting);
  return out;
}

/// ∫F: objects (c, x ∈ F(c)), morphisms (u, x) : (c, x) -> (c', F(u)(x)).
inline CommaCat grothendieck(const SetFunctor& f) {
  check_set_functor(f);
  const FinCat& c = *f.source;
  detail::KeyedBuilder kb;
  std::vector<std::vector<ObjIndex>> local(c.num_objects());
  for (ObjIndex x = 0; x < c.num_objects(); ++x)
    for (std::size_t e = 0; e < f.sizes[x]; ++e)
      local[x].push_back(kb.add_object("(" + c.object_name(x) + "," + std::to_string(e) + ")",
                                       {x, static_cast<std::uint32_t>(e)}));
  std::vector<MorIndex> under;
  for (MorIndex u = 0; u < c.num_morphisms(); ++u)
    for (std::size_t e = 0; e < f.sizes[c.src(u)]; ++e) {
      const ObjIndex s = local[c.src(u)][e];
      const ObjIndex t = local[c.dst(u)][f.maps[u][e]];
      const MorIndex k = kb.add_morphism("(" + c.morphism_id(u) + "," + std::to_string(e) + ")", s, t,
                                         {u, static_cast<std::uint32_t>(e)});
      if (c.is_identity(u)) kb.set_identity(s, k);
      under.push_back(u);
    }
  auto result = kb.build([&c](const Tuple& g, const Tuple& h) { return Tuple{c.compose(g[0], h[0]), h[1]}; });
  Functor proj{result, f.source, {}, under};
  for (const auto& t : kb.object_tuples) proj.obj_map.push_back(t[0]);
  return {result, {std::move(proj)}, "grothendieck", std::move(kb.object_tuples), std::move(kb.morphism_tuples)};
}

}  // namespace pushcat

#endif  // PUSHCAT_COMMA_HPP
