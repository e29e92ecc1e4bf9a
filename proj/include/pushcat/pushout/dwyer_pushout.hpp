#ifndef PUSHCAT_PUSHOUT_DWYER_PUSHOUT_HPP
#define PUSHCAT_PUSHOUT_DWYER_PUSHOUT_HPP

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pushcat/core/predicates.hpp"
#include "pushcat/necklace/word_oracle.hpp"

namespace pushcat {

struct PushoutOptions {
  std::size_t truncation = 4;
  std::size_t word_bound = 8;
  bool cross_check = true;
};

/// Result of comparing a candidate pushout E (with cocone u : B -> E,
/// v : C -> E) against the word oracle.
struct OracleComparison {
  bool agrees = true;
  std::size_t pairs_checked = 0;
  /// Object pairs of E whose word classes did not stabilize.
  std::vector<std::pair<ObjIndex, ObjIndex>> unstabilized;
  std::string disagreement;

  bool holds() const { return agrees && unstabilized.empty(); }
};

/// Evaluates a word in E through the cocone.
inline MorIndex evaluate(const Word& w, ObjIndex start, const FinCat& e, const Functor& u, const Functor& v) {
  MorIndex m = e.identity(start);
  for (const Letter& l : w) m = e.compose(l.side == Side::B ? u.mor_map[l.m] : v.mor_map[l.m], m);
  return m;
}

/// Checks that the canonical comparison from the oracle's pushout to E is an
/// isomorphism: bijective on objects and on every stabilized hom-set.
inline OracleComparison compare_with_oracle(WordOracle& oracle, const FinCat& e, const Functor& u, const Functor& v) {
  OracleComparison out;
  const std::size_t classes = oracle.num_object_classes();
  std::vector<ObjIndex> image(classes, kNoObject);
  auto assign = [&](PushoutObject x, ObjIndex target) {
    ObjIndex& slot = image[oracle.class_of(x)];
    if (slot != kNoObject && slot != target) {
      out.agrees = false;
      out.disagreement = "object class sent to both " + e.object_name(slot) + " and " + e.object_name(target);
    }
    slot = target;
  };
  for (ObjIndex b = 0; b < u.source->num_objects(); ++b) assign({Side::B, b}, u.obj_map[b]);
  for (ObjIndex c = 0; c < v.source->num_objects(); ++c) assign({Side::C, c}, v.obj_map[c]);
  if (!out.agrees) return out;
  std::vector<std::size_t> preimage(e.num_objects(), classes);
  for (std::size_t k = 0; k < classes; ++k) {
    if (preimage[image[k]] != classes) {
      out.agrees = false;
      out.disagreement = "two object classes land on " + e.object_name(image[k]);
      return out;
    }
    preimage[image[k]] = k;
  }
  for (ObjIndex y = 0; y < e.num_objects(); ++y)
    if (preimage[y] == classes) {
      out.agrees = false;
      out.disagreement = "object " + e.object_name(y) + " is not hit";
      return out;
    }
  for (ObjIndex x = 0; x < e.num_objects(); ++x)
    for (ObjIndex y = 0; y < e.num_objects(); ++y) {
      const auto words = oracle.hom(oracle.representative(preimage[x]), oracle.representative(preimage[y]));
      ++out.pairs_checked;
      if (!words.stabilized) {
        out.unstabilized.emplace_back(x, y);
        continue;
      }
      const auto hom = e.hom(x, y);
      std::unordered_set<MorIndex> hit;
      for (const Word& w : words.representatives) hit.insert(evaluate(w, x, e, u, v));
      if (hit.size() != words.size() || words.size() != hom.size()) {
        out.agrees = false;
        out.disagreement = "Hom(" + e.object_name(x) + ", " + e.object_name(y) + "): " + std::to_string(hom.size()) +
                           " morphisms, " + std::to_string(words.size()) + " word classes, " +
                           std::to_string(hit.size()) + " distinct values";
        return out;
      }
    }
  return out;
}

enum class Provenance { FromC, FromB, Mixed };

/// The pushout of B <- A -> C along a Dwyer functor A -> B, built explicitly.
struct DwyerPushout {
  Span span;
  CatPtr d;
  Functor fbar;  // C -> D
  Functor gbar;  // B -> D
  DwyerWitness witness;
  std::vector<Provenance> provenance;
  /// For FromC / FromB: the morphism of C / B. For Mixed: the C-morphism
  /// x -> g(R y).
  std::vector<MorIndex> origin;
  /// B-object of a D-object outside C, kNoObject otherwise.
  std::vector<ObjIndex> b_object;
  OracleComparison oracle;
};

inline DwyerPushout dwyer_pushout(const Span& span, const PushoutOptions& options = {}) {
  auto check = check_dwyer(span.left);
  if (!check) throw Error(ErrorCode::NotDwyer, check.failure->what());
  const Functor& f = span.left;
  const Functor& g = span.right;
  const FinCat& a = *span.apex();
  const FinCat& b = *span.left_cat();
  const FinCat& c = *span.right_cat();
  std::vector<ObjIndex> preimage(b.num_objects(), kNoObject);
  for (ObjIndex x = 0; x < a.num_objects(); ++x) {
    if (preimage[f.obj_map[x]] != kNoObject) {
      throw Error(ErrorCode::NotDwyer, "left leg identifies " + a.object_name(preimage[f.obj_map[x]]) + " and " +
                                           a.object_name(x));
    }
    preimage[f.obj_map[x]] = x;
  }
  std::vector<MorIndex> mor_preimage(b.num_morphisms(), kNoMorphism);
  for (MorIndex m = 0; m < a.num_morphisms(); ++m) mor_preimage[f.mor_map[m]] = m;

  DwyerPushout out{span, nullptr, {}, {}, std::move(*check.witness), {}, {}, {}, {}};
  const auto& counits = out.witness.counits;
  CategoryBuilder builder;
  std::unordered_set<std::string> object_names;
  std::unordered_set<std::string> morphism_names;
  auto fresh = [](std::string name, std::unordered_set<std::string>& used) {
    while (!used.insert(name).second) name += "′";
    return name;
  };
  for (ObjIndex x = 0; x < c.num_objects(); ++x) {
    builder.add_object(fresh(c.object_name(x), object_names));
    out.b_object.push_back(kNoObject);
  }
  std::vector<ObjIndex> d_of_b(b.num_objects(), kNoObject);
  for (ObjIndex y = 0; y < b.num_objects(); ++y) {
    if (preimage[y] != kNoObject) continue;
    d_of_b[y] = builder.add_object(fresh(b.object_name(y), object_names));
    out.b_object.push_back(y);
  }
  auto add = [&](const std::string& id, ObjIndex s, ObjIndex t, Provenance p, MorIndex origin) {
    out.provenance.push_back(p);
    out.origin.push_back(origin);
    return builder.add_morphism(fresh(id, morphism_names), s, t);
  };
  for (MorIndex m = 0; m < c.num_morphisms(); ++m) add(c.morphism_id(m), c.src(m), c.dst(m), Provenance::FromC, m);
  std::vector<MorIndex> d_of_bmor(b.num_morphisms(), kNoMorphism);
  for (MorIndex m = 0; m < b.num_morphisms(); ++m) {
    if (d_of_b[b.src(m)] == kNoObject || d_of_b[b.dst(m)] == kNoObject) continue;
    d_of_bmor[m] = add(b.morphism_id(m), d_of_b[b.src(m)], d_of_b[b.dst(m)], Provenance::FromB, m);
  }
  // Mixed morphisms x -> y for x in C and y outside the image: Hom_C(x, g(R y)).
  const std::size_t nb = b.num_objects();
  std::unordered_map<std::size_t, MorIndex> mixed;  // h * nb + y
  for (ObjIndex y = 0; y < nb; ++y) {
    if (d_of_b[y] == kNoObject || !counits[y]) continue;
    const ObjIndex target = g.obj_map[counits[y]->reflection];
    for (ObjIndex x = 0; x < c.num_objects(); ++x)
      for (MorIndex h : c.hom(x, target)) {
        const MorIndex m = add(b.morphism_id(counits[y]->counit) + "∘" + c.morphism_id(h), x, d_of_b[y],
                               Provenance::Mixed, h);
        mixed.emplace(static_cast<std::size_t>(h) * nb + y, m);
      }
  }
  for (ObjIndex x = 0; x < c.num_objects(); ++x) builder.set_identity(x, c.identity(x));
  for (ObjIndex y = 0; y < nb; ++y)
    if (d_of_b[y] != kNoObject) builder.set_identity(d_of_b[y], d_of_bmor[b.identity(y)]);

  const auto provenance = out.provenance;
  const auto origin = out.origin;
  const auto b_object = out.b_object;
  std::vector<ObjIndex> d_dst(provenance.size());
  for (MorIndex m = 0; m < provenance.size(); ++m) d_dst[m] = builder.morphism(m).dst;
  auto mixed_at = [&](MorIndex h, ObjIndex y) { return mixed.at(static_cast<std::size_t>(h) * nb + y); };
  builder.set_composer([&](MorIndex gm, MorIndex fm) -> MorIndex {
    const Provenance pg = provenance[gm];
    const Provenance pf = provenance[fm];
    if (pf == Provenance::FromC && pg == Provenance::FromC) return c.compose(origin[gm], origin[fm]);
    if (pf == Provenance::FromB && pg == Provenance::FromB) return d_of_bmor[b.compose(origin[gm], origin[fm])];
    if (pf == Provenance::FromC && pg == Provenance::Mixed) {
      return mixed_at(c.compose(origin[gm], origin[fm]), b_object[d_dst[gm]]);
    }
    if (pf == Provenance::Mixed && pg == Provenance::FromB) {
      // R-functoriality: the unique comma morphism R y -> R y'.
      const MorIndex r = out.witness.reflect(origin[gm]);
      return mixed_at(c.compose(g.mor_map[r], origin[fm]), b_object[d_dst[gm]]);
    }
    return kNoMorphism;
  });
  out.d = share(std::move(builder).build(Validation::Full));

  out.fbar = Functor{span.right_cat(), out.d, {}, {}};
  for (ObjIndex x = 0; x < c.num_objects(); ++x) out.fbar.obj_map.push_back(x);
  for (MorIndex m = 0; m < c.num_morphisms(); ++m) out.fbar.mor_map.push_back(m);
  out.gbar = Functor{span.left_cat(), out.d, {}, {}};
  for (ObjIndex y = 0; y < nb; ++y) {
    out.gbar.obj_map.push_back(preimage[y] != kNoObject ? g.obj_map[preimage[y]] : d_of_b[y]);
  }
  for (MorIndex m = 0; m < b.num_morphisms(); ++m) {
    const ObjIndex s = b.src(m);
    const ObjIndex t = b.dst(m);
    if (preimage[s] != kNoObject && preimage[t] != kNoObject) {
      out.gbar.mor_map.push_back(g.mor_map[mor_preimage[m]]);
    } else if (preimage[s] != kNoObject) {
      const auto arrows = detail::comma_arrows(f, preimage[s], m, counits[t]->reflection, counits[t]->counit);
      if (arrows.size() != 1) throw Error(ErrorCode::NoTerminalObject, "counit at " + b.object_name(t) + " is not terminal");
      out.gbar.mor_map.push_back(mixed_at(g.mor_map[arrows.front()], t));
    } else {
      out.gbar.mor_map.push_back(d_of_bmor[m]);
    }
  }
  check_functor(out.fbar);
  check_functor(out.gbar);
  if (options.cross_check) {
    WordOracle oracle(span, options.word_bound);
    out.oracle = compare_with_oracle(oracle, *out.d, out.gbar, out.fbar);
    if (!out.oracle.agrees) throw Error(ErrorCode::OracleDisagreement, out.oracle.disagreement);
  }
  return out;
}

/// The functor D -> E induced by a cocone u : B -> E, v : C -> E with
/// u ∘ f = v ∘ g.
inline Functor induced_functor(const DwyerPushout& p, const Functor& u, const Functor& v) {
  const Functor& f = p.span.left;
  const Functor& g = p.span.right;
  const FinCat& a = *p.span.apex();
  for (ObjIndex x = 0; x < a.num_objects(); ++x)
    if (u.obj_map[f.obj_map[x]] != v.obj_map[g.obj_map[x]]) {
      throw Error(ErrorCode::NotFunctorial, "cocone does not commute at " + a.object_name(x));
    }
  for (MorIndex m = 0; m < a.num_morphisms(); ++m)
    if (u.mor_map[f.mor_map[m]] != v.mor_map[g.mor_map[m]]) {
      throw Error(ErrorCode::NotFunctorial, "cocone does not commute at " + a.morphism_id(m));
    }
  const FinCat& d = *p.d;
  const FinCat& e = *u.target;
  Functor out{p.d, u.target, {}, {}};
  for (ObjIndex x = 0; x < d.num_objects(); ++x)
    out.obj_map.push_back(p.b_object[x] == kNoObject ? v.obj_map[x] : u.obj_map[p.b_object[x]]);
  for (MorIndex m = 0; m < d.num_morphisms(); ++m) {
    switch (p.provenance[m]) {
      case Provenance::FromC: out.mor_map.push_back(v.mor_map[p.origin[m]]); break;
      case Provenance::FromB: out.mor_map.push_back(u.mor_map[p.origin[m]]); break;
      case Provenance::Mixed: {
        const ObjIndex y = p.b_object[d.dst(m)];
        out.mor_map.push_back(e.compose(u.mor_map[p.witness.counits[y]->counit], v.mor_map[p.origin[m]]));
        break;
      }
    }
  }
  check_functor(out);
  return out;
}

}  // namespace pushcat

#endif  // PUSHCAT_PUSHOUT_DWYER_PUSHOUT_HPP
