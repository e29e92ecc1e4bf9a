#ifndef PUSHCAT_REEDY_COMPLEMENT_HPP
#define PUSHCAT_REEDY_COMPLEMENT_HPP

#include <string>
#include <vector>

#include "pushcat/comma.hpp"
#include "pushcat/sset/homology.hpp"
#include "pushcat/sset/nerve.hpp"

namespace pushcat {

/// The factorizations c0 -> i(a) -> c1 of one pair of complementary objects.
struct PairCertificate {
  ObjIndex c0 = 0;  // objects of the complement
  ObjIndex c1 = 0;
  std::size_t components = 0;
  /// The composite each component maps to, as a morphism of B.
  std::vector<MorIndex> component_morphism;
  std::vector<ContractibilityReport> contractible;
  std::size_t hom_c = 0;
  std::size_t hom_b = 0;
  /// π0(factorizations) ⊔ Hom_C -> Hom_B is a bijection.
  bool bijective = false;

  bool holds() const {
    if (!bijective) return false;
    for (const auto& r : contractible)
      if (!r) return false;
    return true;
  }
};

struct ReedyWitness {
  Functor inclusion;  // A -> B
  CatPtr complement;  // C
  Functor j;          // C -> B
  /// Per object of B: its preimage in A, or kNoObject.
  std::vector<ObjIndex> a_of;
  /// Per object of B: its index in C, or kNoObject.
  std::vector<ObjIndex> c_of;
  /// Per morphism of B between objects of C: whether it factors through A.
  std::vector<bool> factors;
  std::vector<PairCertificate> pairs;
  std::size_t truncation = 0;
};

namespace detail {

/// Morphisms m of B that can be written β ∘ α through some i(a).
inline std::vector<bool> factors_through(const Functor& i) {
  const FinCat& b = *i.target;
  std::vector<bool> out(b.num_morphisms(), false);
  for (ObjIndex a = 0; a < i.source->num_objects(); ++a) {
    const ObjIndex ia = i.obj_map[a];
    for (ObjIndex x = 0; x < b.num_objects(); ++x)
      for (MorIndex alpha : b.hom(x, ia))
        for (MorIndex beta : b.out(ia)) out[b.compose(beta, alpha)] = true;
  }
  return out;
}

inline void require_injective_on_objects(const Functor& i) {
  std::vector<bool> hit(i.target->num_objects(), false);
  for (ObjIndex a = 0; a < i.source->num_objects(); ++a) {
    if (hit[i.obj_map[a]]) {
      throw Error(ErrorCode::NotFullyFaithful, "inclusion identifies objects at " + i.source->object_name(a));
    }
    hit[i.obj_map[a]] = true;
  }
}

}  // namespace detail

/// Objects not isomorphic to any object of A and the morphisms between them
/// that do not factor through A. Throws IdentityFactors, CompositionEscapes or
/// NotMono when the complement is not well defined.
inline ReedyWitness find_complementary(const Functor& i, std::size_t truncation = 4) {
  require_fully_faithful(i);
  detail::require_injective_on_objects(i);
  if (truncation < 2) throw Error(ErrorCode::TruncationTooLow, "contractibility needs truncation at least 2");
  const FinCat& b = *i.target;
  ReedyWitness w;
  w.inclusion = i;
  w.truncation = truncation;
  w.a_of.assign(b.num_objects(), kNoObject);
  w.c_of.assign(b.num_objects(), kNoObject);
  for (ObjIndex a = 0; a < i.source->num_objects(); ++a) w.a_of[i.obj_map[a]] = a;
  w.factors = detail::factors_through(i);

  std::vector<ObjIndex> objects;
  for (ObjIndex x = 0; x < b.num_objects(); ++x) {
    bool near_a = false;
    for (ObjIndex a = 0; a < i.source->num_objects() && !near_a; ++a)
      near_a = find_isomorphism(b, i.obj_map[a], x).has_value();
    if (near_a) continue;
    if (w.factors[b.identity(x)]) {
      throw Error(ErrorCode::IdentityFactors, "identity of " + b.object_name(x) + " factors through A");
    }
    w.c_of[x] = static_cast<ObjIndex>(objects.size());
    objects.push_back(x);
  }

  CategoryBuilder cb;
  std::vector<MorIndex> local(b.num_morphisms(), kNoMorphism);
  std::vector<MorIndex> kept;
  for (ObjIndex x : objects) cb.add_object(b.object_name(x));
  for (MorIndex m = 0; m < b.num_morphisms(); ++m) {
    if (w.c_of[b.src(m)] == kNoObject || w.c_of[b.dst(m)] == kNoObject || w.factors[m]) continue;
    local[m] = cb.add_morphism(b.morphism_id(m), w.c_of[b.src(m)], w.c_of[b.dst(m)]);
    kept.push_back(m);
  }
  for (MorIndex f : kept)
    for (MorIndex g : kept) {
      if (b.dst(f) != b.src(g)) continue;
      if (w.factors[b.compose(g, f)]) {
        throw Error(ErrorCode::CompositionEscapes,
                    b.morphism_id(g) + "∘" + b.morphism_id(f) + " factors through A although neither factor does");
      }
    }
  for (ObjIndex x : objects) cb.set_identity(w.c_of[x], local[b.identity(x)]);
  cb.set_composer([&](MorIndex g, MorIndex f) { return local[b.compose(kept[g], kept[f])]; });
  w.complement = share(std::move(cb).build(Validation::Inherited));
  w.j = Functor{w.complement, i.target, objects, kept};

  const Span both{i, i};
  for (ObjIndex c0 : objects)
    for (ObjIndex c1 : objects) {
      PairCertificate p;
      p.c0 = w.c_of[c0];
      p.c1 = w.c_of[c1];
      const CommaCat fact = comma_triple(both, c0, c1, Orientation::BToC);
      const auto [label, count] = components(*fact.cat);
      p.components = count;
      p.component_morphism.assign(count, kNoMorphism);
      for (ObjIndex o = 0; o < fact.cat->num_objects(); ++o) {
        const Tuple& t = fact.object_tuples[o];
        p.component_morphism[label[o]] = b.compose(t[2], t[0]);
      }
      std::vector<std::size_t> hits(b.num_morphisms(), 0);
      for (std::size_t k = 0; k < count; ++k) {
        if (++hits[p.component_morphism[k]] > 1) {
          throw Error(ErrorCode::NotMono, "two factorization components of " + b.morphism_id(p.component_morphism[k]) +
                                              " : " + b.object_name(c0) + " -> " + b.object_name(c1));
        }
      }
      for (std::size_t k = 0; k < count; ++k) {
        std::vector<ObjIndex> members;
        for (ObjIndex o = 0; o < fact.cat->num_objects(); ++o)
          if (label[o] == k) members.push_back(o);
        const Subcategory comp = full_subcategory(fact.cat, members);
        p.contractible.push_back(is_weakly_contractible_up_to(nerve(comp.cat, truncation)));
      }
      const auto hom = b.hom(c0, c1);
      p.hom_b = hom.size();
      for (MorIndex m : hom) {
        if (local[m] != kNoMorphism) {
          ++p.hom_c;
          ++hits[m];
        }
      }
      p.bijective = true;
      for (MorIndex m : hom) p.bijective = p.bijective && hits[m] == 1;
      w.pairs.push_back(std::move(p));
    }
  return w;
}

struct ReedyVerdict {
  bool holds = false;
  std::size_t truncation = 0;
  ReedyWitness witness;
  std::string detail;

  explicit operator bool() const { return holds; }
};

/// Every factorization component is contractible up to the truncation and
/// π0 ⊔ Hom_C -> Hom_B is a bijection for every pair of complementary objects.
inline ReedyVerdict is_reedy_extension(const Functor& i, std::size_t truncation = 4) {
  ReedyVerdict v;
  v.truncation = truncation;
  v.witness = find_complementary(i, truncation);
  const FinCat& c = *v.witness.complement;
  v.holds = true;
  for (const auto& p : v.witness.pairs) {
    if (p.holds()) continue;
    v.holds = false;
    v.detail = "pair (" + c.object_name(p.c0) + ", " + c.object_name(p.c1) + "): ";
    if (!p.bijective) {
      v.detail += std::to_string(p.components) + " factorization components and " + std::to_string(p.hom_c) +
                  " complementary morphisms against " + std::to_string(p.hom_b) + " morphisms";
    } else {
      for (const auto& r : p.contractible)
        if (!r) {
          v.detail += "factorization component not contractible (" + r.reason + ")";
          break;
        }
    }
    break;
  }
  return v;
}

}  // namespace pushcat

#endif  // PUSHCAT_REEDY_COMPLEMENT_HPP
