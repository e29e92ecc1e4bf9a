#ifndef PUSHCAT_REEDY_EXTENSION_HPP
#define PUSHCAT_REEDY_EXTENSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "pushcat/kan.hpp"
#include "pushcat/reedy/complement.hpp"

namespace pushcat {

inline constexpr std::size_t kNoElement = static_cast<std::size_t>(-1);

/// Latching and matching objects of F at every complementary object, with the
/// canonical map between them.
struct Boundary {
  std::vector<ColimitAt> latching;
  std::vector<LimitAt> matching;
  /// canonical[c][l]: the matching family hit by latching class l.
  std::vector<std::vector<std::size_t>> canonical;
};

namespace detail {

/// Preimage of a morphism between objects in the image of A.
inline MorIndex preimage(const ReedyWitness& w, MorIndex m) {
  const FinCat& b = *w.inclusion.target;
  const ObjIndex s = w.a_of[b.src(m)];
  const ObjIndex t = w.a_of[b.dst(m)];
  for (MorIndex u : w.inclusion.source->hom(s, t))
    if (w.inclusion.mor_map[u] == m) return u;
  throw Error(ErrorCode::NotFullyFaithful, "no preimage for " + b.morphism_id(m));
}

}  // namespace detail

inline ColimitAt latching(const SetFunctor& f, const ReedyWitness& w, ObjIndex c) {
  return colimit_at(f, w.inclusion, w.j.obj_map[c]);
}

inline LimitAt matching(const SetFunctor& f, const ReedyWitness& w, ObjIndex c, std::size_t budget = 1'000'000) {
  return limit_at(f, w.inclusion, w.j.obj_map[c], budget);
}

inline Boundary boundary(const SetFunctor& f, const ReedyWitness& w, std::size_t budget = 1'000'000) {
  const FinCat& b = *w.inclusion.target;
  Boundary out;
  for (ObjIndex c = 0; c < w.complement->num_objects(); ++c) {
    ColimitAt lat = latching(f, w, c);
    LimitAt mat = matching(f, w, c, budget);
    std::vector<std::size_t> can(lat.size, kNoElement);
    for (std::size_t k = 0; k < lat.index.size(); ++k) {
      const ObjIndex a = lat.index[k][0];
      const MorIndex phi = lat.index[k][1];
      for (std::size_t x = 0; x < f.sizes[a]; ++x) {
        std::vector<std::size_t> family;
        for (const Tuple& t : mat.index) {
          const MorIndex u = detail::preimage(w, b.compose(t[1], phi));
          family.push_back(f.apply(u, x));
        }
        const std::size_t e = mat.find(family);
        if (e == kNoElement) throw Error(ErrorCode::CanonicalMapMismatch, "canonical family is not compatible");
        auto& slot = can[lat.element[k][x]];
        if (slot != kNoElement && slot != e) {
          throw Error(ErrorCode::CanonicalMapMismatch, "canonical map is not well defined on the latching object");
        }
        slot = e;
      }
    }
    out.latching.push_back(std::move(lat));
    out.matching.push_back(std::move(mat));
    out.canonical.push_back(std::move(can));
  }
  return out;
}

/// (F, G, λ, μ) with λ_c : latching -> G(c) and μ_c : G(c) -> matching, both
/// given as tables (μ by family index).
struct ReedyData {
  SetFunctor f;
  SetFunctor g;
  std::vector<std::vector<std::size_t>> lambda;
  std::vector<std::vector<std::size_t>> mu;
};

/// Naturality of λ and μ along the complementary morphism gamma.
inline std::string naturality_failure(const ReedyData& data, const Boundary& bd, const ReedyWitness& w, MorIndex gamma) {
  const FinCat& b = *w.inclusion.target;
  const FinCat& c = *w.complement;
  const ObjIndex s = c.src(gamma);
  const ObjIndex t = c.dst(gamma);
  const MorIndex jg = w.j.mor_map[gamma];
  const ColimitAt& ls = bd.latching[s];
  const ColimitAt& lt = bd.latching[t];
  for (std::size_t k = 0; k < ls.index.size(); ++k) {
    const std::size_t k2 = lt.find(ls.index[k][0], b.compose(jg, ls.index[k][1]));
    for (std::size_t x = 0; x < ls.element[k].size(); ++x) {
      if (data.lambda[t][lt.element[k2][x]] != data.g.apply(gamma, data.lambda[s][ls.element[k][x]])) {
        return "λ is not natural along " + c.morphism_id(gamma);
      }
    }
  }
  const LimitAt& ms = bd.matching[s];
  const LimitAt& mt = bd.matching[t];
  for (std::size_t y = 0; y < data.g.sizes[s]; ++y) {
    const auto& source_family = ms.families[data.mu[s][y]];
    const auto& target_family = mt.families[data.mu[t][data.g.apply(gamma, y)]];
    for (std::size_t k = 0; k < mt.index.size(); ++k) {
      const std::size_t k2 = ms.find_index(mt.index[k][0], b.compose(mt.index[k][1], jg));
      if (target_family[k] != source_family[k2]) return "μ is not natural along " + c.morphism_id(gamma);
    }
  }
  return {};
}

/// X|A, X|C and the canonical maps of X.
inline ReedyData restrict_functor(const SetFunctor& x, const ReedyWitness& w, const Boundary& bd) {
  ReedyData out{precompose(x, w.inclusion), precompose(x, w.j), {}, {}};
  for (ObjIndex c = 0; c < w.complement->num_objects(); ++c) {
    const ColimitAt& lat = bd.latching[c];
    const LimitAt& mat = bd.matching[c];
    std::vector<std::size_t> lambda(lat.size, kNoElement);
    for (std::size_t k = 0; k < lat.index.size(); ++k)
      for (std::size_t e = 0; e < lat.element[k].size(); ++e)
        lambda[lat.element[k][e]] = x.apply(lat.index[k][1], e);
    std::vector<std::size_t> mu;
    for (std::size_t y = 0; y < out.g.sizes[c]; ++y) {
      std::vector<std::size_t> family;
      for (const Tuple& t : mat.index) family.push_back(x.apply(t[1], y));
      mu.push_back(mat.find(family));
    }
    out.lambda.push_back(std::move(lambda));
    out.mu.push_back(std::move(mu));
  }
  return out;
}

inline ReedyData restrict_functor(const SetFunctor& x, const ReedyWitness& w) {
  return restrict_functor(x, w, boundary(precompose(x, w.inclusion), w));
}

/// The functor on B glued from pullback data. Checks μ ∘ λ = canonical map,
/// naturality, agreement across factorizations and functoriality.
inline SetFunctor reconstruct_functor(const ReedyData& data, const ReedyWitness& w, const Boundary& bd) {
  const FinCat& b = *w.inclusion.target;
  const FinCat& c = *w.complement;
  for (ObjIndex x = 0; x < b.num_objects(); ++x) {
    if (w.a_of[x] == kNoObject && w.c_of[x] == kNoObject) {
      throw Error(ErrorCode::IdentityFactors, b.object_name(x) + " is isomorphic to an object of A outside its image");
    }
  }
  for (ObjIndex x = 0; x < c.num_objects(); ++x) {
    const auto& lambda = data.lambda[x];
    const auto& mu = data.mu[x];
    if (lambda.size() != bd.latching[x].size || mu.size() != data.g.sizes[x]) {
      throw Error(ErrorCode::CanonicalMapMismatch, "λ or μ has the wrong domain at " + c.object_name(x));
    }
    for (std::size_t v : lambda)
      if (v >= data.g.sizes[x]) throw Error(ErrorCode::CanonicalMapMismatch, "λ leaves G(" + c.object_name(x) + ")");
    for (std::size_t v : mu)
      if (v >= bd.matching[x].size()) throw Error(ErrorCode::CanonicalMapMismatch, "μ leaves the matching object");
    for (std::size_t l = 0; l < lambda.size(); ++l) {
      if (mu[lambda[l]] != bd.canonical[x][l]) {
        throw Error(ErrorCode::CanonicalMapMismatch, "μ∘λ differs from the canonical map at " + c.object_name(x));
      }
    }
  }
  for (MorIndex gamma = 0; gamma < c.num_morphisms(); ++gamma) {
    if (auto why = naturality_failure(data, bd, w, gamma); !why.empty()) throw Error(ErrorCode::NotFunctorial, why);
  }

  SetFunctor out{w.inclusion.target, {}, {}};
  for (ObjIndex x = 0; x < b.num_objects(); ++x)
    out.sizes.push_back(w.a_of[x] != kNoObject ? data.f.sizes[w.a_of[x]] : data.g.sizes[w.c_of[x]]);
  // Maps on morphisms with at least one end in A.
  auto direct = [&](MorIndex m) {
    const ObjIndex s = b.src(m);
    const ObjIndex t = b.dst(m);
    std::vector<std::size_t> map;
    if (w.a_of[s] != kNoObject && w.a_of[t] != kNoObject) return data.f.maps[detail::preimage(w, m)];
    if (w.a_of[s] != kNoObject) {
      const ColimitAt& lat = bd.latching[w.c_of[t]];
      const std::size_t k = lat.find(w.a_of[s], m);
      for (std::size_t e = 0; e < data.f.sizes[w.a_of[s]]; ++e) map.push_back(data.lambda[w.c_of[t]][lat.element[k][e]]);
      return map;
    }
    const LimitAt& mat = bd.matching[w.c_of[s]];
    const std::size_t k = mat.find_index(w.a_of[t], m);
    for (std::size_t y = 0; y < data.g.sizes[w.c_of[s]]; ++y) map.push_back(mat.families[data.mu[w.c_of[s]][y]][k]);
    return map;
  };
  std::vector<MorIndex> local(b.num_morphisms(), kNoMorphism);
  for (MorIndex m = 0; m < w.j.mor_map.size(); ++m) local[w.j.mor_map[m]] = m;
  for (MorIndex m = 0; m < b.num_morphisms(); ++m) {
    const ObjIndex s = b.src(m);
    const ObjIndex t = b.dst(m);
    if (w.a_of[s] != kNoObject || w.a_of[t] != kNoObject) {
      out.maps.push_back(direct(m));
    } else if (local[m] != kNoMorphism) {
      out.maps.push_back(data.g.maps[local[m]]);
    } else {
      std::optional<std::vector<std::size_t>> chosen;
      for (ObjIndex a = 0; a < w.inclusion.source->num_objects(); ++a) {
        const ObjIndex ia = w.inclusion.obj_map[a];
        for (MorIndex alpha : b.hom(s, ia))
          for (MorIndex beta : b.hom(ia, t)) {
            if (b.compose(beta, alpha) != m) continue;
            const auto first = direct(alpha);
            const auto second = direct(beta);
            std::vector<std::size_t> map;
            for (std::size_t v : first) map.push_back(second[v]);
            if (chosen && *chosen != map) {
              throw Error(ErrorCode::RepresentativeDisagreement,
                          "factorizations of " + b.morphism_id(m) + " induce different maps");
            }
            chosen = std::move(map);
          }
      }
      if (!chosen) throw Error(ErrorCode::NotMono, b.morphism_id(m) + " is neither complementary nor factoring");
      out.maps.push_back(std::move(*chosen));
    }
  }
  check_set_functor(out);
  return out;
}

inline SetFunctor reconstruct_functor(const ReedyData& data, const ReedyWitness& w) {
  return reconstruct_functor(data, w, boundary(data.f, w));
}

}  // namespace pushcat

#endif  // PUSHCAT_REEDY_EXTENSION_HPP
