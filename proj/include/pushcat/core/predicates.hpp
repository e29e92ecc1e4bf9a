#ifndef PUSHCAT_CORE_PREDICATES_HPP
#define PUSHCAT_CORE_PREDICATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "pushcat/core/constructions.hpp"
#include "pushcat/core/functor.hpp"

namespace pushcat {

enum class FaithfulnessFailure { None, NotInjective, NotSurjective };

struct FullyFaithfulVerdict {
  bool holds = true;
  // Witness pair of source objects and the failing direction when !holds.
  ObjIndex x = kNoObject;
  ObjIndex y = kNoObject;
  FaithfulnessFailure failure = FaithfulnessFailure::None;

  explicit operator bool() const { return holds; }
};

inline FullyFaithfulVerdict is_fully_faithful(const Functor& f) {
  const FinCat& s = *f.source;
  const FinCat& t = *f.target;
  std::vector<int> seen(t.num_morphisms(), -1);
  int stamp = 0;
  for (ObjIndex x = 0; x < s.num_objects(); ++x) {
    for (ObjIndex y = 0; y < s.num_objects(); ++y, ++stamp) {
      const auto src_hom = s.hom(x, y);
      for (MorIndex m : src_hom) {
        const MorIndex fm = f.mor_map[m];
        if (seen[fm] == stamp) return {false, x, y, FaithfulnessFailure::NotInjective};
        seen[fm] = stamp;
      }
      if (t.hom(f.obj_map[x], f.obj_map[y]).size() != src_hom.size()) {
        return {false, x, y, FaithfulnessFailure::NotSurjective};
      }
    }
  }
  return {};
}

/// Target objects isomorphic to an object in the image of f.
inline std::vector<bool> essential_image(const Functor& f) {
  const FinCat& t = *f.target;
  std::vector<bool> in_image(t.num_objects(), false);
  for (ObjIndex x : f.obj_map) in_image[x] = true;
  std::vector<bool> ess = in_image;
  for (ObjIndex y = 0; y < t.num_objects(); ++y) {
    if (ess[y]) continue;
    for (ObjIndex z = 0; z < t.num_objects() && !ess[y]; ++z) {
      if (in_image[z] && find_isomorphism(t, y, z)) ess[y] = true;
    }
  }
  return ess;
}

struct SieveVerdict {
  bool holds = true;
  /// A morphism b -> F(a) with b outside the essential image.
  MorIndex witness = kNoMorphism;

  explicit operator bool() const { return holds; }
};

inline void require_fully_faithful(const Functor& f) {
  if (auto v = is_fully_faithful(f); !v) {
    throw Error(ErrorCode::NotFullyFaithful,
                "hom map " + f.source->object_name(v.x) + " -> " + f.source->object_name(v.y) + " is not " +
                    (v.failure == FaithfulnessFailure::NotInjective ? "injective" : "surjective"));
  }
}

/// Whether the essential image of a fully faithful f is closed under
/// precomposition. Throws NotFullyFaithful when the precondition fails.
inline SieveVerdict is_sieve(const Functor& f) {
  require_fully_faithful(f);
  const FinCat& t = *f.target;
  const auto ess = essential_image(f);
  for (MorIndex m = 0; m < t.num_morphisms(); ++m) {
    if (ess[t.dst(m)] && !ess[t.src(m)]) return {false, m};
  }
  return {};
}

/// The dual property: the essential image is closed under postcomposition.
inline SieveVerdict is_cosieve(const Functor& f) {
  require_fully_faithful(f);
  const FinCat& t = *f.target;
  const auto ess = essential_image(f);
  for (MorIndex m = 0; m < t.num_morphisms(); ++m) {
    if (ess[t.src(m)] && !ess[t.dst(m)]) return {false, m};
  }
  return {};
}

/// Terminal object (R b, counit f(R b) -> b) of A ×_B B_{/b}.
struct LocalCounit {
  ObjIndex reflection;  // object of A
  MorIndex counit;      // morphism f(reflection) -> b in B
};

struct DwyerWitness {
  Functor functor;
  /// One entry per object of B; empty when the comma category is empty.
  std::vector<std::optional<LocalCounit>> counits;

  /// The unique a -> a' with counit(b') ∘ f(a -> a') = beta ∘ counit(b) for
  /// beta : b -> b'. Requires counits at b and b'.
  MorIndex reflect(MorIndex beta) const;
};

namespace detail {

/// Morphisms u : a -> a' of A with phi' ∘ f(u) = phi.
inline std::vector<MorIndex> comma_arrows(const Functor& f, ObjIndex a, MorIndex phi, ObjIndex a2, MorIndex phi2) {
  std::vector<MorIndex> out;
  for (MorIndex u : f.source->hom(a, a2)) {
    if (f.target->compose(phi2, f.mor_map[u]) == phi) out.push_back(u);
  }
  return out;
}

}  // namespace detail

inline MorIndex DwyerWitness::reflect(MorIndex beta) const {
  const FinCat& b = *functor.target;
  const auto& from = counits[b.src(beta)];
  const auto& to = counits[b.dst(beta)];
  if (!from || !to) throw Error(ErrorCode::NotDwyer, "reflection requested where the comma category is empty");
  auto arrows = detail::comma_arrows(functor, from->reflection, b.compose(beta, from->counit), to->reflection,
                                     to->counit);
  if (arrows.size() != 1) {
    throw Error(ErrorCode::NoTerminalObject, "counit at " + b.object_name(b.dst(beta)) +
                                                 " is not terminal: " + std::to_string(arrows.size()) +
                                                 " comma morphisms");
  }
  return arrows.front();
}

struct DwyerCheck {
  std::optional<DwyerWitness> witness;
  std::optional<Error> failure;

  explicit operator bool() const { return witness.has_value(); }
};

/// Checks the Dwyer conditions: fully faithful, essential image a sieve, and a
/// terminal object in every nonempty comma A ×_B B_{/b}. For b = f(a) the
/// witness records (a, id_b).
inline DwyerCheck check_dwyer(const Functor& f) {
  if (auto v = is_fully_faithful(f); !v) {
    return {std::nullopt, Error(ErrorCode::NotFullyFaithful,
                                "hom map " + f.source->object_name(v.x) + " -> " + f.source->object_name(v.y) +
                                    " is not " +
                                    (v.failure == FaithfulnessFailure::NotInjective ? "injective" : "surjective"))};
  }
  if (auto s = is_sieve(f); !s) {
    const FinCat& t = *f.target;
    return {std::nullopt, Error(ErrorCode::NotSieve, "morphism " + t.morphism_id(s.witness) + " : " +
                                                         t.object_name(t.src(s.witness)) + " -> " +
                                                         t.object_name(t.dst(s.witness)) +
                                                         " enters the image from outside")};
  }
  const FinCat& a = *f.source;
  const FinCat& bcat = *f.target;
  DwyerWitness w{f, std::vector<std::optional<LocalCounit>>(bcat.num_objects())};
  for (ObjIndex b = 0; b < bcat.num_objects(); ++b) {
    std::vector<LocalCounit> objects;
    for (ObjIndex x = 0; x < a.num_objects(); ++x)
      for (MorIndex phi : bcat.hom(f.obj_map[x], b)) objects.push_back({x, phi});
    if (objects.empty()) continue;
    // Prefer (a, id) when b lies in the image so that the pushout square
    // commutes on the nose.
    std::stable_sort(objects.begin(), objects.end(), [&](const LocalCounit& p, const LocalCounit& q) {
      return bcat.is_identity(p.counit) > bcat.is_identity(q.counit);
    });
    std::optional<LocalCounit> terminal;
    for (const auto& cand : objects) {
      bool ok = true;
      for (const auto& k : objects) {
        if (detail::comma_arrows(f, k.reflection, k.counit, cand.reflection, cand.counit).size() != 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        terminal = cand;
        break;
      }
    }
    if (!terminal) {
      std::string listing;
      for (const auto& k : objects) {
        if (!listing.empty()) listing += ", ";
        listing += "(" + a.object_name(k.reflection) + ", " + bcat.morphism_id(k.counit) + ")";
      }
      return {std::nullopt, Error(ErrorCode::NoTerminalObject,
                                  "comma at " + bcat.object_name(b) + " has no terminal object; objects: " + listing)};
    }
    w.counits[b] = terminal;
  }
  return {std::move(w), std::nullopt};
}

inline DwyerWitness is_dwyer(const Functor& f) {
  auto check = check_dwyer(f);
  if (!check) throw *check.failure;
  return std::move(*check.witness);
}

}  // namespace pushcat

#endif  // PUSHCAT_CORE_PREDICATES_HPP
