#ifndef PUSHCAT_CORE_FINCAT_HPP
#define PUSHCAT_CORE_FINCAT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pushcat/error.hpp"

namespace pushcat {

using ObjIndex = std::uint32_t;
using MorIndex = std::uint32_t;
inline constexpr MorIndex kNoMorphism = std::numeric_limits<MorIndex>::max();
inline constexpr ObjIndex kNoObject = std::numeric_limits<ObjIndex>::max();

struct MorphismInfo {
  std::string id;
  ObjIndex src;
  ObjIndex dst;
};

class FinCat;
using CatPtr = std::shared_ptr<const FinCat>;

/// A finite category with a fully tabulated composition law.
///
/// Morphisms carry globally unique ids and hom-sets are derived views over the
/// morphism list. Instances are immutable once built; construct them through
/// CategoryBuilder (which validates) or the derived constructions.
class FinCat {
 public:
  FinCat() = default;

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }

  const std::string& object_name(ObjIndex x) const { return objects_[x]; }
  const std::vector<std::string>& object_names() const { return objects_; }
  const MorphismInfo& morphism(MorIndex m) const { return morphisms_[m]; }
  const std::string& morphism_id(MorIndex m) const { return morphisms_[m].id; }
  ObjIndex src(MorIndex m) const { return morphisms_[m].src; }
  ObjIndex dst(MorIndex m) const { return morphisms_[m].dst; }
  MorIndex identity(ObjIndex x) const { return identities_[x]; }
  bool is_identity(MorIndex m) const { return identities_[morphisms_[m].src] == m; }

  /// All morphisms x -> y.
  std::span<const MorIndex> hom(ObjIndex x, ObjIndex y) const {
    const std::size_t cell = static_cast<std::size_t>(x) * objects_.size() + y;
    return {hom_order_.data() + hom_offset_[cell], hom_order_.data() + hom_offset_[cell + 1]};
  }

  /// All morphisms with source x.
  std::span<const MorIndex> out(ObjIndex x) const {
    const std::size_t row = static_cast<std::size_t>(x) * objects_.size();
    return {hom_order_.data() + hom_offset_[row],
            hom_order_.data() + hom_offset_[row + objects_.size()]};
  }

  bool composable(MorIndex g, MorIndex f) const { return dst(f) == src(g); }

  /// g ∘ f. Returns kNoMorphism when dst(f) != src(g).
  MorIndex compose(MorIndex g, MorIndex f) const {
    if (!composable(g, f)) return kNoMorphism;
    return composites_[composite_offset_[f] + out_pos_[g]];
  }

  std::optional<ObjIndex> find_object(std::string_view name) const {
    auto it = object_lookup_.find(std::string(name));
    if (it == object_lookup_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<MorIndex> find_morphism(std::string_view id) const {
    auto it = morphism_lookup_.find(std::string(id));
    if (it == morphism_lookup_.end()) return std::nullopt;
    return it->second;
  }

  /// Bit-exact equality of tables, names included.
  friend bool operator==(const FinCat& a, const FinCat& b) {
    if (a.objects_ != b.objects_ || a.identities_ != b.identities_) return false;
    if (a.morphisms_.size() != b.morphisms_.size()) return false;
    for (std::size_t m = 0; m < a.morphisms_.size(); ++m) {
      const auto& x = a.morphisms_[m];
      const auto& y = b.morphisms_[m];
      if (x.id != y.id || x.src != y.src || x.dst != y.dst) return false;
    }
    for (MorIndex f = 0; f < a.morphisms_.size(); ++f) {
      for (MorIndex g : a.out(a.dst(f))) {
        if (a.compose(g, f) != b.compose(g, f)) return false;
      }
    }
    return true;
  }

 private:
  friend class CategoryBuilder;

  std::vector<std::string> objects_;
  std::vector<MorphismInfo> morphisms_;
  std::vector<MorIndex> identities_;
  // Morphisms sorted by (src, dst); hom_offset_ has n*n+1 entries.
  std::vector<MorIndex> hom_order_;
  std::vector<std::uint32_t> hom_offset_;
  // Position of each morphism inside out(src(m)).
  std::vector<std::uint32_t> out_pos_;
  // composites_[composite_offset_[f] + out_pos_[g]] = g∘f for src(g) = dst(f).
  std::vector<std::size_t> composite_offset_;
  std::vector<MorIndex> composites_;
  std::unordered_map<std::string, ObjIndex> object_lookup_;
  std::unordered_map<std::string, MorIndex> morphism_lookup_;
};

enum class Validation {
  /// Units, totality, typing and associativity are all checked.
  Full,
  /// Associativity is skipped; used for constructions whose composition law is
  /// inherited componentwise from already validated categories.
  Inherited,
};

/// Accumulates objects, morphisms and composites, then validates eagerly.
class CategoryBuilder {
 public:
  ObjIndex add_object(std::string name) {
    objects_.push_back(std::move(name));
    identities_.push_back(kNoMorphism);
    return static_cast<ObjIndex>(objects_.size() - 1);
  }

  MorIndex add_morphism(std::string id, ObjIndex src, ObjIndex dst) {
    morphisms_.push_back({std::move(id), src, dst});
    return static_cast<MorIndex>(morphisms_.size() - 1);
  }

  /// Adds an identity morphism for x and records it as such.
  MorIndex add_identity(ObjIndex x, std::string id) {
    MorIndex m = add_morphism(std::move(id), x, x);
    identities_[x] = m;
    return m;
  }

  void set_identity(ObjIndex x, MorIndex m) { identities_[x] = m; }

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }
  const MorphismInfo& morphism(MorIndex m) const { return morphisms_[m]; }

  void set_composite(MorIndex g, MorIndex f, MorIndex gf) { explicit_.push_back({g, f, gf}); }

  /// Fill every composable pair from a callback (identities handled by the
  /// callback as well). Entries added with set_composite take precedence.
  void set_composer(std::function<MorIndex(MorIndex g, MorIndex f)> composer) {
    composer_ = std::move(composer);
  }

  FinCat build(Validation validation = Validation::Full) &&;

 private:
  struct Entry {
    MorIndex g, f, gf;
  };
  std::vector<std::string> objects_;
  std::vector<MorphismInfo> morphisms_;
  std::vector<MorIndex> identities_;
  std::vector<Entry> explicit_;
  std::function<MorIndex(MorIndex, MorIndex)> composer_;
};

namespace detail {

inline std::string triple_witness(const FinCat& c, MorIndex h, MorIndex g, MorIndex f) {
  return "(" + c.morphism_id(h) + ", " + c.morphism_id(g) + ", " + c.morphism_id(f) + ")";
}

}  // namespace detail

/// Exhaustive unit and associativity scan; throws on the first violation.
inline void check_category_axioms(const FinCat& c, bool associativity = true) {
  for (MorIndex f = 0; f < c.num_morphisms(); ++f) {
    const MorIndex left = c.compose(c.identity(c.dst(f)), f);
    const MorIndex right = c.compose(f, c.identity(c.src(f)));
    if (left != f || right != f) {
      throw Error(ErrorCode::MissingIdentity, "identity is not a two-sided unit for " + c.morphism_id(f));
    }
  }
  if (!associativity) return;
  for (MorIndex f = 0; f < c.num_morphisms(); ++f) {
    for (MorIndex g : c.out(c.dst(f))) {
      const MorIndex gf = c.compose(g, f);
      for (MorIndex h : c.out(c.dst(g))) {
        if (c.compose(c.compose(h, g), f) != c.compose(h, gf)) {
          throw Error(ErrorCode::NonAssociative, "(h∘g)∘f != h∘(g∘f) for (h, g, f) = " +
                                                     detail::triple_witness(c, h, g, f));
        }
      }
    }
  }
}

inline FinCat CategoryBuilder::build(Validation validation) && {
  FinCat c;
  const std::size_t n = objects_.size();
  const std::size_t m = morphisms_.size();

  for (std::size_t x = 0; x < n; ++x) {
    if (!c.object_lookup_.emplace(objects_[x], static_cast<ObjIndex>(x)).second) {
      throw Error(ErrorCode::DanglingReference, "duplicate object id '" + objects_[x] + "'");
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    const auto& info = morphisms_[k];
    if (info.src >= n || info.dst >= n) {
      throw Error(ErrorCode::DanglingReference, "morphism '" + info.id + "' references an unknown object");
    }
    if (!c.morphism_lookup_.emplace(info.id, static_cast<MorIndex>(k)).second) {
      throw Error(ErrorCode::DanglingReference, "duplicate morphism id '" + info.id + "'");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    const MorIndex id = identities_[x];
    if (id == kNoMorphism) {
      throw Error(ErrorCode::MissingIdentity, "object '" + objects_[x] + "' has no identity");
    }
    if (id >= m || morphisms_[id].src != x || morphisms_[id].dst != x) {
      throw Error(ErrorCode::MissingIdentity,
                  "identity of '" + objects_[x] + "' is not an endomorphism of it");
    }
  }

  // hom index
  c.hom_order_.resize(m);
  std::iota(c.hom_order_.begin(), c.hom_order_.end(), MorIndex{0});
  std::stable_sort(c.hom_order_.begin(), c.hom_order_.end(), [&](MorIndex a, MorIndex b) {
    const auto& x = morphisms_[a];
    const auto& y = morphisms_[b];
    return std::pair(x.src, x.dst) < std::pair(y.src, y.dst);
  });
  c.hom_offset_.assign(n * n + 1, 0);
  for (const auto& info : morphisms_) ++c.hom_offset_[static_cast<std::size_t>(info.src) * n + info.dst + 1];
  for (std::size_t k = 1; k < c.hom_offset_.size(); ++k) c.hom_offset_[k] += c.hom_offset_[k - 1];
  c.out_pos_.assign(m, 0);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t begin = c.hom_offset_[x * n];
    const std::size_t end = c.hom_offset_[x * n + n];
    for (std::size_t k = begin; k < end; ++k) c.out_pos_[c.hom_order_[k]] = static_cast<std::uint32_t>(k - begin);
  }

  c.objects_ = std::move(objects_);
  c.morphisms_ = std::move(morphisms_);
  c.identities_ = std::move(identities_);

  // composition table
  c.composite_offset_.assign(m, 0);
  std::size_t total = 0;
  for (std::size_t f = 0; f < m; ++f) {
    c.composite_offset_[f] = total;
    total += c.out(c.morphisms_[f].dst).size();
  }
  c.composites_.assign(total, kNoMorphism);

  auto store = [&](MorIndex g, MorIndex f, MorIndex gf) {
    if (g >= m || f >= m || gf >= m) {
      throw Error(ErrorCode::DanglingReference, "composition entry references an unknown morphism");
    }
    if (c.morphisms_[f].dst != c.morphisms_[g].src) {
      throw Error(ErrorCode::PartialComposition, "entry for non-composable pair (" + c.morphisms_[g].id +
                                                     ", " + c.morphisms_[f].id + ")");
    }
    if (c.morphisms_[gf].src != c.morphisms_[f].src || c.morphisms_[gf].dst != c.morphisms_[g].dst) {
      throw Error(ErrorCode::PartialComposition, "composite of (" + c.morphisms_[g].id + ", " +
                                                     c.morphisms_[f].id + ") has wrong endpoints");
    }
    MorIndex& slot = c.composites_[c.composite_offset_[f] + c.out_pos_[g]];
    if (slot != kNoMorphism && slot != gf) {
      throw Error(ErrorCode::PartialComposition, "conflicting entries for (" + c.morphisms_[g].id + ", " +
                                                     c.morphisms_[f].id + ")");
    }
    slot = gf;
  };

  for (const auto& e : explicit_) store(e.g, e.f, e.gf);
  // Units are implied.
  for (std::size_t f = 0; f < m; ++f) {
    const auto fi = static_cast<MorIndex>(f);
    MorIndex& left = c.composites_[c.composite_offset_[f] + c.out_pos_[c.identities_[c.morphisms_[f].dst]]];
    if (left == kNoMorphism) left = fi;
    const MorIndex id_src = c.identities_[c.morphisms_[f].src];
    MorIndex& right = c.composites_[c.composite_offset_[id_src] + c.out_pos_[fi]];
    if (right == kNoMorphism) right = fi;
  }
  if (composer_) {
    for (std::size_t f = 0; f < m; ++f) {
      for (MorIndex g : c.out(c.morphisms_[f].dst)) {
        if (c.composites_[c.composite_offset_[f] + c.out_pos_[g]] != kNoMorphism) continue;
        store(g, static_cast<MorIndex>(f), composer_(g, static_cast<MorIndex>(f)));
      }
    }
  }
  for (std::size_t f = 0; f < m; ++f) {
    for (MorIndex g : c.out(c.morphisms_[f].dst)) {
      if (c.composites_[c.composite_offset_[f] + c.out_pos_[g]] == kNoMorphism) {
        throw Error(ErrorCode::PartialComposition,
                    "missing composite for (" + c.morphisms_[g].id + ", " + c.morphisms_[f].id + ")");
      }
    }
  }

  check_category_axioms(c, validation == Validation::Full);
  return c;
}

inline CatPtr share(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

// ---------------------------------------------------------------------------
// Raw descriptions
// ---------------------------------------------------------------------------

struct RawMorphism {
  std::string id;
  std::string src;
  std::string dst;
};

struct RawComposite {
  std::string g;
  std::string f;
  std::string result;
};

/// Name-based description of a category; the shape of the on-disk format.
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;
  /// object -> identity id. Objects missing here get "id_<object>".
  std::vector<std::pair<std::string, std::string>> identities;
  /// Entries involving identities may be omitted.
  std::vector<RawComposite> compose;
};

/// Validates a raw description into a FinCat. Identity morphisms listed in
/// `identities` but absent from `morphisms` are added.
inline FinCat validate_category(const RawCategory& raw) {
  CategoryBuilder b;
  std::unordered_map<std::string, ObjIndex> obj;
  for (const auto& name : raw.objects) {
    if (!obj.emplace(name, b.add_object(name)).second) {
      throw Error(ErrorCode::DanglingReference, "duplicate object id '" + name + "'");
    }
  }
  auto lookup_obj = [&](const std::string& name, const std::string& context) {
    auto it = obj.find(name);
    if (it == obj.end()) throw Error(ErrorCode::DanglingReference, context + " references unknown object '" + name + "'");
    return it->second;
  };
  std::unordered_map<std::string, MorIndex> mor;
  for (const auto& rm : raw.morphisms) {
    const ObjIndex s = lookup_obj(rm.src, "morphism '" + rm.id + "'");
    const ObjIndex t = lookup_obj(rm.dst, "morphism '" + rm.id + "'");
    if (!mor.emplace(rm.id, b.add_morphism(rm.id, s, t)).second) {
      throw Error(ErrorCode::DanglingReference, "duplicate morphism id '" + rm.id + "'");
    }
  }
  std::vector<bool> has_identity(raw.objects.size(), false);
  for (const auto& [o, id] : raw.identities) {
    const ObjIndex x = lookup_obj(o, "identity entry");
    auto it = mor.find(id);
    MorIndex m;
    if (it == mor.end()) {
      m = b.add_morphism(id, x, x);
      mor.emplace(id, m);
    } else {
      m = it->second;
    }
    b.set_identity(x, m);
    has_identity[x] = true;
  }
  for (ObjIndex x = 0; x < raw.objects.size(); ++x) {
    if (has_identity[x]) continue;
    const std::string id = "id_" + raw.objects[x];
    if (mor.count(id)) {
      throw Error(ErrorCode::MissingIdentity, "object '" + raw.objects[x] + "' has no declared identity");
    }
    const MorIndex m = b.add_morphism(id, x, x);
    mor.emplace(id, m);
    b.set_identity(x, m);
  }
  auto lookup_mor = [&](const std::string& id) {
    auto it = mor.find(id);
    if (it == mor.end()) throw Error(ErrorCode::DanglingReference, "composition references unknown morphism '" + id + "'");
    return it->second;
  };
  for (const auto& e : raw.compose) b.set_composite(lookup_mor(e.g), lookup_mor(e.f), lookup_mor(e.result));
  return std::move(b).build(Validation::Full);
}

/// Inverse of validate_category. Objects and morphisms are emitted sorted by
/// id; composites with an identity factor are omitted.
inline RawCategory to_raw(const FinCat& c) {
  RawCategory raw;
  raw.objects = c.object_names();
  std::sort(raw.objects.begin(), raw.objects.end());
  std::vector<MorIndex> order(c.num_morphisms());
  std::iota(order.begin(), order.end(), MorIndex{0});
  std::sort(order.begin(), order.end(), [&](MorIndex a, MorIndex b) { return c.morphism_id(a) < c.morphism_id(b); });
  for (MorIndex m : order) {
    raw.morphisms.push_back({c.morphism_id(m), c.object_name(c.src(m)), c.object_name(c.dst(m))});
  }
  for (const auto& name : raw.objects) {
    raw.identities.emplace_back(name, c.morphism_id(c.identity(*c.find_object(name))));
  }
  for (MorIndex g : order) {
    if (c.is_identity(g)) continue;
    for (MorIndex f : order) {
      if (c.is_identity(f) || !c.composable(g, f)) continue;
      raw.compose.push_back({c.morphism_id(g), c.morphism_id(f), c.morphism_id(c.compose(g, f))});
    }
  }
  return raw;
}

/// Renumbers objects and morphisms into sorted-id order, so that equal
/// categories up to index permutation compare equal with operator==.
inline FinCat canonicalize(const FinCat& c) { return validate_category(to_raw(c)); }

}  // namespace pushcat

#endif  // PUSHCAT_CORE_FINCAT_HPP
