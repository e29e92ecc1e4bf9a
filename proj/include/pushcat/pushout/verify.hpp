#ifndef PUSHCAT_PUSHOUT_VERIFY_HPP
#define PUSHCAT_PUSHOUT_VERIFY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pushcat/kan.hpp"
#include "pushcat/pushout/dwyer_pushout.hpp"
#include "pushcat/pushout/mapspace.hpp"

namespace pushcat {

enum class SquareVerdict { Consistent, Inconsistent };

inline std::string to_string(SquareVerdict v) { return v == SquareVerdict::Consistent ? "CONSISTENT" : "INCONSISTENT"; }

/// Homology of a double mapping cylinder against the discrete set that the
/// square claims it is equivalent to.
struct SquareCheck {
  SquareVerdict verdict = SquareVerdict::Inconsistent;
  std::size_t truncation = 0;
  ObjIndex b0 = 0;
  ObjIndex b1 = 0;
  /// Sizes of the four corners: top-left, top-right (or bottom-left), ...
  std::vector<std::size_t> corners;
  HomologyReport cylinder;
  HomologyReport expected;
  std::string detail;

  explicit operator bool() const { return verdict == SquareVerdict::Consistent; }
};

namespace detail {

inline void compare_homology(SquareCheck& out, const TruncatedSSet& cylinder, std::size_t expected_size) {
  out.cylinder = homology(cylinder);
  out.expected = homology(discrete_sset(expected_size, cylinder.dim));
  if (out.cylinder == out.expected) {
    out.verdict = SquareVerdict::Consistent;
    return;
  }
  for (std::size_t n = 0; n < out.cylinder.groups.size(); ++n)
    if (!(out.cylinder.groups[n] == out.expected.groups[n])) {
      out.detail = "H_" + std::to_string(n) + " = " + to_string(out.cylinder.groups[n]) + ", expected " +
                   to_string(out.expected.groups[n]);
      return;
    }
}

/// Discrete simplicial map given on vertices.
inline SimplicialMap discrete_map(std::shared_ptr<const TruncatedSSet> source, std::shared_ptr<const TruncatedSSet> target,
                                  const std::vector<SimplexIndex>& values) {
  SimplicialMap f{source, target, std::vector<std::vector<SimplexIndex>>(source->dim + 1, values)};
  check_simplicial_map(f);
  return f;
}

inline std::size_t position(std::span<const MorIndex> hom, MorIndex m) {
  return static_cast<std::size_t>(std::find(hom.begin(), hom.end(), m) - hom.begin());
}

}  // namespace detail

/// |Map_D(ḡb0, ḡb1)| from an independent description of D, when one exists:
/// the Dwyer pushout, or for sieve spans the cases not involving the image.
inline std::size_t known_map_size(const Span& span, const std::optional<DwyerPushout>& pushout, ObjIndex b0, ObjIndex b1) {
  if (pushout) return pushout->d->hom(pushout->gbar.obj_map[b0], pushout->gbar.obj_map[b1]).size();
  if (!is_sieve(span.left)) throw Error(ErrorCode::NotCertifiable, "left leg is neither Dwyer nor a sieve");
  const FinCat& a = *span.apex();
  std::optional<ObjIndex> a0;
  std::optional<ObjIndex> a1;
  for (ObjIndex x = 0; x < a.num_objects(); ++x) {
    if (span.left.obj_map[x] == b0) a0 = x;
    if (span.left.obj_map[x] == b1) a1 = x;
  }
  if (!a0) return span.left_cat()->hom(b0, b1).size();
  if (a0 && a1) return span.right_cat()->hom(span.right.obj_map[*a0], span.right.obj_map[*a1]).size();
  throw Error(ErrorCode::NotCertifiable, "sieve span with " + span.left_cat()->object_name(b0) +
                                             " in the image and " + span.left_cat()->object_name(b1) + " outside");
}

/// The square N(top) -> Hom_B(b0, b1), N(top) -> N(bottom) over Map_D(ḡb0, ḡb1).
inline SquareCheck verify_fourth_square(const Span& span, ObjIndex b0, ObjIndex b1, std::size_t truncation,
                                        const std::optional<DwyerPushout>& pushout) {
  require_fully_faithful(span.left);
  if (truncation < 2) throw Error(ErrorCode::TruncationTooLow, "square checks need truncation at least 2");
  const std::size_t expected = known_map_size(span, pushout, b0, b1);
  SquareCheck out;
  out.truncation = truncation;
  out.b0 = b0;
  out.b1 = b1;
  detail::FourthCylinder fc = detail::fourth_cylinder(span, b0, b1, truncation);
  out.corners = {fc.top->count[0], fc.hom->count[0], fc.bottom->count[0], expected};
  detail::compare_homology(out, fc.cylinder, expected);
  return out;
}

inline SquareCheck verify_fourth_square(const Span& span, ObjIndex b0, ObjIndex b1, std::size_t truncation = 4) {
  std::optional<DwyerPushout> pushout;
  if (check_dwyer(span.left)) pushout = dwyer_pushout(span, {truncation, 8, false});
  return verify_fourth_square(span, b0, b1, truncation, pushout);
}

/// Every pair (b0, b1); stops at the first inconsistent pair.
inline std::vector<SquareCheck> verify_fourth_square_all(const Span& span, std::size_t truncation = 4) {
  std::optional<DwyerPushout> pushout;
  if (check_dwyer(span.left)) pushout = dwyer_pushout(span, {truncation, 8, false});
  std::vector<SquareCheck> out;
  const std::size_t n = span.left_cat()->num_objects();
  for (ObjIndex b0 = 0; b0 < n; ++b0)
    for (ObjIndex b1 = 0; b1 < n; ++b1) {
      out.push_back(verify_fourth_square(span, b0, b1, truncation, pushout));
      if (!out.back()) return out;
    }
  return out;
}

/// B ⊔_A B and D ⊔_C D with their fold maps and the comparison between them.
struct FoldSquare {
  DwyerPushout p;      // D
  DwyerPushout left;   // B ⊔_A B; its C-side is the right copy
  DwyerPushout right;  // D ⊔_C D
  Functor fold_left;   // B ⊔_A B -> B
  Functor fold_right;  // D ⊔_C D -> D
  Functor vertical;    // B ⊔_A B -> D ⊔_C D
};

inline FoldSquare fold_square(const Span& span) {
  const PushoutOptions quiet{4, 8, false};
  DwyerPushout p = dwyer_pushout(span, quiet);
  DwyerPushout left = dwyer_pushout(Span{span.left, span.left}, quiet);
  // The pushout f̄ of a Dwyer functor is Dwyer; dwyer_pushout verifies it.
  DwyerPushout right = dwyer_pushout(Span{p.fbar, p.fbar}, quiet);
  Functor fold_left = induced_functor(left, identity_functor(span.left_cat()), identity_functor(span.left_cat()));
  Functor fold_right = induced_functor(right, identity_functor(p.d), identity_functor(p.d));
  Functor vertical = induced_functor(left, compose(right.gbar, p.gbar), compose(right.fbar, p.gbar));
  return {std::move(p), std::move(left), std::move(right), std::move(fold_left), std::move(fold_right),
          std::move(vertical)};
}

/// The square of mapping sets at b0 in the left copy and b1 in the right copy.
inline SquareCheck verify_fold_square(const FoldSquare& sq, ObjIndex b0, ObjIndex b1, std::size_t truncation) {
  if (truncation < 2) throw Error(ErrorCode::TruncationTooLow, "square checks need truncation at least 2");
  SquareCheck out;
  out.truncation = truncation;
  out.b0 = b0;
  out.b1 = b1;
  const FinCat& p1 = *sq.left.d;
  const FinCat& p2 = *sq.right.d;
  const FinCat& b = *sq.p.span.left_cat();
  const FinCat& d = *sq.p.d;
  const ObjIndex x0 = sq.left.gbar.obj_map[b0];
  const ObjIndex x1 = sq.left.fbar.obj_map[b1];
  const auto top = p1.hom(x0, x1);
  const auto hom_b = b.hom(b0, b1);
  const auto bottom = p2.hom(sq.vertical.obj_map[x0], sq.vertical.obj_map[x1]);
  const auto target = d.hom(sq.p.gbar.obj_map[b0], sq.p.gbar.obj_map[b1]);
  out.corners = {top.size(), hom_b.size(), bottom.size(), target.size()};
  std::vector<SimplexIndex> to_b;
  std::vector<SimplexIndex> to_bottom;
  for (MorIndex m : top) {
    const MorIndex folded = sq.fold_left.mor_map[m];
    const MorIndex down = sq.vertical.mor_map[m];
    if (sq.p.gbar.mor_map[folded] != sq.fold_right.mor_map[down]) {
      out.detail = "square does not commute at " + p1.morphism_id(m);
      return out;
    }
    to_b.push_back(static_cast<SimplexIndex>(detail::position(hom_b, folded)));
    to_bottom.push_back(static_cast<SimplexIndex>(detail::position(bottom, down)));
  }
  auto xs = std::make_shared<const TruncatedSSet>(discrete_sset(top.size(), truncation));
  auto ys = std::make_shared<const TruncatedSSet>(discrete_sset(bottom.size(), truncation));
  auto zs = std::make_shared<const TruncatedSSet>(discrete_sset(hom_b.size(), truncation));
  const TruncatedSSet cyl =
      double_mapping_cylinder(detail::discrete_map(xs, ys, to_bottom), detail::discrete_map(xs, zs, to_b));
  detail::compare_homology(out, cyl, target.size());
  return out;
}

inline SquareCheck verify_fold_square(const Span& span, ObjIndex b0, ObjIndex b1, std::size_t truncation = 4) {
  return verify_fold_square(fold_square(span), b0, b1, truncation);
}

inline std::vector<SquareCheck> verify_fold_square_all(const Span& span, std::size_t truncation = 4) {
  const FoldSquare sq = fold_square(span);
  std::vector<SquareCheck> out;
  const std::size_t n = span.left_cat()->num_objects();
  for (ObjIndex b0 = 0; b0 < n; ++b0)
    for (ObjIndex b1 = 0; b1 < n; ++b1) {
      out.push_back(verify_fold_square(sq, b0, b1, truncation));
      if (!out.back()) return out;
    }
  return out;
}

/// Functor between two full subcategories of the same category.
inline Functor inclusion_between(const Subcategory& small, const Subcategory& big) {
  const FinCat& ambient = *big.inclusion.target;
  std::vector<ObjIndex> obj(ambient.num_objects(), kNoObject);
  std::vector<MorIndex> mor(ambient.num_morphisms(), kNoMorphism);
  for (ObjIndex x = 0; x < big.inclusion.obj_map.size(); ++x) obj[big.inclusion.obj_map[x]] = x;
  for (MorIndex m = 0; m < big.inclusion.mor_map.size(); ++m) mor[big.inclusion.mor_map[m]] = m;
  Functor f{small.cat, big.cat, {}, {}};
  for (ObjIndex x : small.inclusion.obj_map) {
    if (obj[x] == kNoObject) throw Error(ErrorCode::UnknownObject, ambient.object_name(x) + " is not in the target");
    f.obj_map.push_back(obj[x]);
  }
  for (MorIndex m : small.inclusion.mor_map) f.mor_map.push_back(mor[m]);
  return f;
}

struct PushoutCheck {
  bool holds = false;
  OracleComparison comparison;
  std::string detail;

  explicit operator bool() const { return holds; }
};

namespace detail {

inline std::vector<ObjIndex> sorted_union(std::vector<ObjIndex> a, const std::vector<ObjIndex>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

inline std::vector<ObjIndex> sorted_intersection(std::vector<ObjIndex> a, std::vector<ObjIndex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<ObjIndex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// The oracle pushout of `apex` into `left` and `right` against `target`, all
/// full subcategories of one ambient category.
inline PushoutCheck check_union(const Subcategory& apex, const Subcategory& left, const Subcategory& right,
                                const Subcategory& target, std::size_t word_bound) {
  const Span span{inclusion_between(apex, left), inclusion_between(apex, right)};
  WordOracle oracle(span, word_bound);
  PushoutCheck out;
  out.comparison =
      compare_with_oracle(oracle, *target.cat, inclusion_between(left, target), inclusion_between(right, target));
  out.holds = out.comparison.holds();
  if (!out.comparison.agrees) {
    out.detail = out.comparison.disagreement;
  } else if (!out.comparison.unstabilized.empty()) {
    out.detail = std::to_string(out.comparison.unstabilized.size()) + " hom-sets did not stabilize";
  }
  return out;
}

}  // namespace detail

/// C0 ∩ C1 -> C0, C1 has pushout the full subcategory C0 ∪ C1.
inline PushoutCheck sieve_union_check(const CatPtr& c, const std::vector<ObjIndex>& c0, const std::vector<ObjIndex>& c1,
                                      std::size_t word_bound = 8) {
  const Subcategory s0 = full_subcategory(c, c0);
  const Subcategory s1 = full_subcategory(c, c1);
  for (const Subcategory* s : {&s0, &s1}) {
    if (auto v = is_sieve(s->inclusion); !v) {
      throw Error(ErrorCode::NotSieve, "morphism " + c->morphism_id(v.witness) + " enters the subcategory from outside");
    }
  }
  return detail::check_union(full_subcategory(c, detail::sorted_intersection(c0, c1)), s0, s1,
                             full_subcategory(c, detail::sorted_union(c0, c1)), word_bound);
}

/// C0×D ⊔_{C0×D0} C×D0 against the full subcategory (C×D0) ∪ (C0×D) of C×D.
inline PushoutCheck pushout_product_check(const CatPtr& c, const std::vector<ObjIndex>& c0, const CatPtr& d,
                                          const std::vector<ObjIndex>& d0, std::size_t word_bound = 8) {
  const auto cd = share(product(*c, *d));
  const auto nd = static_cast<ObjIndex>(d->num_objects());
  auto pairs = [&](const std::vector<ObjIndex>& xs, const std::vector<ObjIndex>& ys) {
    std::vector<ObjIndex> out;
    for (ObjIndex x : xs)
      for (ObjIndex y : ys) out.push_back(x * nd + y);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<ObjIndex> all_c(c->num_objects());
  std::vector<ObjIndex> all_d(d->num_objects());
  std::iota(all_c.begin(), all_c.end(), ObjIndex{0});
  std::iota(all_d.begin(), all_d.end(), ObjIndex{0});
  const auto corner = pairs(c0, d0);
  const auto left = pairs(c0, all_d);
  const auto right = pairs(all_c, d0);
  return detail::check_union(full_subcategory(cd, corner), full_subcategory(cd, left), full_subcategory(cd, right),
                             full_subcategory(cd, detail::sorted_union(left, right)), word_bound);
}

struct BeckChevalleyCheck {
  bool holds = false;
  /// Per object b of B: |f_! g* F (b)| and |ḡ* f̄_! F (b)|.
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  std::string detail;

  explicit operator bool() const { return holds; }
};

/// f_! g* F -> ḡ* f̄_! F is a bijection at every object of B.
inline BeckChevalleyCheck verify_beck_chevalley(const DwyerPushout& p, const SetFunctor& f_c) {
  check_set_functor(f_c);
  const Span& span = p.span;
  const FinCat& b = *span.left_cat();
  const SetFunctor pulled = precompose(f_c, span.right);
  BeckChevalleyCheck out;
  out.holds = true;
  for (ObjIndex y = 0; y < b.num_objects(); ++y) {
    const ColimitAt lhs = colimit_at(pulled, span.left, y);
    const ColimitAt rhs = colimit_at(f_c, p.fbar, p.gbar.obj_map[y]);
    out.sizes.emplace_back(lhs.size, rhs.size);
    // [(a, phi), x] -> [(g a, ḡ phi), x]
    std::vector<std::size_t> image(lhs.size, static_cast<std::size_t>(-1));
    bool ok = true;
    for (std::size_t k = 0; ok && k < lhs.index.size(); ++k) {
      const ObjIndex a = lhs.index[k][0];
      const std::size_t k2 = rhs.find(span.right.obj_map[a], p.gbar.mor_map[lhs.index[k][1]]);
      if (k2 == static_cast<std::size_t>(-1)) {
        ok = false;
        out.detail = "no comparison target at " + b.object_name(y);
        break;
      }
      for (std::size_t x = 0; x < lhs.element[k].size(); ++x) {
        auto& slot = image[lhs.element[k][x]];
        const std::size_t value = rhs.element[k2][x];
        if (slot != static_cast<std::size_t>(-1) && slot != value) {
          ok = false;
          out.detail = "comparison not well defined at " + b.object_name(y);
          break;
        }
        slot = value;
      }
    }
    if (ok) {
      std::vector<std::size_t> sorted = image;
      std::sort(sorted.begin(), sorted.end());
      ok = lhs.size == rhs.size && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      if (!ok) {
        out.detail = "not a bijection at " + b.object_name(y) + ": " + std::to_string(lhs.size) + " vs " +
                     std::to_string(rhs.size);
      }
    }
    if (!ok) {
      out.holds = false;
      return out;
    }
  }
  return out;
}

inline BeckChevalleyCheck verify_beck_chevalley(const Span& span, const SetFunctor& f_c) {
  return verify_beck_chevalley(dwyer_pushout(span, {4, 8, false}), f_c);
}

}  // namespace pushcat

#endif  // PUSHCAT_PUSHOUT_VERIFY_HPP
