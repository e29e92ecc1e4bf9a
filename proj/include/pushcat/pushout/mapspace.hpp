#ifndef PUSHCAT_PUSHOUT_MAPSPACE_HPP
#define PUSHCAT_PUSHOUT_MAPSPACE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pushcat/comma.hpp"
#include "pushcat/necklace/word_oracle.hpp"
#include "pushcat/pushout/dwyer_pushout.hpp"
#include "pushcat/sset.hpp"

namespace pushcat {

enum class MapSpaceFormula {
  /// Map(f̄c, f̄c') = Hom_C(c, c')
  HomC,
  /// Map(ḡb, f̄c) = |B_{b/} ×_B A ×_C C_{/c}|
  CommaBToC,
  /// Map(f̄c, ḡb) = |C_{c/} ×_C A ×_B B_{/b}|
  CommaCToB,
  /// Map(ḡb, ḡb') as the pushout of anima over the fourth comma categories
  FourthPushout,
};

enum class Agreement { Agree, Disagree, Unknown };

inline std::string to_string(MapSpaceFormula f) {
  switch (f) {
    case MapSpaceFormula::HomC: return "Hom_C";
    case MapSpaceFormula::CommaBToC: return "comma(B->C)";
    case MapSpaceFormula::CommaCToB: return "comma(C->B)";
    case MapSpaceFormula::FourthPushout: return "fourth-pushout";
  }
  return "?";
}

inline std::string to_string(Agreement a) {
  switch (a) {
    case Agreement::Agree: return "AGREE";
    case Agreement::Disagree: return "DISAGREE";
    case Agreement::Unknown: return "UNKNOWN";
  }
  return "?";
}

struct MapSpaceReport {
  PushoutObject x;
  PushoutObject y;
  MapSpaceFormula formula = MapSpaceFormula::HomC;
  /// Objects of the formula-side category (vertices of the simplicial set).
  std::size_t formula_size = 0;
  std::size_t formula_components = 0;
  HomologyReport homology;
  /// Higher homology vanishes through the truncation.
  bool homotopy_discrete = false;
  WordClasses oracle;
  /// π0 of the formula side maps bijectively onto the word classes.
  bool pi0_bijection = false;
  Agreement agreement = Agreement::Unknown;
  std::string detail;
};

namespace detail {

/// Formula-side simplicial set together with a word per vertex.
struct FormulaSide {
  std::shared_ptr<const TruncatedSSet> sset;
  std::vector<Word> vertex_words;
};

inline FormulaSide comma_side(const Span& span, PushoutObject x, PushoutObject y, std::size_t d) {
  FormulaSide out;
  const bool b_to_c = x.side == Side::B;
  const ObjIndex b = b_to_c ? x.obj : y.obj;
  const ObjIndex c = b_to_c ? y.obj : x.obj;
  CommaCat comma = comma_triple(span, b, c, b_to_c ? Orientation::BToC : Orientation::CToB);
  out.sset = std::make_shared<TruncatedSSet>(nerve(comma.cat, d));
  for (const Tuple& t : comma.object_tuples) {
    out.vertex_words.push_back(b_to_c ? Word{{Side::B, t[0]}, {Side::C, t[2]}} : Word{{Side::C, t[0]}, {Side::B, t[2]}});
  }
  return out;
}

inline FormulaSide hom_c_side(const Span& span, ObjIndex c0, ObjIndex c1, std::size_t d) {
  FormulaSide out;
  const auto hom = span.right_cat()->hom(c0, c1);
  out.sset = std::make_shared<TruncatedSSet>(discrete_sset(hom.size(), d));
  for (MorIndex m : hom) out.vertex_words.push_back({{Side::C, m}});
  return out;
}

/// Double mapping cylinder N(bottom) <- N(top) -> Hom_B(b0, b1).
struct FourthCylinder {
  FourthComma comma;
  std::shared_ptr<const TruncatedSSet> top;
  std::shared_ptr<const TruncatedSSet> bottom;
  std::shared_ptr<const TruncatedSSet> hom;
  TruncatedSSet cylinder;
};

inline FourthCylinder fourth_cylinder(const Span& span, ObjIndex b0, ObjIndex b1, std::size_t d) {
  FourthComma fc = fourth_comma(span, b0, b1);
  const FinCat& b = *span.left_cat();
  const Nerve top = nerve_with_index(fc.top.cat, d);
  const Nerve bottom = nerve_with_index(fc.bottom.cat, d);
  const auto hom = b.hom(b0, b1);
  auto discrete = std::make_shared<const TruncatedSSet>(discrete_sset(hom.size(), d));
  std::vector<SimplexIndex> label;
  for (const Tuple& t : fc.top.object_tuples) {
    const MorIndex m = b.compose(t[2], t[0]);
    label.push_back(static_cast<SimplexIndex>(std::find(hom.begin(), hom.end(), m) - hom.begin()));
  }
  SimplicialMap to_bottom = nerve_map(fc.connecting, top, bottom);
  SimplicialMap to_hom = map_to_discrete(top.sset, discrete, label);
  TruncatedSSet cyl = double_mapping_cylinder(to_bottom, to_hom);
  return {std::move(fc), top.sset, bottom.sset, discrete, std::move(cyl)};
}

inline FormulaSide fourth_side(const Span& span, ObjIndex b0, ObjIndex b1, std::size_t d) {
  FourthCylinder fc = fourth_cylinder(span, b0, b1, d);
  FormulaSide out;
  // Cylinder vertices: bottom objects, then Hom_B(b0, b1).
  for (const Tuple& t : fc.comma.bottom.object_tuples)
    out.vertex_words.push_back({{Side::B, t[0]}, {Side::C, t[2]}, {Side::B, t[4]}});
  for (MorIndex m : span.left_cat()->hom(b0, b1)) out.vertex_words.push_back({{Side::B, m}});
  out.sset = std::make_shared<TruncatedSSet>(std::move(fc.cylinder));
  return out;
}

}  // namespace detail

/// Compares the formula for Map_D(x, y) with the word oracle.
inline MapSpaceReport mapspace_report(WordOracle& oracle, PushoutObject x, PushoutObject y, std::size_t truncation) {
  const Span& span = oracle.span();
  require_fully_faithful(span.left);
  if (truncation < 1) throw Error(ErrorCode::TruncationTooLow, "mapping space reports need truncation at least 1");
  MapSpaceReport r;
  r.x = x;
  r.y = y;
  detail::FormulaSide side;
  if (x.side == Side::C && y.side == Side::C) {
    r.formula = MapSpaceFormula::HomC;
    side = detail::hom_c_side(span, x.obj, y.obj, truncation);
  } else if (x.side == Side::B && y.side == Side::B) {
    r.formula = MapSpaceFormula::FourthPushout;
    side = detail::fourth_side(span, x.obj, y.obj, truncation);
  } else {
    r.formula = x.side == Side::B ? MapSpaceFormula::CommaBToC : MapSpaceFormula::CommaCToB;
    side = detail::comma_side(span, x, y, truncation);
  }
  const TruncatedSSet& s = *side.sset;
  r.formula_size = s.count[0];
  r.homology = homology(s);
  r.formula_components = r.homology.groups[0].free_rank;
  r.homotopy_discrete = true;
  for (std::size_t n = 1; n < r.homology.groups.size(); ++n) r.homotopy_discrete = r.homotopy_discrete && r.homology.groups[n].is_zero();
  r.oracle = oracle.hom(x, y);

  const Components comps = pi0(s);
  std::vector<std::optional<std::size_t>> class_of(comps.count);
  bool well_defined = true;
  bool classified = true;
  for (SimplexIndex v = 0; v < s.count[0]; ++v) {
    const auto k = oracle.classify(x, side.vertex_words[v]);
    if (!k) {
      classified = false;
      break;
    }
    auto& slot = class_of[comps.label[v]];
    if (slot && *slot != *k) well_defined = false;
    slot = *k;
  }
  if (!classified) {
    r.detail = "a formula-side word exceeds the word bound";
    return r;
  }
  std::vector<bool> hit(r.oracle.size(), false);
  bool injective = well_defined;
  for (const auto& k : class_of) {
    if (!k || *k >= hit.size() || hit[*k]) {
      injective = false;
      continue;
    }
    hit[*k] = true;
  }
  const bool surjective = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  r.pi0_bijection = well_defined && injective && surjective;
  if (!r.oracle.stabilized) {
    r.agreement = Agreement::Unknown;
    r.detail = "oracle did not stabilize";
  } else if (r.pi0_bijection) {
    r.agreement = Agreement::Agree;
  } else {
    r.agreement = Agreement::Disagree;
    r.detail = !well_defined ? "a component meets two word classes"
                             : std::to_string(comps.count) + " components vs " + std::to_string(r.oracle.size()) +
                                   " word classes";
  }
  return r;
}

inline MapSpaceReport mapspace_report(const Span& span, PushoutObject x, PushoutObject y,
                                      const PushoutOptions& options = {}) {
  WordOracle oracle(span, options.word_bound);
  return mapspace_report(oracle, x, y, options.truncation);
}

/// Reports for every pair of objects of the pushout, one object per class,
/// sorted by the position of the class representative (C first, then B).
inline std::vector<MapSpaceReport> mapspace_table(const Span& span, const PushoutOptions& options = {}) {
  WordOracle oracle(span, options.word_bound);
  std::vector<PushoutObject> objects;
  std::vector<bool> seen(oracle.num_object_classes(), false);
  auto visit = [&](PushoutObject p) {
    if (seen[oracle.class_of(p)]) return;
    seen[oracle.class_of(p)] = true;
    objects.push_back(p);
  };
  for (ObjIndex c = 0; c < span.right_cat()->num_objects(); ++c) visit({Side::C, c});
  for (ObjIndex b = 0; b < span.left_cat()->num_objects(); ++b) visit({Side::B, b});
  std::vector<MapSpaceReport> out;
  for (const auto& x : objects)
    for (const auto& y : objects) out.push_back(mapspace_report(oracle, x, y, options.truncation));
  return out;
}

}  // namespace pushcat

#endif  // PUSHCAT_PUSHOUT_MAPSPACE_HPP
