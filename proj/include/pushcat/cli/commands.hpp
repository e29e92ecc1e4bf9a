#ifndef PUSHCAT_CLI_COMMANDS_HPP
#define PUSHCAT_CLI_COMMANDS_HPP

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pushcat/fuzz.hpp"
#include "pushcat/io.hpp"
#include "pushcat/necklace.hpp"
#include "pushcat/pushout.hpp"
#include "pushcat/reedy.hpp"

namespace pushcat::cli {

using io::Json;

enum class Format { Table, Structured };

struct JobConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::size_t dim = 4;
  std::size_t word_bound = 8;
  std::size_t set_bound = 2;
  Format format = Format::Table;
  std::uint64_t seed = 0;
  std::vector<std::string> expect;
  /// pushout: also write D as a category file here.
  std::string emit;
  /// fuzz: failing instances are written here.
  std::string fixtures_dir = "fuzz-failures";
  std::size_t budget = 20'000'000;
  /// fuzz worker threads; 0 picks the hardware concurrency.
  std::size_t jobs = 0;
};

enum ExitCode : int { kVerified = 0, kExpectationFailed = 1, kInputInvalid = 2, kBudgetExceeded = 3 };

struct Outcome {
  int exit_code = kVerified;
  std::string out;
  std::string err;
};

/// Validation and parse failures are invalid input, guards are budget
/// failures, everything else is a failed expectation.
inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::DanglingReference:
    case ErrorCode::NonAssociative:
    case ErrorCode::MissingIdentity:
    case ErrorCode::PartialComposition:
    case ErrorCode::NotFunctorial:
    case ErrorCode::UnknownObject:
    case ErrorCode::MismatchedTarget:
    case ErrorCode::TruncationTooLow:
    case ErrorCode::BoundTooSmall:
      return kInputInvalid;
    case ErrorCode::ExplosionGuard:
      return kBudgetExceeded;
    default:
      return kExpectationFailed;
  }
}

namespace detail {

inline std::string plural(std::size_t n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

inline std::string size_line(const FinCat& c) {
  return plural(c.num_objects(), "object") + ", " + plural(c.num_morphisms(), "morphism");
}

/// Left-aligned columns separated by two spaces.
inline std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  auto display = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char ch : s)
      if ((ch & 0xC0) != 0x80) ++n;
    return n;
  };
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], display(r[i]));
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - display(r[i]) + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

inline std::string homology_string(const HomologyReport& h) {
  std::string out;
  for (std::size_t n = 0; n < h.groups.size(); ++n) out += (n ? ", " : "") + to_string(h.groups[n]);
  return "[" + out + "]";
}

inline Json homology_json(const HomologyReport& h) {
  Json groups = Json::array();
  for (const auto& g : h.groups) groups.push_back(to_string(g));
  return Json{{"truncation", h.truncation}, {"groups", groups}, {"complete", h.complete}};
}

inline bool is_poset(const FinCat& c) {
  for (ObjIndex x = 0; x < c.num_objects(); ++x)
    for (ObjIndex y = 0; y < c.num_objects(); ++y) {
      if (c.hom(x, y).size() > 1) return false;
      if (x != y && !c.hom(x, y).empty() && !c.hom(y, x).empty()) return false;
    }
  return true;
}

/// Covering relations of a poset as "x<y", sorted.
inline std::vector<std::string> covering_relations(const FinCat& c) {
  std::vector<std::string> out;
  for (ObjIndex x = 0; x < c.num_objects(); ++x)
    for (ObjIndex y = 0; y < c.num_objects(); ++y) {
      if (x == y || c.hom(x, y).empty()) continue;
      bool covers = true;
      for (ObjIndex z = 0; z < c.num_objects() && covers; ++z)
        if (z != x && z != y && !c.hom(x, z).empty() && !c.hom(z, y).empty()) covers = false;
      if (covers) out.push_back(c.object_name(x) + "<" + c.object_name(y));
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> non_identity_arrows(const FinCat& c) {
  std::vector<std::string> out;
  for (MorIndex m = 0; m < c.num_morphisms(); ++m)
    if (!c.is_identity(m)) out.push_back(c.morphism_id(m) + " : " + c.object_name(c.src(m)) + " -> " + c.object_name(c.dst(m)));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string fraction(const Rational& r) { return r.str(); }

struct Predicate {
  bool holds = false;
  std::string witness;
};

inline Predicate fully_faithful_predicate(const Functor& f) {
  const auto v = is_fully_faithful(f);
  if (v) return {true, {}};
  return {false, "NotFullyFaithful: hom map " + f.source->object_name(v.x) + " -> " + f.source->object_name(v.y) +
                     " is not " + (v.failure == FaithfulnessFailure::NotInjective ? "injective" : "surjective")};
}

inline Predicate sieve_predicate(const Functor& f, bool co) {
  if (auto ff = fully_faithful_predicate(f); !ff.holds) return ff;
  const auto v = co ? is_cosieve(f) : is_sieve(f);
  if (v) return {true, {}};
  const FinCat& t = *f.target;
  return {false, std::string(co ? "NotSieve (cosieve)" : "NotSieve") + ": morphism " + t.morphism_id(v.witness) +
                     " : " + t.object_name(t.src(v.witness)) + " -> " + t.object_name(t.dst(v.witness)) +
                     (co ? " leaves the image" : " enters the image from outside")};
}

inline Predicate dwyer_predicate(const Functor& f) {
  const auto v = check_dwyer(f);
  if (v) return {true, {}};
  return {false, v.failure->what()};
}

inline Predicate reedy_predicate(const Functor& f, std::size_t truncation) {
  try {
    const auto v = is_reedy_extension(f, truncation);
    return {v.holds, v.detail};
  } catch (const Error& e) {
    if (exit_code_for(e.code()) != kExpectationFailed) throw;
    return {false, e.what()};
  }
}

inline FactorizationOrder parse_order(const Json& j) {
  const std::string s = io::detail::text(j, "structure.order");
  if (s == "L-then-R" || s == "LThenR") return FactorizationOrder::LThenR;
  if (s == "R-then-L" || s == "RThenL") return FactorizationOrder::RThenL;
  throw Error(ErrorCode::ParseError, "structure.order: expected \"L-then-R\" or \"R-then-L\"");
}

struct StructureInput {
  std::vector<std::size_t> degree;
  std::vector<bool> l;
  std::vector<bool> r;
  FactorizationOrder order = FactorizationOrder::LThenR;
};

/// {"degree": {object: n}, "L": [ids], "R": [ids], "order": "L-then-R"};
/// identities belong to both classes implicitly.
inline StructureInput parse_structure(const Json& j, const FinCat& c) {
  StructureInput s;
  s.degree.assign(c.num_objects(), 0);
  const Json& deg = io::detail::field(j, "degree", "structure");
  if (!deg.is_object()) throw Error(ErrorCode::ParseError, "structure.degree: expected an object");
  std::vector<bool> seen(c.num_objects(), false);
  for (const auto& [name, n] : deg.items()) {
    auto x = c.find_object(name);
    if (!x) throw Error(ErrorCode::UnknownObject, "structure.degree: no object '" + name + "'");
    s.degree[*x] = io::detail::natural(n, "structure.degree." + name);
    seen[*x] = true;
  }
  for (ObjIndex x = 0; x < c.num_objects(); ++x)
    if (!seen[x]) throw Error(ErrorCode::ParseError, "structure.degree: missing object '" + c.object_name(x) + "'");
  auto classes = [&](const char* key) {
    std::vector<bool> in(c.num_morphisms(), false);
    for (MorIndex m = 0; m < c.num_morphisms(); ++m) in[m] = c.is_identity(m);
    for (const auto& id : io::detail::strings(io::detail::field(j, key, "structure"), std::string("structure.") + key)) {
      auto m = c.find_morphism(id);
      if (!m) throw Error(ErrorCode::DanglingReference, std::string("structure.") + key + ": no morphism '" + id + "'");
      in[*m] = true;
    }
    return in;
  };
  s.l = classes("L");
  s.r = classes("R");
  if (j.contains("order")) s.order = parse_order(j["order"]);
  return s;
}

inline Predicate reedy_structure_predicate(const CatPtr& c, const StructureInput& s, std::size_t truncation) {
  try {
    const auto v = check_reedy_structure(c, s.degree, s.l, s.r, s.order, truncation);
    return {v.holds, {}};
  } catch (const Error& e) {
    if (exit_code_for(e.code()) != kExpectationFailed) throw;
    return {false, e.what()};
  }
}

/// {"category": ..., "subcategory": [names]}: the full subcategory inclusion.
inline Functor parse_inclusion(const Json& j, const CatPtr& c) {
  const auto objs = io::parse_objects(io::detail::field(j, "subcategory", "document"), *c, "subcategory");
  return full_subcategory(c, objs).inclusion;
}

inline Json load_first(const JobConfig& cfg) {
  if (cfg.inputs.empty()) throw Error(ErrorCode::ParseError, "no input file given");
  return io::load(cfg.inputs.front());
}

inline Outcome render(const JobConfig& cfg, const Json& structured, const std::string& table_text, int code) {
  Outcome o;
  o.exit_code = code;
  o.out = cfg.format == Format::Structured ? io::dump(structured) : table_text;
  return o;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

inline const std::set<std::string>& known_predicates() {
  static const std::set<std::string> names{"valid", "fully-faithful", "sieve", "cosieve", "dwyer", "reedy", "reedy-structure"};
  return names;
}

inline Outcome cmd_check(const JobConfig& cfg) {
  for (const auto& p : cfg.expect) {
    if (!known_predicates().count(p)) {
      return {kInputInvalid, {}, "unknown predicate '" + p + "'; known: " +
                                     detail::join({known_predicates().begin(), known_predicates().end()}) + "\n"};
    }
  }
  if (cfg.inputs.empty()) return {kInputInvalid, {}, "no input file given\n"};
  std::ostringstream text;
  Json report = Json::array();
  std::map<std::string, bool> evaluated;  // predicate -> holds on every file where it applies
  std::string failures;
  for (const auto& path : cfg.inputs) {
    const Json j = io::load(path);
    Json entry{{"file", path}};
    std::map<std::string, detail::Predicate> preds;
    preds["valid"] = {true, {}};
    if (j.contains("f") && j.contains("g")) {
      const Span span = io::parse_span(j);
      entry["kind"] = "span";
      text << path << ": span A (" << detail::size_line(*span.apex()) << "), B (" << detail::size_line(*span.left_cat())
           << "), C (" << detail::size_line(*span.right_cat()) << ")\n";
      entry["A"] = {{"objects", span.apex()->num_objects()}, {"morphisms", span.apex()->num_morphisms()}};
      entry["B"] = {{"objects", span.left_cat()->num_objects()}, {"morphisms", span.left_cat()->num_morphisms()}};
      entry["C"] = {{"objects", span.right_cat()->num_objects()}, {"morphisms", span.right_cat()->num_morphisms()}};
      preds["fully-faithful"] = detail::fully_faithful_predicate(span.left);
      preds["sieve"] = detail::sieve_predicate(span.left, false);
      preds["cosieve"] = detail::sieve_predicate(span.left, true);
      preds["dwyer"] = detail::dwyer_predicate(span.left);
    } else {
      const bool wrapped = j.contains("category");
      const CatPtr c = io::parse_category(wrapped ? j["category"] : j);
      entry["kind"] = "category";
      entry["objects"] = c->num_objects();
      entry["morphisms"] = c->num_morphisms();
      text << path << ": " << detail::size_line(*c) << "\n";
      if (wrapped && j.contains("subcategory")) {
        const Functor inc = detail::parse_inclusion(j, c);
        preds["fully-faithful"] = {true, {}};
        preds["sieve"] = detail::sieve_predicate(inc, false);
        preds["cosieve"] = detail::sieve_predicate(inc, true);
        preds["dwyer"] = detail::dwyer_predicate(inc);
        preds["reedy"] = detail::reedy_predicate(inc, cfg.dim);
      }
      if (wrapped && j.contains("structure")) {
        preds["reedy-structure"] = detail::reedy_structure_predicate(c, detail::parse_structure(j["structure"], *c), cfg.dim);
      }
    }
    Json pj = Json::object();
    for (const auto& [name, p] : preds) {
      if (name == "valid") continue;
      text << "  " << name << ": " << (p.holds ? "yes" : "no") << (p.witness.empty() ? "" : " (" + p.witness + ")") << "\n";
      pj[name] = p.witness.empty() ? Json{{"holds", p.holds}} : Json{{"holds", p.holds}, {"witness", p.witness}};
    }
    entry["predicates"] = pj;
    for (const auto& e : cfg.expect) {
      auto it = preds.find(e);
      if (it == preds.end()) continue;
      auto [slot, fresh] = evaluated.emplace(e, true);
      if (!it->second.holds) {
        slot->second = false;
        failures += "expectation '" + e + "' failed on " + path + ": " + it->second.witness + "\n";
      }
    }
    report.push_back(entry);
  }
  for (const auto& e : cfg.expect) {
    if (!evaluated.count(e)) return {kInputInvalid, {}, "predicate '" + e + "' does not apply to the given input\n"};
  }
  Outcome o = detail::render(cfg, Json{{"files", report}, {"expectations_failed", !failures.empty()}}, text.str(),
                             failures.empty() ? kVerified : kExpectationFailed);
  o.err = failures;
  return o;
}

// ---------------------------------------------------------------------------
// pushout / mapspace
// ---------------------------------------------------------------------------

namespace detail {

struct NamedReport {
  std::string x;
  std::string y;
  MapSpaceReport report;
};

inline std::vector<NamedReport> named_reports(const DwyerPushout& p, const std::vector<MapSpaceReport>& reports) {
  auto name = [&](PushoutObject o) {
    return p.d->object_name(o.side == Side::B ? p.gbar.obj_map[o.obj] : p.fbar.obj_map[o.obj]);
  };
  std::vector<NamedReport> out;
  for (const auto& r : reports) out.push_back({name(r.x), name(r.y), r});
  std::sort(out.begin(), out.end(), [](const NamedReport& a, const NamedReport& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  });
  return out;
}

inline Json report_json(const NamedReport& n) {
  const MapSpaceReport& r = n.report;
  return Json{{"x", n.x},
              {"y", n.y},
              {"formula", to_string(r.formula)},
              {"formula_vertices", r.formula_size},
              {"components", r.formula_components},
              {"homology", homology_json(r.homology)},
              {"homotopy_discrete", r.homotopy_discrete},
              {"oracle_classes", r.oracle.size()},
              {"oracle_stabilized", r.oracle.stabilized},
              {"agreement", to_string(r.agreement)},
              {"detail", r.detail}};
}

inline std::string reports_table(const std::vector<NamedReport>& reports) {
  std::vector<std::vector<std::string>> rows{{"x", "y", "formula", "pi0", "homology", "oracle", "agreement"}};
  for (const auto& n : reports) {
    const MapSpaceReport& r = n.report;
    rows.push_back({n.x, n.y, to_string(r.formula), std::to_string(r.formula_components), homology_string(r.homology),
                    std::to_string(r.oracle.size()) + (r.oracle.stabilized ? "" : "?"), to_string(r.agreement)});
  }
  return table(rows);
}

inline int reports_code(const std::vector<NamedReport>& reports) {
  for (const auto& n : reports)
    if (n.report.agreement == Agreement::Disagree) return kExpectationFailed;
  return kVerified;
}

}  // namespace detail

inline Outcome cmd_pushout(const JobConfig& cfg) {
  const Span span = io::parse_span(detail::load_first(cfg));
  const PushoutOptions options{cfg.dim, cfg.word_bound, true};
  const DwyerPushout p = dwyer_pushout(span, options);
  const FinCat& d = *p.d;
  if (!cfg.emit.empty()) io::save(cfg.emit, io::to_json(d));
  const auto reports = detail::named_reports(p, mapspace_table(span, options));

  std::ostringstream text;
  auto names = d.object_names();
  std::sort(names.begin(), names.end());
  text << "D: " << detail::size_line(d) << "\n";
  text << "objects: " << detail::join(names) << "\n";
  const bool poset = detail::is_poset(d);
  if (poset) {
    text << "relations: " << detail::join(detail::covering_relations(d)) << "\n";
  } else {
    text << "morphisms: " << detail::join(detail::non_identity_arrows(d)) << "\n";
  }
  text << "fbar fully faithful: " << (is_fully_faithful(p.fbar) ? "yes" : "no") << "\n";
  text << "oracle: " << (p.oracle.holds() ? "agrees" : "not verified") << " (" << p.oracle.pairs_checked
       << " pairs, " << p.oracle.unstabilized.size() << " unstabilized)\n\n";
  text << detail::reports_table(reports);

  Json rj = Json::array();
  for (const auto& r : reports) rj.push_back(detail::report_json(r));
  Json structured{{"pushout", io::to_json(d)},
                  {"fbar", io::to_json(p.fbar)},
                  {"gbar", io::to_json(p.gbar)},
                  {"fbar_fully_faithful", static_cast<bool>(is_fully_faithful(p.fbar))},
                  {"oracle", {{"agrees", p.oracle.agrees}, {"pairs_checked", p.oracle.pairs_checked},
                              {"unstabilized", p.oracle.unstabilized.size()}}},
                  {"mapspaces", rj}};
  if (poset) structured["relations"] = detail::covering_relations(d);
  return detail::render(cfg, structured, text.str(), detail::reports_code(reports));
}

/// Reports for every pair, or for one pair given as two extra inputs naming
/// objects of D.
inline Outcome cmd_mapspace(const JobConfig& cfg) {
  const Span span = io::parse_span(detail::load_first(cfg));
  const PushoutOptions options{cfg.dim, cfg.word_bound, false};
  const DwyerPushout p = dwyer_pushout(span, options);
  auto reports = detail::named_reports(p, mapspace_table(span, options));
  if (cfg.inputs.size() == 3) {
    const std::string& x = cfg.inputs[1];
    const std::string& y = cfg.inputs[2];
    for (const std::string& name : {x, y})
      if (!p.d->find_object(name)) throw Error(ErrorCode::UnknownObject, "no object '" + name + "' in the pushout");
    std::erase_if(reports, [&](const detail::NamedReport& r) { return r.x != x || r.y != y; });
  } else if (cfg.inputs.size() != 1) {
    throw Error(ErrorCode::ParseError, "mapspace takes a span file and optionally two object names");
  }
  Json rj = Json::array();
  for (const auto& r : reports) rj.push_back(detail::report_json(r));
  return detail::render(cfg, Json{{"mapspaces", rj}}, detail::reports_table(reports), detail::reports_code(reports));
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

namespace detail {

inline Outcome square_outcome(const JobConfig& cfg, const Span& span, const std::vector<SquareCheck>& checks,
                              const std::string& name) {
  const FinCat& b = *span.left_cat();
  bool ok = !checks.empty() || b.num_objects() == 0;
  std::vector<std::vector<std::string>> rows{{"b0", "b1", "corners", "cylinder", "expected", "verdict"}};
  Json cj = Json::array();
  for (const auto& c : checks) {
    ok = ok && static_cast<bool>(c);
    std::vector<std::string> corners;
    for (auto n : c.corners) corners.push_back(std::to_string(n));
    rows.push_back({b.object_name(c.b0), b.object_name(c.b1), join(corners, "/"), homology_string(c.cylinder),
                    homology_string(c.expected), to_string(c.verdict)});
    cj.push_back({{"b0", b.object_name(c.b0)},
                  {"b1", b.object_name(c.b1)},
                  {"corners", c.corners},
                  {"cylinder", homology_json(c.cylinder)},
                  {"expected", homology_json(c.expected)},
                  {"verdict", to_string(c.verdict)},
                  {"detail", c.detail}});
  }
  const std::string verdict = ok ? "CONSISTENT" : "INCONSISTENT";
  std::string text = name + " square: " + verdict + " (truncation " + std::to_string(cfg.dim) + ")\n" + table(rows);
  return render(cfg, Json{{"square", name}, {"verdict", verdict}, {"truncation", cfg.dim}, {"pairs", cj}}, text,
                ok ? kVerified : kExpectationFailed);
}

inline Outcome pushout_check_outcome(const JobConfig& cfg, const PushoutCheck& v, const std::string& name) {
  const std::string verdict = v.holds ? "HOLDS" : "FAILS";
  std::string text = name + ": " + verdict + " (" + std::to_string(v.comparison.pairs_checked) + " hom-sets compared)\n";
  if (!v.detail.empty()) text += v.detail + "\n";
  return render(cfg,
                Json{{"verdict", verdict},
                     {"pairs_checked", v.comparison.pairs_checked},
                     {"unstabilized", v.comparison.unstabilized.size()},
                     {"detail", v.detail}},
                text, v.holds ? kVerified : kExpectationFailed);
}

}  // namespace detail

inline const std::vector<std::string>& verify_kinds() {
  static const std::vector<std::string> kinds{"fourth", "fold", "sieve-union", "pushout-product", "beck-chevalley", "reedy"};
  return kinds;
}

inline Outcome cmd_verify(const std::string& which, const JobConfig& cfg) {
  if (which == "fourth" || which == "fold") {
    const Span span = io::parse_span(detail::load_first(cfg));
    const auto checks = which == "fourth" ? verify_fourth_square_all(span, cfg.dim) : verify_fold_square_all(span, cfg.dim);
    return detail::square_outcome(cfg, span, checks, which);
  }
  if (which == "sieve-union") {
    const Json j = detail::load_first(cfg);
    const CatPtr c = io::parse_category(io::detail::field(j, "category", "document"));
    const auto c0 = io::parse_objects(io::detail::field(j, "C0", "document"), *c, "C0");
    const auto c1 = io::parse_objects(io::detail::field(j, "C1", "document"), *c, "C1");
    return detail::pushout_check_outcome(cfg, sieve_union_check(c, c0, c1, cfg.word_bound), "sieve union");
  }
  if (which == "pushout-product") {
    const Json j = detail::load_first(cfg);
    const CatPtr c = io::parse_category(io::detail::field(j, "C", "document"), "C");
    const CatPtr d = io::parse_category(io::detail::field(j, "D", "document"), "D");
    const auto c0 = io::parse_objects(io::detail::field(j, "C0", "document"), *c, "C0");
    const auto d0 = io::parse_objects(io::detail::field(j, "D0", "document"), *d, "D0");
    return detail::pushout_check_outcome(cfg, pushout_product_check(c, c0, d, d0, cfg.word_bound), "pushout product");
  }
  if (which == "beck-chevalley") {
    const Json j = detail::load_first(cfg);
    const Span span = io::parse_span(j);
    const DwyerPushout p = dwyer_pushout(span, {cfg.dim, cfg.word_bound, false});
    std::vector<std::pair<std::string, SetFunctor>> presheaves;
    if (j.contains("presheaf")) {
      presheaves.emplace_back("presheaf", io::parse_set_functor(j["presheaf"], span.right_cat()));
    } else {
      for (ObjIndex x = 0; x < span.right_cat()->num_objects(); ++x)
        presheaves.emplace_back("Hom(" + span.right_cat()->object_name(x) + ", -)", representable(span.right_cat(), x));
    }
    bool ok = true;
    std::vector<std::vector<std::string>> rows{{"functor", "b", "f_! g* F", "gbar* fbar_! F"}};
    Json pj = Json::array();
    std::string details;
    for (const auto& [name, f] : presheaves) {
      const auto v = verify_beck_chevalley(p, f);
      ok = ok && v.holds;
      if (!v.detail.empty()) details += name + ": " + v.detail + "\n";
      Json sizes = Json::object();
      for (ObjIndex b = 0; b < v.sizes.size(); ++b) {
        const std::string bn = span.left_cat()->object_name(b);
        rows.push_back({name, bn, std::to_string(v.sizes[b].first), std::to_string(v.sizes[b].second)});
        sizes[bn] = {v.sizes[b].first, v.sizes[b].second};
      }
      pj.push_back({{"functor", name}, {"holds", v.holds}, {"sizes", sizes}, {"detail", v.detail}});
    }
    const std::string verdict = ok ? "BIJECTIVE" : "NOT BIJECTIVE";
    return detail::render(cfg, Json{{"verdict", verdict}, {"functors", pj}},
                          "beck-chevalley: " + verdict + "\n" + detail::table(rows) + details,
                          ok ? kVerified : kExpectationFailed);
  }
  if (which == "reedy") {
    const Json j = detail::load_first(cfg);
    const CatPtr c = io::parse_category(io::detail::field(j, "category", "document"));
    std::ostringstream text;
    Json structured = Json::object();
    bool ok = true;
    if (j.contains("structure")) {
      const auto p = detail::reedy_structure_predicate(c, detail::parse_structure(j["structure"], *c), cfg.dim);
      ok = ok && p.holds;
      text << "reedy structure: " << (p.holds ? "HOLDS" : "FAILS") << (p.witness.empty() ? "" : " (" + p.witness + ")") << "\n";
      structured["structure"] = {{"holds", p.holds}, {"witness", p.witness}};
    }
    if (j.contains("subcategory")) {
      const Functor inc = detail::parse_inclusion(j, c);
      const auto v = verify_reedy_square(inc, cfg.set_bound, cfg.dim, cfg.budget);
      ok = ok && v.holds;
      text << "reedy extension square: " << (v.holds ? "HOLDS" : "FAILS") << " (k = " << cfg.set_bound << ")\n";
      text << "  functors B -> Set<=" << cfg.set_bound << ": " << v.functors << " labeled, " << v.functor_classes
           << " iso classes, groupoid cardinality " << detail::fraction(v.functor_cardinality) << "\n";
      text << "  pullback data: " << v.data << " labeled, " << v.data_classes << " iso classes, groupoid cardinality "
           << detail::fraction(v.data_cardinality) << "\n";
      if (!v.detail.empty()) text << "  " << v.detail << "\n";
      structured["square"] = {{"holds", v.holds},
                              {"k", cfg.set_bound},
                              {"functors", v.functors},
                              {"functor_classes", v.functor_classes},
                              {"functor_cardinality", detail::fraction(v.functor_cardinality)},
                              {"data", v.data},
                              {"data_classes", v.data_classes},
                              {"data_cardinality", detail::fraction(v.data_cardinality)},
                              {"detail", v.detail}};
    }
    if (!j.contains("structure") && !j.contains("subcategory")) {
      throw Error(ErrorCode::ParseError, "document: expected 'subcategory' or 'structure'");
    }
    structured["verdict"] = ok ? "HOLDS" : "FAILS";
    return detail::render(cfg, structured, text.str(), ok ? kVerified : kExpectationFailed);
  }
  return {kInputInvalid, {}, "unknown verifier '" + which + "'; known: " + detail::join(verify_kinds()) + "\n"};
}

// ---------------------------------------------------------------------------
// fuzz
// ---------------------------------------------------------------------------

struct Instance {
  bool pass = false;
  std::string detail;
  Json fixture;
  /// Oracle pairs that did not stabilize (reported, not failed).
  std::size_t unstabilized = 0;
};

struct Suite {
  std::string label;
  std::function<Instance(fuzz::Rng&, const JobConfig&)> run;
};

namespace detail {

inline Instance span_instance(const Span& span) { return Instance{false, {}, io::to_json(span), 0}; }

/// Apex monoids stay at two elements: the fourth comma categories of a
/// three-element monoid already have nerves with millions of 4-simplices.
inline Instance fourth_or_fold(fuzz::Rng& rng, const JobConfig& cfg, bool fourth) {
  const Span span = fuzz::random_dwyer_span(rng, 5, 12, 2);
  Instance in = span_instance(span);
  const auto checks = fourth ? verify_fourth_square_all(span, cfg.dim) : verify_fold_square_all(span, cfg.dim);
  in.pass = true;
  for (const auto& c : checks)
    if (!c) {
      in.pass = false;
      in.detail = span.left_cat()->object_name(c.b0) + ", " + span.left_cat()->object_name(c.b1) + ": " + c.detail;
    }
  return in;
}

/// Identity span on a small category or poset: oracle classes match Hom, and
/// the opposite span gives the transposed counts.
inline Instance oracle_identity(fuzz::Rng& rng, const JobConfig& cfg) {
  const CatPtr c = fuzz::coin(rng, 0.5) ? fuzz::random_poset(rng, fuzz::uniform(rng, 1, 4))
                                        : fuzz::random_category(rng, 3, 8);
  Instance in{true, {}, io::to_json(*c), 0};
  const Span span{identity_functor(c), identity_functor(c)};
  const CatPtr op = share(opposite(*c));
  const Span ospan{identity_functor(op), identity_functor(op)};
  // Every morphism is already a one-letter word, and raw-word counts grow
  // like (2 * morphisms)^bound, so longer words add cost without new classes.
  const std::size_t bound = std::min<std::size_t>(cfg.word_bound, 4);
  WordOracle oracle(span, bound);
  WordOracle oopp(ospan, bound);
  for (ObjIndex x = 0; x < c->num_objects() && in.pass; ++x)
    for (ObjIndex y = 0; y < c->num_objects() && in.pass; ++y) {
      const auto w = oracle.hom({Side::C, x}, {Side::C, y});
      const auto wo = oopp.hom({Side::C, y}, {Side::C, x});
      if (!w.stabilized || !wo.stabilized) {
        ++in.unstabilized;
        continue;
      }
      if (w.size() != c->hom(x, y).size()) {
        in.pass = false;
        in.detail = "Hom(" + c->object_name(x) + ", " + c->object_name(y) + "): " + std::to_string(c->hom(x, y).size()) +
                    " morphisms, " + std::to_string(w.size()) + " word classes";
      } else if (wo.size() != w.size()) {
        in.pass = false;
        in.detail = "opposite span gives " + std::to_string(wo.size()) + " classes for (" + c->object_name(y) + ", " +
                    c->object_name(x) + ")";
      }
    }
  return in;
}

inline Instance pi0_agreement(fuzz::Rng& rng, const JobConfig& cfg) {
  const Span span = fuzz::random_dwyer_span(rng);
  Instance in = span_instance(span);
  in.pass = true;
  WordOracle oracle(span, cfg.word_bound);
  for (ObjIndex b = 0; b < span.left_cat()->num_objects(); ++b)
    for (ObjIndex c = 0; c < span.right_cat()->num_objects(); ++c)
      for (bool b_first : {true, false}) {
        const PushoutObject pb{Side::B, b};
        const PushoutObject pc{Side::C, c};
        const auto r = b_first ? mapspace_report(oracle, pb, pc, cfg.dim) : mapspace_report(oracle, pc, pb, cfg.dim);
        if (r.agreement == Agreement::Unknown) ++in.unstabilized;
        if (r.agreement == Agreement::Disagree && in.pass) {
          in.pass = false;
          in.detail = span.left_cat()->object_name(b) + " / " + span.right_cat()->object_name(c) + ": " + r.detail;
        }
      }
  return in;
}

}  // namespace detail

inline const std::map<std::string, Suite>& fuzz_suites() {
  static const std::map<std::string, Suite> suites{
      {"fully-faithful",
       {"fbar fully faithful",
        [](fuzz::Rng& rng, const JobConfig& cfg) {
          const Span span = fuzz::random_dwyer_span(rng);
          Instance in = detail::span_instance(span);
          const auto p = dwyer_pushout(span, {cfg.dim, cfg.word_bound, false});
          const auto v = detail::fully_faithful_predicate(p.fbar);
          in.pass = v.holds;
          in.detail = v.witness;
          return in;
        }}},
      {"pi0", {"π0 agreement", detail::pi0_agreement}},
      {"fourth", {"CONSISTENT", [](fuzz::Rng& rng, const JobConfig& cfg) { return detail::fourth_or_fold(rng, cfg, true); }}},
      {"fold", {"CONSISTENT", [](fuzz::Rng& rng, const JobConfig& cfg) { return detail::fourth_or_fold(rng, cfg, false); }}},
      {"sieve-union",
       {"HOLDS",
        [](fuzz::Rng& rng, const JobConfig& cfg) {
          const CatPtr c = fuzz::random_poset(rng, fuzz::uniform(rng, 1, 6));
          const auto c0 = fuzz::random_down_set(rng, *c);
          const auto c1 = fuzz::random_down_set(rng, *c);
          Json names0 = Json::array();
          Json names1 = Json::array();
          for (ObjIndex x : c0) names0.push_back(c->object_name(x));
          for (ObjIndex x : c1) names1.push_back(c->object_name(x));
          Instance in{false, {}, Json{{"category", io::to_json(*c)}, {"C0", names0}, {"C1", names1}}, 0};
          const auto v = sieve_union_check(c, c0, c1, cfg.word_bound);
          in.pass = v.holds;
          in.detail = v.detail;
          in.unstabilized = v.comparison.unstabilized.size();
          return in;
        }}},
      {"preorder-closure",
       {"hom-sets ≤ 1",
        [](fuzz::Rng& rng, const JobConfig& cfg) {
          const Span span = fuzz::random_poset_dwyer_span(rng);
          Instance in = detail::span_instance(span);
          const auto p = dwyer_pushout(span, {cfg.dim, cfg.word_bound, false});
          in.pass = true;
          for (ObjIndex x = 0; x < p.d->num_objects(); ++x)
            for (ObjIndex y = 0; y < p.d->num_objects(); ++y)
              if (p.d->hom(x, y).size() > 1 && in.pass) {
                in.pass = false;
                in.detail = "Hom(" + p.d->object_name(x) + ", " + p.d->object_name(y) + ") has " +
                            std::to_string(p.d->hom(x, y).size()) + " elements";
              }
          return in;
        }}},
      {"beck-chevalley",
       {"bijective",
        [](fuzz::Rng& rng, const JobConfig&) {
          const Span span = fuzz::random_dwyer_span(rng);
          const SetFunctor f = fuzz::random_set_functor(rng, span.right_cat(), 3);
          Instance in = detail::span_instance(span);
          in.fixture["presheaf"] = io::to_json(f);
          const auto v = verify_beck_chevalley(span, f);
          in.pass = v.holds;
          in.detail = v.detail;
          return in;
        }}},
      {"reedy",
       {"HOLDS",
        [](fuzz::Rng& rng, const JobConfig& cfg) {
          const Functor inc = fuzz::random_two_level(rng);
          Json sub = Json::array();
          for (ObjIndex x : inc.obj_map) sub.push_back(inc.target->object_name(x));
          Instance in{false, {}, Json{{"category", io::to_json(*inc.target)}, {"subcategory", sub}}, 0};
          const auto v = verify_reedy_square(inc, cfg.set_bound, cfg.dim, cfg.budget);
          in.pass = v.holds;
          in.detail = v.detail;
          return in;
        }}},
      {"segal",
       {"HOLDS-UP-TO-BOUND",
        [](fuzz::Rng& rng, const JobConfig& cfg) {
          const Span span = fuzz::random_full_span(rng);
          Instance in = detail::span_instance(span);
          const auto np = nerve_pushout(span, std::max<std::size_t>(cfg.dim, 3));
          const auto v = check_segal_away(*np.sset, np.c_vertex, 3);
          in.pass = static_cast<bool>(v);
          if (!in.pass) in.detail = "necklace " + to_string(v.witness->necklace.necklace) + " has " +
                                    std::to_string(v.witness->extensions) + " fillers";
          return in;
        }}},
      {"oracle-identity", {"Hom agreement", detail::oracle_identity}},
  };
  return suites;
}

struct FuzzSummary {
  std::size_t passed = 0;
  std::size_t count = 0;
  std::size_t unstabilized = 0;
  std::size_t budget_failures = 0;
  std::vector<std::pair<std::size_t, Instance>> failures;
};

/// Instance i draws from an engine seeded with (seed, i), so results do not
/// depend on the number of workers.
inline FuzzSummary run_suite(const Suite& suite, std::size_t count, const JobConfig& cfg) {
  std::vector<Instance> results(count);
  std::vector<bool> budget(count, false);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                        static_cast<std::uint32_t>(i)};
      fuzz::Rng rng(seq);
      try {
        results[i] = suite.run(rng, cfg);
      } catch (const Error& e) {
        results[i].pass = false;
        results[i].detail = e.what();
        budget[i] = e.code() == ErrorCode::ExplosionGuard;
      }
    }
  };
  std::size_t threads = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  FuzzSummary s;
  s.count = count;
  for (std::size_t i = 0; i < count; ++i) {
    s.unstabilized += results[i].unstabilized;
    if (results[i].pass) {
      ++s.passed;
    } else {
      if (budget[i]) ++s.budget_failures;
      s.failures.emplace_back(i, std::move(results[i]));
    }
  }
  return s;
}

inline Outcome cmd_fuzz(const std::string& which, std::size_t count, const JobConfig& cfg) {
  const auto& suites = fuzz_suites();
  auto it = suites.find(which);
  if (it == suites.end()) {
    std::vector<std::string> names;
    for (const auto& [n, s] : suites) names.push_back(n);
    return {kInputInvalid, {}, "unknown suite '" + which + "'; known: " + detail::join(names) + "\n"};
  }
  const FuzzSummary s = run_suite(it->second, count, cfg);
  std::ostringstream text;
  text << which << ": " << s.passed << "/" << s.count << " " << it->second.label << " (seed " << cfg.seed << ")\n";
  if (s.unstabilized) text << "unstabilized oracle pairs: " << s.unstabilized << "\n";
  Json fj = Json::array();
  std::string saved;
  for (const auto& [i, in] : s.failures) {
    std::string path;
    if (!cfg.fixtures_dir.empty()) {
      std::filesystem::create_directories(cfg.fixtures_dir);
      path = (std::filesystem::path(cfg.fixtures_dir) / (which + "-seed" + std::to_string(cfg.seed) + "-" +
                                                         std::to_string(i) + ".json")).string();
      io::save(path, in.fixture);
    }
    text << "  instance " << i << ": " << in.detail << (path.empty() ? "" : " [" + path + "]") << "\n";
    fj.push_back({{"instance", i}, {"detail", in.detail}, {"fixture", path}});
  }
  const int code = s.failures.empty() ? kVerified : (s.budget_failures == s.failures.size() ? kBudgetExceeded : kExpectationFailed);
  return detail::render(cfg,
                        Json{{"suite", which},
                             {"seed", cfg.seed},
                             {"count", s.count},
                             {"passed", s.passed},
                             {"unstabilized", s.unstabilized},
                             {"failures", fj}},
                        text.str(), code);
}

// ---------------------------------------------------------------------------

/// Runs a command and maps library errors onto exit codes.
template <typename F>
Outcome guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return {exit_code_for(e.code()), {}, std::string(e.what()) + "\n"};
  } catch (const std::filesystem::filesystem_error& e) {
    return {kInputInvalid, {}, std::string(e.what()) + "\n"};
  }
}

}  // namespace pushcat::cli

#endif  // PUSHCAT_CLI_COMMANDS_HPP
