#ifndef PUSHCAT_IO_HPP
#define PUSHCAT_IO_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pushcat/core/fincat.hpp"
#include "pushcat/core/functor.hpp"
#include "pushcat/core/set_functor.hpp"

/// JSON documents for categories, functors, spans and set-valued functors.
/// Emission goes through to_raw, so objects and morphisms come out sorted by id.
namespace pushcat::io {

using Json = nlohmann::json;

/// Reads and parses a file; syntax errors carry line and column.
inline Json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

namespace detail {

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::ParseError, where + ": missing field '" + key + "'");
  return *it;
}

inline std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, where + ": expected a string");
  return j.get<std::string>();
}

inline std::size_t natural(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw Error(ErrorCode::ParseError, where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

inline std::vector<std::string> strings(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, where + ": expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(text(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<std::pair<std::string, std::string>> string_map(const Json& j, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, where + ": expected an object");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, v] : j.items()) out.emplace_back(k, text(v, where + "." + k));
  return out;
}

}  // namespace detail

inline RawCategory parse_raw_category(const Json& j, const std::string& where = "category") {
  RawCategory raw;
  raw.objects = detail::strings(detail::field(j, "objects", where), where + ".objects");
  if (j.contains("morphisms")) {
    const Json& ms = j["morphisms"];
    if (!ms.is_array()) throw Error(ErrorCode::ParseError, where + ".morphisms: expected an array");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const std::string at = where + ".morphisms[" + std::to_string(i) + "]";
      raw.morphisms.push_back({detail::text(detail::field(ms[i], "id", at), at + ".id"),
                               detail::text(detail::field(ms[i], "src", at), at + ".src"),
                               detail::text(detail::field(ms[i], "dst", at), at + ".dst")});
    }
  }
  if (j.contains("identities")) raw.identities = detail::string_map(j["identities"], where + ".identities");
  if (j.contains("compose")) {
    const Json& cs = j["compose"];
    if (!cs.is_array()) throw Error(ErrorCode::ParseError, where + ".compose: expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string at = where + ".compose[" + std::to_string(i) + "]";
      raw.compose.push_back({detail::text(detail::field(cs[i], "g", at), at + ".g"),
                             detail::text(detail::field(cs[i], "f", at), at + ".f"),
                             detail::text(detail::field(cs[i], "result", at), at + ".result")});
    }
  }
  return raw;
}

inline CatPtr parse_category(const Json& j, const std::string& where = "category") {
  return share(validate_category(parse_raw_category(j, where)));
}

inline Json to_json(const RawCategory& raw) {
  Json j;
  j["objects"] = raw.objects;
  j["morphisms"] = Json::array();
  for (const auto& m : raw.morphisms) j["morphisms"].push_back({{"id", m.id}, {"src", m.src}, {"dst", m.dst}});
  j["identities"] = Json::object();
  for (const auto& [o, id] : raw.identities) j["identities"][o] = id;
  j["compose"] = Json::array();
  for (const auto& c : raw.compose) j["compose"].push_back({{"g", c.g}, {"f", c.f}, {"result", c.result}});
  return j;
}

inline Json to_json(const FinCat& c) { return to_json(to_raw(c)); }

inline Functor parse_functor(const Json& j, const CatPtr& source, const CatPtr& target,
                             const std::string& where = "functor") {
  RawFunctor raw;
  raw.objects = detail::string_map(detail::field(j, "objects", where), where + ".objects");
  if (j.contains("morphisms")) raw.morphisms = detail::string_map(j["morphisms"], where + ".morphisms");
  return validate_functor(raw, source, target);
}

inline Json to_json(const Functor& f) {
  const RawFunctor raw = to_raw(f);
  Json j;
  j["objects"] = Json::object();
  for (const auto& [a, b] : raw.objects) j["objects"][a] = b;
  j["morphisms"] = Json::object();
  for (const auto& [a, b] : raw.morphisms) j["morphisms"][a] = b;
  return j;
}

/// {"A", "B", "C": categories, "f": A -> B, "g": A -> C}.
inline Span parse_span(const Json& j) {
  const CatPtr a = parse_category(detail::field(j, "A", "span"), "A");
  const CatPtr b = parse_category(detail::field(j, "B", "span"), "B");
  const CatPtr c = parse_category(detail::field(j, "C", "span"), "C");
  return Span{parse_functor(detail::field(j, "f", "span"), a, b, "f"),
              parse_functor(detail::field(j, "g", "span"), a, c, "g")};
}

inline Json to_json(const Span& s) {
  return Json{{"A", to_json(*s.apex())}, {"B", to_json(*s.left_cat())}, {"C", to_json(*s.right_cat())},
              {"f", to_json(s.left)}, {"g", to_json(s.right)}};
}

inline std::vector<ObjIndex> parse_objects(const Json& j, const FinCat& c, const std::string& where) {
  std::vector<ObjIndex> out;
  for (const auto& name : detail::strings(j, where)) {
    auto x = c.find_object(name);
    if (!x) throw Error(ErrorCode::UnknownObject, where + ": no object '" + name + "'");
    out.push_back(*x);
  }
  return out;
}

/// {"sizes": {object: n}, "maps": {morphism: [images]}}; identity maps may be
/// omitted.
inline SetFunctor parse_set_functor(const Json& j, const CatPtr& c, const std::string& where = "presheaf") {
  SetFunctor f{c, std::vector<std::size_t>(c->num_objects(), 0), std::vector<std::vector<std::size_t>>(c->num_morphisms())};
  const Json& sizes = detail::field(j, "sizes", where);
  if (!sizes.is_object()) throw Error(ErrorCode::ParseError, where + ".sizes: expected an object");
  std::vector<bool> seen(c->num_objects(), false);
  for (const auto& [name, n] : sizes.items()) {
    auto x = c->find_object(name);
    if (!x) throw Error(ErrorCode::UnknownObject, where + ".sizes: no object '" + name + "'");
    f.sizes[*x] = detail::natural(n, where + ".sizes." + name);
    seen[*x] = true;
  }
  for (ObjIndex x = 0; x < c->num_objects(); ++x)
    if (!seen[x]) throw Error(ErrorCode::ParseError, where + ".sizes: missing object '" + c->object_name(x) + "'");
  std::vector<bool> given(c->num_morphisms(), false);
  if (j.contains("maps")) {
    if (!j["maps"].is_object()) throw Error(ErrorCode::ParseError, where + ".maps: expected an object");
    for (const auto& [id, table] : j["maps"].items()) {
      auto m = c->find_morphism(id);
      if (!m) throw Error(ErrorCode::DanglingReference, where + ".maps: no morphism '" + id + "'");
      if (!table.is_array()) throw Error(ErrorCode::ParseError, where + ".maps." + id + ": expected an array");
      for (std::size_t i = 0; i < table.size(); ++i)
        f.maps[*m].push_back(detail::natural(table[i], where + ".maps." + id + "[" + std::to_string(i) + "]"));
      given[*m] = true;
    }
  }
  for (MorIndex m = 0; m < c->num_morphisms(); ++m) {
    if (given[m]) continue;
    if (!c->is_identity(m)) throw Error(ErrorCode::ParseError, where + ".maps: missing morphism '" + c->morphism_id(m) + "'");
    for (std::size_t e = 0; e < f.sizes[c->src(m)]; ++e) f.maps[m].push_back(e);
  }
  check_set_functor(f);
  return f;
}

inline Json to_json(const SetFunctor& f) {
  const FinCat& c = *f.source;
  Json j;
  j["sizes"] = Json::object();
  for (ObjIndex x = 0; x < c.num_objects(); ++x) j["sizes"][c.object_name(x)] = f.sizes[x];
  j["maps"] = Json::object();
  for (MorIndex m = 0; m < c.num_morphisms(); ++m) j["maps"][c.morphism_id(m)] = f.maps[m];
  return j;
}

/// Stable text form: two-space indent and a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void save(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, path + ": cannot write");
  out << dump(j);
}

}  // namespace pushcat::io

#endif  // PUSHCAT_IO_HPP
