#ifndef PUSHCAT_TESTS_HELPERS_HPP
#define PUSHCAT_TESTS_HELPERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "pushcat/core/constructions.hpp"
#include "pushcat/core/functor.hpp"

namespace pushcat::testing {

inline CatPtr poset(const std::vector<std::string>& elements,
                    const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
  return share(preorder_category(elements, relations));
}

/// Inclusion of a full subcategory given by object names.
inline Functor include(const CatPtr& c, const std::vector<std::string>& names) {
  return full_subcategory_by_name(c, names).inclusion;
}

/// Functor between preorders determined by an object assignment.
inline Functor monotone(const CatPtr& s, const CatPtr& t, const std::vector<std::pair<std::string, std::string>>& objs) {
  RawFunctor raw{objs, {}};
  return validate_functor(raw, s, t);
}

/// The span ({1} ⊂ {1<2}, {1} ⊂ {0<1<2}).
inline Span example_span() {
  auto a = poset({"1"}, {});
  auto b = poset({"1", "2"}, {{0, 1}});
  auto c = poset({"0", "1", "2"}, {{0, 1}, {1, 2}});
  return Span{monotone(a, b, {{"1", "1"}}), monotone(a, c, {{"1", "1"}})};
}

inline Span identity_span(const CatPtr& c) { return Span{identity_functor(c), identity_functor(c)}; }

}  // namespace pushcat::testing

#endif  // PUSHCAT_TESTS_HELPERS_HPP
