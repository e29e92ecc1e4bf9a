#ifndef PUSHCAT_NECKLACE_WORD_ORACLE_HPP
#define PUSHCAT_NECKLACE_WORD_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pushcat/comma.hpp"
#include "pushcat/core/functor.hpp"

namespace pushcat {

/// Which leg of the span B <- A -> C an object or letter lives on.
enum class Side : std::uint8_t { B = 0, C = 1 };

struct PushoutObject {
  Side side;
  ObjIndex obj;

  friend bool operator==(const PushoutObject&, const PushoutObject&) = default;
};

struct Letter {
  Side side;
  MorIndex m;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct WordClasses {
  /// One normal-form word per class, shortest first and then by encoding.
  std::vector<Word> representatives;
  bool stabilized = false;
  std::size_t count_at_previous_bound = 0;
  std::size_t word_bound = 0;
  std::size_t words_examined = 0;

  std::size_t size() const { return representatives.size(); }
};

/// Brute-force hom-sets of the 1-categorical pushout of a span, by words in
/// the letters of B and C modulo composition, identities and the
/// identification f(α) = g(α).
class WordOracle {
 public:
  WordOracle(Span span, std::size_t word_bound, std::size_t budget = 20'000'000)
      : span_(std::move(span)), bound_(word_bound), budget_(budget) {
    if (word_bound < 1) throw Error(ErrorCode::BoundTooSmall, "word bound must be at least 1");
    const FinCat& b = *span_.left_cat();
    const FinCat& c = *span_.right_cat();
    const FinCat& a = *span_.apex();
    nb_ = b.num_objects();
    // Object classes: B ⊔ C modulo f(a) ~ g(a).
    std::vector<std::size_t> parent(nb_ + c.num_objects());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (ObjIndex x = 0; x < a.num_objects(); ++x) {
      parent[find(span_.left.obj_map[x])] = find(nb_ + span_.right.obj_map[x]);
    }
    std::map<std::size_t, std::size_t> ids;
    object_class_.resize(parent.size());
    for (std::size_t x = 0; x < parent.size(); ++x) object_class_[x] = ids.emplace(find(x), ids.size()).first->second;
    num_classes_ = ids.size();

    out_.resize(num_classes_);
    for (MorIndex m = 0; m < b.num_morphisms(); ++m)
      if (!b.is_identity(m)) out_[class_of({Side::B, b.src(m)})].push_back({Side::B, m});
    for (MorIndex m = 0; m < c.num_morphisms(); ++m)
      if (!c.is_identity(m)) out_[class_of({Side::C, c.src(m)})].push_back({Side::C, m});

    swap_b_.resize(b.num_morphisms());
    swap_c_.resize(c.num_morphisms());
    for (MorIndex m = 0; m < a.num_morphisms(); ++m) {
      const MorIndex fm = span_.left.mor_map[m];
      const MorIndex gm = span_.right.mor_map[m];
      push_unique(swap_b_[fm], Letter{Side::C, gm});
      push_unique(swap_c_[gm], Letter{Side::B, fm});
    }
    cache_.resize(num_classes_);
  }

  std::size_t num_object_classes() const { return num_classes_; }
  std::size_t class_of(PushoutObject x) const { return object_class_[x.side == Side::B ? x.obj : nb_ + x.obj]; }
  std::size_t word_bound() const { return bound_; }
  const Span& span() const { return span_; }

  const FinCat& cat(Side s) const { return s == Side::B ? *span_.left_cat() : *span_.right_cat(); }
  ObjIndex src(const Letter& l) const { return cat(l.side).src(l.m); }
  ObjIndex dst(const Letter& l) const { return cat(l.side).dst(l.m); }

  /// Composes same-side neighbours and strips identities.
  Word normalize(const Word& w) const {
    Word out;
    for (const Letter& l : w) {
      const FinCat& c = cat(l.side);
      if (c.is_identity(l.m)) continue;
      if (!out.empty() && out.back().side == l.side && c.dst(out.back().m) == c.src(l.m)) {
        out.back().m = c.compose(l.m, out.back().m);
        if (c.is_identity(out.back().m)) out.pop_back();
        continue;
      }
      out.push_back(l);
    }
    return out;
  }

  WordClasses hom(PushoutObject x, PushoutObject y) {
    const std::size_t cx = class_of(x);
    const std::size_t cy = class_of(y);
    if (!cache_[cx]) cache_[cx] = compute(cx);
    const auto& all = *cache_[cx];
    WordClasses result;
    result.word_bound = bound_;
    result.words_examined = all.words_examined;
    auto it = all.per_target.find(cy);
    if (it != all.per_target.end()) {
      result.representatives = it->second.representatives;
      result.count_at_previous_bound = it->second.previous;
    }
    result.stabilized = result.count_at_previous_bound == result.representatives.size() && !all.budget_hit;
    return result;
  }

  /// Position of the class of a word among hom(x, y).representatives, where y
  /// is the end of the word; nullopt when its normal form exceeds the bound.
  std::optional<std::size_t> classify(PushoutObject x, const Word& w) {
    const std::size_t cx = class_of(x);
    if (!cache_[cx]) cache_[cx] = compute(cx);
    auto it = cache_[cx]->form_class.find(encode(normalize(w)));
    if (it == cache_[cx]->form_class.end()) return std::nullopt;
    return it->second.second;
  }

  /// Some object in the given class.
  PushoutObject representative(std::size_t object_class) const {
    for (std::size_t x = 0; x < object_class_.size(); ++x)
      if (object_class_[x] == object_class) {
        return x < nb_ ? PushoutObject{Side::B, static_cast<ObjIndex>(x)}
                       : PushoutObject{Side::C, static_cast<ObjIndex>(x - nb_)};
      }
    throw Error(ErrorCode::UnknownObject, "no such object class");
  }

  static Tuple encode(const Word& w) {
    Tuple t;
    for (const Letter& l : w) t.push_back(l.m << 1 | static_cast<std::uint32_t>(l.side));
    return t;
  }

 private:
  struct TargetClasses {
    std::vector<Word> representatives;
    std::size_t previous = 0;
  };
  struct SourceResult {
    std::map<std::size_t, TargetClasses> per_target;
    /// encoded normal form -> (target class, representative position)
    std::unordered_map<Tuple, std::pair<std::size_t, std::size_t>, TupleHash> form_class;
    std::size_t words_examined = 0;
    bool budget_hit = false;
  };

  static void push_unique(std::vector<Letter>& v, Letter l) {
    if (std::find(v.begin(), v.end(), l) == v.end()) v.push_back(l);
  }

  std::size_t end_class(const Word& w, std::size_t source) const {
    return w.empty() ? source : class_of({w.back().side, dst(w.back())});
  }

  std::shared_ptr<SourceResult> compute(std::size_t source) const {
    auto result = std::make_shared<SourceResult>();
    std::unordered_map<Tuple, std::uint32_t, TupleHash> ids;
    std::vector<Word> forms;
    std::vector<std::uint32_t> parent;
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto id_of = [&](const Word& normal) {
      auto [it, fresh] = ids.emplace(encode(normal), static_cast<std::uint32_t>(forms.size()));
      if (fresh) {
        forms.push_back(normal);
        parent.push_back(it->second);
      }
      return it->second;
    };
    auto snapshot = [&]() {
      std::map<std::size_t, std::map<std::uint32_t, std::uint32_t>> best;  // target -> root -> form
      for (std::uint32_t i = 0; i < forms.size(); ++i) {
        auto& slot = best[end_class(forms[i], source)];
        const std::uint32_t r = find(i);
        auto it = slot.find(r);
        if (it == slot.end() || shorter(forms[i], forms[it->second])) slot[r] = i;
      }
      return best;
    };

    std::size_t examined = 0;
    auto visit = [&](const Word& word) {
      ++examined;
      const std::uint32_t base = id_of(normalize(word));
      Word alt = word;
      for (std::size_t i = 0; i < word.size(); ++i) {
        const auto& swaps = word[i].side == Side::B ? swap_b_[word[i].m] : swap_c_[word[i].m];
        for (const Letter& l : swaps) {
          alt[i] = l;
          const std::uint32_t other = id_of(normalize(alt));
          parent[find(other)] = find(base);
        }
        alt[i] = word[i];
      }
    };
    // Words by length; classes are snapshotted after bound - 1.
    std::map<std::size_t, std::map<std::uint32_t, std::uint32_t>> previous;
    std::vector<std::vector<Word>> frontier{{Word{}}};
    visit(Word{});
    if (bound_ == 1) previous = snapshot();
    for (std::size_t len = 1; len <= bound_ && !result->budget_hit; ++len) {
      std::vector<Word> next;
      for (const Word& prefix : frontier.back()) {
        const std::size_t at = end_class(prefix, source);
        for (const Letter& l : out_[at]) {
          Word word = prefix;
          word.push_back(l);
          visit(word);
          if (len < bound_) next.push_back(std::move(word));
          if (examined > budget_) {
            result->budget_hit = true;
            break;
          }
        }
        if (result->budget_hit) break;
      }
      frontier.push_back(std::move(next));
      if (len + 1 == bound_) previous = snapshot();
    }
    result->words_examined = examined;
    for (auto& [target, roots] : snapshot()) {
      TargetClasses tc;
      std::vector<std::pair<Word, std::uint32_t>> reps;
      for (auto [root, form] : roots) reps.emplace_back(forms[form], root);
      std::sort(reps.begin(), reps.end(), [](const auto& p, const auto& q) { return shorter(p.first, q.first); });
      std::map<std::uint32_t, std::size_t> position;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        tc.representatives.push_back(reps[i].first);
        position[reps[i].second] = i;
      }
      for (std::uint32_t i = 0; i < forms.size(); ++i) {
        if (end_class(forms[i], source) != target) continue;
        result->form_class.emplace(encode(forms[i]), std::make_pair(target, position.at(find(i))));
      }
      tc.previous = previous.count(target) ? previous[target].size() : 0;
      result->per_target.emplace(target, std::move(tc));
    }
    for (auto& [target, roots] : previous) {
      if (!result->per_target.count(target)) result->per_target[target].previous = roots.size();
    }
    return result;
  }

  static bool shorter(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return encode(a) < encode(b);
  }

  Span span_;
  std::size_t bound_;
  std::size_t budget_;
  std::size_t nb_ = 0;
  std::size_t num_classes_ = 0;
  std::vector<std::size_t> object_class_;
  std::vector<std::vector<Letter>> out_;
  std::vector<std::vector<Letter>> swap_b_;
  std::vector<std::vector<Letter>> swap_c_;
  std::vector<std::shared_ptr<SourceResult>> cache_;
};

inline WordClasses pushout_hom_sets(const Span& span, PushoutObject x, PushoutObject y, std::size_t word_bound) {
  WordOracle oracle(span, word_bound);
  return oracle.hom(x, y);
}

inline std::string to_string(const Word& w, const Span& span) {
  if (w.empty()) return "id";
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += " · ";
    s += (l.side == Side::B ? "B:" : "C:") +
         (l.side == Side::B ? span.left_cat() : span.right_cat())->morphism_id(l.m);
  }
  return s;
}

}  // namespace pushcat

#endif  // PUSHCAT_NECKLACE_WORD_ORACLE_HPP
