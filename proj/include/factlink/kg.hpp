#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "factlink/common.hpp"
#include "factlink/jsonl.hpp"
#include "factlink/unicode.hpp"

namespace factlink {

// Joiner between the subject, relation and object labels of a fact label.
inline constexpr char kComponentJoiner[] = " ; ";

// Fixed priority used when presenting or concatenating label languages.
inline int language_rank(std::string_view lang) {
  static constexpr std::string_view kOrder[] = {"en", "hi", "te", "ta", "ur", "gu", "as"};
  for (int i = 0; i < static_cast<int>(std::size(kOrder)); ++i) {
    if (lang == kOrder[i]) return i;
  }
  return static_cast<int>(std::size(kOrder));
}

inline bool language_less(std::string_view a, std::string_view b) {
  const int ra = language_rank(a);
  const int rb = language_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

enum class Direction { LeftToRight, RightToLeft };

// An entity or relation with its per-language display labels.
struct LabelSet {
  std::string id;
  std::map<std::string, std::string> labels;

  const std::string* label(const std::string& lang) const {
    auto it = labels.find(lang);
    return it == labels.end() ? nullptr : &it->second;
  }
};

struct Fact {
  FactId id;
  std::uint32_t subject = 0;
  std::uint32_t relation = 0;
  std::uint32_t object = 0;
};

struct FactLabel {
  FactId fact;
  std::string language;
  std::string text;
  Direction direction = Direction::LeftToRight;
};

struct KgOptions {
  std::set<std::string> rtl_languages = {"ur"};
};

namespace detail {

inline bool valid_language_code(std::string_view lang) {
  if (lang.size() < 2 || lang.size() > 8) return false;
  for (char c : lang) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

struct TripleHash {
  std::size_t operator()(const std::array<std::uint32_t, 3>& t) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t v : t) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::vector<LabelSet> load_label_file(const std::filesystem::path& path, const char* kind,
                                             std::unordered_map<std::string, std::uint32_t>& index) {
  std::vector<LabelSet> items;
  read_jsonl(path, [&](const Json& j, std::size_t line) {
    const std::string ctx = line_context(path, line);
    LabelSet item;
    item.id = require_string(j, "id", ctx);
    if (item.id.empty()) throw LoadError(ctx + std::string(kind) + " id must be non-empty");
    const Json& labels = require_field(j, "labels", ctx);
    if (!labels.is_object() || labels.empty()) {
      throw LoadError(ctx + std::string(kind) + " " + item.id + " needs at least one label");
    }
    for (const auto& [lang, value] : labels.items()) {
      if (!valid_language_code(lang)) {
        throw LoadError(ctx + "invalid language code \"" + lang + "\"");
      }
      if (!value.is_string()) {
        throw LoadError(ctx + "label for language \"" + lang + "\" must be a string");
      }
      std::string text = value.get<std::string>();
      if (normalize_casefold(text).empty()) {
        throw LoadError(ctx + std::string(kind) + " " + item.id + ": label empty after normalization for language \"" + lang + "\"");
      }
      item.labels.emplace(lang, std::move(text));
    }
    auto [it, inserted] = index.emplace(item.id, static_cast<std::uint32_t>(items.size()));
    (void)it;
    if (!inserted) throw LoadError(ctx + "duplicate " + kind + " id " + item.id);
    items.push_back(std::move(item));
  });
  return items;
}

}  // namespace detail

// Immutable store of entities, relations and facts with multilingual
// labels. Loading is single-writer; all accessors are safe to call
// concurrently afterwards.
class KnowledgeGraph {
 public:
  static KnowledgeGraph load(const std::filesystem::path& entities_file,
                             const std::filesystem::path& relations_file,
                             const std::filesystem::path& facts_file, KgOptions options = {}) {
    KnowledgeGraph kg;
    kg.rtl_ = std::move(options.rtl_languages);
    kg.entities_ = detail::load_label_file(entities_file, "entity", kg.entity_index_);
    kg.relations_ = detail::load_label_file(relations_file, "relation", kg.relation_index_);

    std::vector<std::size_t> fact_lines;
    read_jsonl(facts_file, [&](const Json& j, std::size_t line) {
      const std::string ctx = line_context(facts_file, line);
      Fact f;
      f.id = require_string(j, "id", ctx);
      if (f.id.empty()) throw LoadError(ctx + "fact id must be non-empty");
      if (f.id == kNullFactId) throw LoadError(ctx + "fact id " + kNullFactId + " is reserved");
      const std::string subject = require_string(j, "subject", ctx);
      const std::string relation = require_string(j, "relation", ctx);
      const std::string object = require_string(j, "object", ctx);
      auto se = kg.entity_index_.find(subject);
      if (se == kg.entity_index_.end()) {
        throw LoadError(ctx + "fact " + f.id + ": unknown entity " + subject);
      }
      auto re = kg.relation_index_.find(relation);
      if (re == kg.relation_index_.end()) {
        throw LoadError(ctx + "fact " + f.id + ": unknown relation " + relation);
      }
      auto oe = kg.entity_index_.find(object);
      if (oe == kg.entity_index_.end()) {
        throw LoadError(ctx + "fact " + f.id + ": unknown entity " + object);
      }
      f.subject = se->second;
      f.relation = re->second;
      f.object = oe->second;
      auto [it, inserted] =
          kg.fact_index_.emplace(f.id, static_cast<std::uint32_t>(kg.facts_.size()));
      (void)it;
      if (!inserted) throw LoadError(ctx + "duplicate fact id " + f.id);
      kg.facts_.push_back(std::move(f));
      fact_lines.push_back(line);
    });

    // Reject duplicate (subject, relation, object) triples.
    std::vector<std::uint32_t> order(kg.facts_.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      const Fact& fa = kg.facts_[a];
      const Fact& fb = kg.facts_[b];
      return std::tie(fa.subject, fa.relation, fa.object) <
             std::tie(fb.subject, fb.relation, fb.object);
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Fact& prev = kg.facts_[order[i - 1]];
      const Fact& cur = kg.facts_[order[i]];
      if (prev.subject == cur.subject && prev.relation == cur.relation &&
          prev.object == cur.object) {
        const std::uint32_t later = std::max(order[i - 1], order[i]);
        const std::uint32_t earlier = std::min(order[i - 1], order[i]);
        throw LoadError(line_context(facts_file, fact_lines[later]) + "fact " +
                        kg.facts_[later].id + ": duplicate triple of fact " +
                        kg.facts_[earlier].id);
      }
    }

    std::set<std::string> langs;
    for (const auto& e : kg.entities_) {
      for (const auto& [lang, text] : e.labels) langs.insert(lang);
    }
    for (const auto& r : kg.relations_) {
      for (const auto& [lang, text] : r.labels) langs.insert(lang);
    }
    kg.languages_.assign(langs.begin(), langs.end());
    std::sort(kg.languages_.begin(), kg.languages_.end(),
              [](const std::string& a, const std::string& b) { return language_less(a, b); });
    return kg;
  }

  const std::vector<LabelSet>& entities() const { return entities_; }
  const std::vector<LabelSet>& relations() const { return relations_; }
  const std::vector<Fact>& facts() const { return facts_; }

  const Fact* find_fact(const FactId& id) const {
    auto it = fact_index_.find(id);
    return it == fact_index_.end() ? nullptr : &facts_[it->second];
  }

  const LabelSet& subject_of(const Fact& f) const { return entities_[f.subject]; }
  const LabelSet& relation_of(const Fact& f) const { return relations_[f.relation]; }
  const LabelSet& object_of(const Fact& f) const { return entities_[f.object]; }

  bool is_rtl(const std::string& lang) const { return rtl_.count(lang) > 0; }

  // Union of entity and relation label languages, in language_rank order.
  const std::vector<std::string>& languages() const { return languages_; }

  // Fact label in `language`; absent unless the subject, relation and
  // object all carry a label in that language. RTL languages render the
  // components in (object, relation, subject) order.
  std::optional<FactLabel> build_label(const Fact& fact, const std::string& language) const {
    const std::string* s = entities_[fact.subject].label(language);
    const std::string* r = relations_[fact.relation].label(language);
    const std::string* o = entities_[fact.object].label(language);
    if (s == nullptr || r == nullptr || o == nullptr) return std::nullopt;
    FactLabel out;
    out.fact = fact.id;
    out.language = language;
    if (is_rtl(language)) {
      out.direction = Direction::RightToLeft;
      out.text = *o + kComponentJoiner + *r + kComponentJoiner + *s;
    } else {
      out.direction = Direction::LeftToRight;
      out.text = *s + kComponentJoiner + *r + kComponentJoiner + *o;
    }
    return out;
  }

  std::optional<FactLabel> build_label(const FactId& fact_id, const std::string& language) const {
    const Fact* f = find_fact(fact_id);
    if (f == nullptr) return std::nullopt;
    return build_label(*f, language);
  }

  // All fact ids whose English label normalizes to `label`, ascending by
  // id. The NULL label resolves to the NULL fact.
  std::vector<FactId> lookup(std::string_view label) const {
    const std::string key = normalize_casefold(label);
    std::vector<FactId> out;
    const auto& dict = dictionary();
    auto it = dict.find(key);
    if (it != dict.end()) {
      out.reserve(it->second.size() + 1);
      for (std::uint32_t idx : it->second) out.push_back(facts_[idx].id);
    }
    if (key == normalize_casefold(kNullFactLabel)) out.push_back(kNullFactId);
    std::sort(out.begin(), out.end());
    return out;
  }

  // language -> number of facts with a complete label in that language.
  std::map<std::string, std::size_t> label_language_stats() const {
    std::map<std::string, std::size_t> counts;
    for (const Fact& f : facts_) {
      for (const auto& [lang, text] : entities_[f.subject].labels) {
        if (relations_[f.relation].label(lang) != nullptr &&
            entities_[f.object].label(lang) != nullptr) {
          ++counts[lang];
        }
      }
    }
    return counts;
  }

  std::optional<FactId> fact_for_triple(const EntityId& subject, const RelationId& relation,
                                        const EntityId& object) const {
    auto s = entity_index_.find(subject);
    auto r = relation_index_.find(relation);
    auto o = entity_index_.find(object);
    if (s == entity_index_.end() || r == relation_index_.end() || o == entity_index_.end()) {
      return std::nullopt;
    }
    const auto& index = triple_index();
    auto it = index.find({s->second, r->second, o->second});
    if (it == index.end()) return std::nullopt;
    return facts_[it->second].id;
  }

 private:
  using Dictionary = std::unordered_map<std::string, std::vector<std::uint32_t>>;
  using TripleIndex =
      std::unordered_map<std::array<std::uint32_t, 3>, std::uint32_t, detail::TripleHash>;

  const Dictionary& dictionary() const {
    std::call_once(dictionary_once_, [this] {
      for (std::uint32_t i = 0; i < facts_.size(); ++i) {
        auto label = build_label(facts_[i], "en");
        if (!label) continue;
        dictionary_[normalize_casefold(label->text)].push_back(i);
      }
      for (auto& [key, ids] : dictionary_) {
        std::sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) {
          return facts_[a].id < facts_[b].id;
        });
      }
    });
    return dictionary_;
  }

  const TripleIndex& triple_index() const {
    std::call_once(triple_once_, [this] {
      triple_index_.reserve(facts_.size());
      for (std::uint32_t i = 0; i < facts_.size(); ++i) {
        const Fact& f = facts_[i];
        triple_index_.emplace(std::array<std::uint32_t, 3>{f.subject, f.relation, f.object}, i);
      }
    });
    return triple_index_;
  }

  std::vector<LabelSet> entities_;
  std::vector<LabelSet> relations_;
  std::vector<Fact> facts_;
  std::unordered_map<std::string, std::uint32_t> entity_index_;
  std::unordered_map<std::string, std::uint32_t> relation_index_;
  std::unordered_map<std::string, std::uint32_t> fact_index_;
  std::set<std::string> rtl_;
  std::vector<std::string> languages_;

  mutable std::once_flag dictionary_once_;
  mutable Dictionary dictionary_;
  mutable std::once_flag triple_once_;
  mutable TripleIndex triple_index_;
};

}  // namespace factlink
