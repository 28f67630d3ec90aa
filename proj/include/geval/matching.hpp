#pragma once

#include "geval/entities.hpp"
#include "geval/types.hpp"

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace geval {

// Symmetric, reflexive synonym map over normalized single-word terms.
class SynonymLexicon {
public:
    SynonymLexicon() = default;

    // "term<TAB>syn1,syn2,..." lines; duplicate term lines union their sets.
    static SynonymLexicon load(const std::filesystem::path& path);
    static SynonymLexicon from_lines(const std::vector<std::string>& lines);

    void add(const std::string& term, const std::vector<std::string>& synonyms);

    bool contains(const std::string& term) const;
    // Always includes the queried term itself.
    std::set<std::string> synonyms(const std::string& term) const;
    bool are_synonyms(const std::string& a, const std::string& b) const;

    std::size_t size() const { return map_.size(); }

private:
    std::map<std::string, std::set<std::string>> map_;
};

// Lowercase, punctuation stripped, whitespace collapsed, each word naively
// singularized (ies->y; es dropped when the lexicon knows the stem; else a
// trailing s dropped).
std::string normalize_term(std::string_view text);
std::string normalize_term(std::string_view text, const SynonymLexicon& lexicon);

enum class MatchKind { Exact, HeadNoun, Synonym };

std::string to_string(MatchKind kind);

struct EntityBinding {
    std::string entity;  // original-question casing
    BBox box;
    MatchKind kind = MatchKind::Exact;
    std::size_t detection_index = 0;

    bool operator==(const EntityBinding& other) const = default;
};

// At most two bindings, in question order. Unmatched entities are absent.
struct GroundedEntities {
    std::vector<EntityBinding> bindings;

    const EntityBinding* find(const std::string& entity) const;

    bool operator==(const GroundedEntities& other) const = default;
};

struct FilteredTriples {
    std::vector<Triple> triples;  // source order, exact duplicates removed

    bool operator==(const FilteredTriples& other) const = default;
};

// Scores every detection against each target entity (3 exact label match,
// 2 head-noun match, 1 synonym-of-head-noun, 0 otherwise) and binds the
// best-scoring detection, breaking ties by confidence, then box area, then
// lowest detection index.
GroundedEntities match_entities(const EntityPair& pair, const DetectionSet& dets,
                                const SynonymLexicon& lexicon,
                                const PosTagger& tagger = default_tagger());

// Keeps a triple iff its subject or object matches either target entity
// under the exact -> head-noun -> synonym chain.
FilteredTriples filter_triples(const SceneGraph& graph, const EntityPair& pair,
                               const SynonymLexicon& lexicon,
                               const PosTagger& tagger = default_tagger());

// True when `term` (already normalized) matches `entity` under the chain.
bool term_matches_entity(const std::string& normalized_term, const std::string& entity,
                         const SynonymLexicon& lexicon, const PosTagger& tagger);

}  // namespace geval
