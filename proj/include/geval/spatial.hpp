#pragma once

#include "geval/matching.hpp"
#include "geval/types.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace geval {

enum class Relation : std::uint8_t {
    LeftOf = 1 << 0,
    RightOf = 1 << 1,
    Above = 1 << 2,
    Below = 1 << 3,
    Overlaps = 1 << 4,
    Contains = 1 << 5,
    Inside = 1 << 6,
};

std::string to_string(Relation relation);

struct RelationSet {
    std::uint8_t bits = 0;
    double center_distance = 0.0;

    bool has(Relation r) const { return bits & static_cast<std::uint8_t>(r); }
    void set(Relation r) { bits |= static_cast<std::uint8_t>(r); }
    std::vector<Relation> relations() const;
};

struct RelateOptions {
    double margin_px = 1.0;         // tau: required center separation
    double separation_factor = 0.0; // lambda: half-extent scaling
};

// Qualitative relations between two boxes. Throws InvalidBoxError.
RelationSet relate(const BBox& a, const BBox& b, const RelateOptions& opts = {});

enum class OracleVerdict { Yes, No, Unknown };

std::string to_string(OracleVerdict verdict);

// phrase -> (relation, polarity). Longest phrase match wins; matching is
// token-based so "in" never fires inside "painting".
class RelationKeywordTable {
public:
    static RelationKeywordTable builtin();
    // "phrase<TAB>relation[<TAB>+|-]" lines.
    static RelationKeywordTable load(const std::filesystem::path& path);

    void add(const std::string& phrase, Relation relation, bool positive = true);

    struct Match {
        Relation relation;
        bool positive;
    };
    // Longest matching phrase in the question; ties go to the earliest.
    std::optional<Match> find(const std::string& question) const;

private:
    struct Entry {
        std::vector<std::string> words;
        Relation relation;
        bool positive;
    };
    std::vector<Entry> entries_;
};

// Geometry-only answer for direction questions: both entities bound and a
// keyword recognized produce Yes/No, anything else Unknown.
OracleVerdict oracle_answer(const std::string& question, const GroundedEntities& grounded,
                            const RelationKeywordTable& table = RelationKeywordTable::builtin(),
                            const RelateOptions& opts = {});

}  // namespace geval
