#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace geval {

enum class Pos { DET, ADJ, NOUN, NUM, VERB, ADP, PRON, OTHER };

std::string to_string(Pos pos);
std::optional<Pos> pos_from_string(const std::string& name);

struct Token {
    std::string text;
    Pos pos = Pos::OTHER;
    std::size_t index = 0;

    bool operator==(const Token& other) const = default;
};

// The two target entities of a question, in question order. Empty string
// means the slot could not be filled.
struct EntityPair {
    std::string first;
    std::string second;

    bool operator==(const EntityPair& other) const = default;
};

// Whitespace/punctuation split; digit runs become standalone tokens and all
// other punctuation is dropped. pos is left unset (OTHER).
std::vector<Token> tokenize(const std::string& question);

// word -> most frequent tag table, with suffix rules for unknown words.
class TagLexicon {
public:
    static TagLexicon builtin();
    // UTF-8 "word<TAB>TAG" lines. Throws LexiconMissingError /
    // MalformedLexiconLineError.
    static TagLexicon load(const std::filesystem::path& path);

    std::optional<Pos> lookup(const std::string& lowercase_word) const;
    std::size_t size() const { return table_.size(); }

private:
    std::map<std::string, Pos> table_;
};

// Pluggable tagging hook. The built-in rule tagger is the default; an HTTP
// tagger speaking the grounding wire protocol can be swapped in.
class PosTagger {
public:
    virtual ~PosTagger() = default;
    virtual std::vector<Pos> tag(const std::vector<Token>& tokens) const = 0;
};

class RuleTagger : public PosTagger {
public:
    RuleTagger() : lexicon_(TagLexicon::builtin()) {}
    explicit RuleTagger(TagLexicon lexicon) : lexicon_(std::move(lexicon)) {}

    std::vector<Pos> tag(const std::vector<Token>& tokens) const override;

private:
    TagLexicon lexicon_;
};

// Tags tokens in place using the given tagger.
std::vector<Token> pos_tag(std::vector<Token> tokens, const PosTagger& tagger);

// Maximal DET? ADJ* NOUN+ NUM? matches, left to right; the determiner is
// stripped from the emitted chunk text.
std::vector<std::string> extract_noun_chunks(const std::vector<Token>& tagged);

std::vector<std::string> default_entity_blocklist();

class EntityExtractor {
public:
    EntityExtractor();
    explicit EntityExtractor(std::shared_ptr<const PosTagger> tagger,
                             std::vector<std::string> blocklist = default_entity_blocklist());

    // Chunks the question, drops blocklisted heads, returns the first two
    // surviving distinct chunks. Degenerate questions yield empty slots.
    EntityPair extract_target_entities(const std::string& question) const;

    std::vector<std::string> chunks(const std::string& question) const;

    const PosTagger& tagger() const { return *tagger_; }

private:
    std::shared_ptr<const PosTagger> tagger_;
    std::vector<std::string> blocklist_;  // normalized lowercase
};

// Shared default tagger instance (read-only, safe to share across threads).
const PosTagger& default_tagger();

// Last NOUN token of the phrase under the given tagger; falls back to the
// last non-NUM token, then to the last token.
std::string head_noun(const std::string& phrase, const PosTagger& tagger = default_tagger());

}  // namespace geval
