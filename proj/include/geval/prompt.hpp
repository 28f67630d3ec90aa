#pragma once

#include "geval/matching.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace geval {

enum class PromptVariant { Baseline, GPLOnly, SGOnly, Full };

std::string to_string(PromptVariant variant);
PromptVariant prompt_variant_from_string(const std::string& name);

struct PromptText {
    std::string text;
    PromptVariant variant = PromptVariant::Baseline;
    std::uint64_t context_hash = 0;

    bool operator==(const PromptText& other) const = default;
};

// "{(s, p, o), (s, p, o)}"; empty list renders "{}".
std::string serialize_triples(const FilteredTriples& triples);

// "{entity:(x,y,w,h), entity:(x,y,w,h)}" with coordinates rounded
// half-away-from-zero to integers; empty bindings render "{}".
std::string serialize_gpl(const GroundedEntities& grounded);

long long round_half_away(double value);

// One template per variant with {{sg}}, {{gpl}} and {{question}} slots.
class PromptTemplates {
public:
    static PromptTemplates builtin();
    // Reads baseline.tmpl, gpl_only.tmpl, sg_only.tmpl, full.tmpl from a
    // directory. A single trailing newline per file is ignored.
    static PromptTemplates load_dir(const std::filesystem::path& dir);

    const std::string& text(PromptVariant variant) const;

private:
    std::string baseline_;
    std::string gpl_only_;
    std::string sg_only_;
    std::string full_;
};

// Byte-exact template instantiation. Baseline returns the question
// unchanged; absent blocks render "{}" so the template text never changes.
PromptText build_prompt(PromptVariant variant, const GroundedEntities& grounded,
                        const FilteredTriples& triples, const std::string& question,
                        const PromptTemplates& templates = PromptTemplates::builtin());

std::uint64_t prompt_context_hash(const GroundedEntities& grounded,
                                  const FilteredTriples& triples,
                                  const std::string& question);

}  // namespace geval
