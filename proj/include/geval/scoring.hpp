#pragma once

#include "geval/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geval {

enum class Verdict { Yes, No, Other };

std::string to_string(Verdict verdict);
std::optional<Verdict> verdict_from_string(const std::string& name);

struct ParsedAnswer {
    Verdict verdict = Verdict::Other;
    std::string raw;

    bool operator==(const ParsedAnswer& other) const = default;
};

// Case-insensitive word-boundary scan: "yes" without "no" -> Yes, "no"
// without "yes" -> No, both or neither -> Other.
ParsedAnswer parse_yes_no(const ModelAnswer& answer);
ParsedAnswer parse_yes_no(const std::string& raw);

struct EvalRecord {
    std::string sample_id;
    std::string image_group;
    std::string task;
    std::string variant;
    std::vector<std::string> capabilities;
    std::optional<ParsedAnswer> parsed;      // MME path
    std::optional<double> graded_score;      // MM-Vet path, in [0,1]
    bool correct = false;                    // MME only

    bool operator==(const EvalRecord& other) const = default;
};

struct TaskScore {
    double accuracy = 0.0;       // percent of correct questions
    double accuracy_plus = 0.0;  // percent of images with both QA correct
    double combined = 0.0;       // accuracy + accuracy_plus, 0..200
    std::size_t n_questions = 0;
    std::size_t n_images = 0;

    bool operator==(const TaskScore& other) const = default;
};

// Records must pair exactly 2 per image_group (PairingViolationError).
TaskScore score_mme_task(const std::vector<EvalRecord>& records);

// 100 * mean graded_score over records tagged with the capability, rounded
// half-up to one decimal. Throws EmptyCapabilityError.
double score_mmvet(const std::vector<EvalRecord>& records, const std::string& capability);

// 100 * (new / base - 1). Throws ZeroBaseError when base <= 0.
double pct_improvement(double new_score, double base_score);

// Half-up decimal rounding (half away from zero for negatives).
double round_half_up(double value, int decimals);

// "+19.4%" / "-3.0%" style annotation, one decimal.
std::string format_pct_delta(double delta);

// Fixed-decimal rendering after half-up rounding.
std::string format_fixed(double value, int decimals);

}  // namespace geval
