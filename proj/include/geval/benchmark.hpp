#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace geval {

enum class BenchmarkKind { MME, MMVet, Custom };

std::string to_string(BenchmarkKind kind);
BenchmarkKind benchmark_kind_from_string(const std::string& name);

// One benchmark item. image_ref is an opaque key for the backends; this
// module never opens it.
struct Sample {
    std::string id;
    std::string image_ref;
    std::string task;
    std::string question;
    std::string ground_truth;
    std::vector<std::string> capabilities;  // MM-Vet tags, empty for MME
    std::string image_group;                // MME pairing identity

    bool operator==(const Sample& other) const = default;
};

// Immutable after construction. Samples are sorted lexicographically by id
// so any two loads of the same data produce the same stream.
struct SampleSet {
    std::vector<Sample> samples;
    BenchmarkKind benchmark_kind = BenchmarkKind::Custom;

    bool operator==(const SampleSet& other) const = default;
};

// Loads the canonical line-delimited manifest (one JSON object per line,
// exactly the Sample fields, unknown fields rejected).
SampleSet load_manifest(const std::filesystem::path& path, BenchmarkKind kind);

// Writes the canonical manifest. load_manifest(save_manifest(s)) == s.
void save_manifest(const SampleSet& set, const std::filesystem::path& path);

// MME on-disk layout: <root>/<task>/<image> plus a sidecar <stem>.txt with
// tab-separated "question<TAB>answer" lines, two per image.
SampleSet adapt_mme_layout(const std::filesystem::path& root);

// MM-Vet metadata: one JSON document keyed by sample id, each entry holding
// image name, question, answer and the capability list.
SampleSet adapt_mmvet_metadata(const std::filesystem::path& file);

// Sorts by id and enforces the per-kind invariants (unique non-empty ids,
// non-empty questions, MME yes/no ground truths and 2-per-group pairing).
// Throws MalformedRecordError / PairingViolationError.
SampleSet finalize_sample_set(std::vector<Sample> samples, BenchmarkKind kind);

}  // namespace geval
