#pragma once

#include "geval/benchmark.hpp"
#include "geval/cache.hpp"
#include "geval/clients.hpp"
#include "geval/matching.hpp"
#include "geval/prompt.hpp"
#include "geval/scoring.hpp"
#include "geval/spatial.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace geval {

enum class BackendMode { Http, Fixture, Oracle, Flip, Fallback, Builtin };

struct BackendConfig {
    BackendMode mode = BackendMode::Fixture;
    std::string url;           // Http
    std::string bearer_token;  // Http
};

struct RunConfig {
    BenchmarkKind benchmark = BenchmarkKind::Custom;
    std::filesystem::path manifest;     // canonical manifest, or:
    std::filesystem::path mme_root;     // MME layout root, or:
    std::filesystem::path mmvet_file;   // MM-Vet metadata document

    std::vector<PromptVariant> variants;
    std::optional<PromptVariant> base_variant;  // improvement columns vs this
    std::string model_label = "model";

    BackendConfig detector{BackendMode::Fixture};
    BackendConfig sgg{BackendMode::Fixture};
    BackendConfig mllm{BackendMode::Fixture};
    BackendConfig grader{BackendMode::Fallback};
    BackendConfig tagger{BackendMode::Builtin};

    std::filesystem::path fixtures_dir;
    std::filesystem::path cache_dir;
    std::filesystem::path report_dir = "report";
    std::set<std::string> report_formats = {"structured", "delimited", "table"};

    std::filesystem::path tag_lexicon;        // empty -> builtin
    std::filesystem::path synonym_lexicon;    // empty -> empty lexicon
    std::filesystem::path relation_keywords;  // empty -> builtin
    std::filesystem::path templates_dir;      // empty -> builtin
    std::vector<std::string> entity_blocklist = default_entity_blocklist();

    double min_detection_confidence = 0.0;
    int timeout_ms = 60000;
    int retries = 2;
    bool send_image = true;
    int parallelism = 1;
    std::uint64_t seed = 0;

    // Parsed from a versioned JSON file; CLI flags override fields.
    static RunConfig from_file(const std::filesystem::path& path);
    static RunConfig from_json_text(const std::string& text,
                                    const std::filesystem::path& base_dir);

    void validate() const;  // throws ConfigError

    // Hash over the score-relevant fields only; execution knobs
    // (parallelism, cache/report paths, formats) are excluded so reruns and
    // parallel runs reproduce byte-identical reports.
    std::uint64_t semantic_hash() const;
};

struct VariantScores {
    PromptVariant variant = PromptVariant::Baseline;
    std::string row_label;
    std::map<std::string, TaskScore> task_scores;        // MME, per task (rounded)
    std::map<std::string, double> capability_scores;     // MM-Vet / custom (rounded)
    std::map<std::string, double> improvement_pct;       // per column, vs base

    bool operator==(const VariantScores& other) const = default;
};

struct RunMeta {
    std::string started_at;
    std::string finished_at;
    std::uint64_t mllm_queries = 0;
    std::uint64_t cache_hits = 0;
    int parallelism = 1;
};

struct EvalReport {
    std::string benchmark;
    std::string base_variant;  // empty when no improvement column
    std::string config_hash;   // hex of RunConfig::semantic_hash
    std::vector<VariantScores> rows;
    RunMeta meta;  // volatile; excluded from report files and equality

    bool operator==(const EvalReport& other) const {
        return benchmark == other.benchmark && base_variant == other.base_variant &&
               config_hash == other.config_hash && rows == other.rows;
    }

    std::string to_json_text() const;
    static EvalReport from_json_text(const std::string& text);
};

// Injectable backends; fields left null are built from the config.
struct ClientBundle {
    std::shared_ptr<const DetectorClient> detector;
    std::shared_ptr<const SggClient> sgg;
    std::shared_ptr<const MllmClient> mllm;  // null for oracle/flip modes
    std::shared_ptr<const GraderClient> grader;
    std::shared_ptr<const PosTagger> tagger;
};

ClientBundle build_clients(const RunConfig& config);

class PipelineRunner {
public:
    explicit PipelineRunner(RunConfig config);
    PipelineRunner(RunConfig config, ClientBundle clients);

    // Runs every sample under every configured variant, scores the records
    // and returns the report. Per-sample failures are recorded and skipped,
    // never fatal.
    EvalReport run();

    const std::vector<EvalRecord>& records() const { return records_; }

private:
    RunConfig config_;
    ClientBundle clients_;
};

// Aggregates already-produced records into a report (the rescoring path).
EvalReport score_records(const std::vector<EvalRecord>& records, const RunConfig& config);

// Convenience: build clients from config and run.
EvalReport run_pipeline(const RunConfig& config);

// Emits report.json / report.csv / report.txt per config.report_formats,
// records.jsonl, and the volatile run_meta.json sidecar.
void emit_report(const EvalReport& report, const std::vector<EvalRecord>& records,
                 const RunConfig& config);

// records.jsonl round-trip used by the rescoring path.
void save_records(const std::vector<EvalRecord>& records, const std::filesystem::path& path);
std::vector<EvalRecord> load_records(const std::filesystem::path& path);

std::string render_table(const EvalReport& report);
std::string render_csv(const EvalReport& report);

}  // namespace geval
