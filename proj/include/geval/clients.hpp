#pragma once

#include "geval/entities.hpp"
#include "geval/types.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace geval {

// Typed clients for the four inference capabilities. Each has an HTTP-JSON
// implementation and a file-fixture implementation; both are safe for
// concurrent calls.

class DetectorClient {
public:
    virtual ~DetectorClient() = default;
    virtual DetectionSet detect_objects(const std::string& image_ref) const = 0;
};

class SggClient {
public:
    virtual ~SggClient() = default;
    virtual SceneGraph generate_scene_graph(const std::string& image_ref) const = 0;
};

class MllmClient {
public:
    virtual ~MllmClient() = default;
    virtual ModelAnswer query_mllm(const std::string& image_ref,
                                   const std::string& prompt) const = 0;
    virtual std::string backend_id() const = 0;
};

class GraderClient {
public:
    virtual ~GraderClient() = default;
    // Fraction in [0,1].
    virtual double grade_open_ended(const std::string& question,
                                    const std::string& ground_truth,
                                    const std::string& prediction) const = 0;
};

struct HttpOptions {
    std::string base_url;      // e.g. "http://127.0.0.1:8080"
    std::string bearer_token;  // optional Authorization header
    int timeout_ms = 60000;
    int retries = 2;           // extra attempts on connect errors / 5xx
    int backoff_ms = 100;      // doubled per retry
    bool send_image = true;    // forward image_ref to /generate
};

// POSTs {"image": ..., "params": {}} (plus "prompt" for /generate) to the
// per-capability endpoints and parses the mirrored response shapes.
class HttpDetectorClient : public DetectorClient {
public:
    explicit HttpDetectorClient(HttpOptions options) : options_(std::move(options)) {}
    DetectionSet detect_objects(const std::string& image_ref) const override;

private:
    HttpOptions options_;
};

class HttpSggClient : public SggClient {
public:
    explicit HttpSggClient(HttpOptions options) : options_(std::move(options)) {}
    SceneGraph generate_scene_graph(const std::string& image_ref) const override;

private:
    HttpOptions options_;
};

class HttpMllmClient : public MllmClient {
public:
    explicit HttpMllmClient(HttpOptions options) : options_(std::move(options)) {}
    ModelAnswer query_mllm(const std::string& image_ref,
                           const std::string& prompt) const override;
    std::string backend_id() const override { return options_.base_url; }

private:
    HttpOptions options_;
};

class HttpGraderClient : public GraderClient {
public:
    explicit HttpGraderClient(HttpOptions options) : options_(std::move(options)) {}
    double grade_open_ended(const std::string& question, const std::string& ground_truth,
                            const std::string& prediction) const override;

private:
    HttpOptions options_;
};

// HTTP tagger speaking the same wire protocol family:
// POST /tag {"tokens": [...]} -> {"tags": [...]}.
class HttpTagger : public PosTagger {
public:
    explicit HttpTagger(HttpOptions options) : options_(std::move(options)) {}
    std::vector<Pos> tag(const std::vector<Token>& tokens) const override;

private:
    HttpOptions options_;
};

// Fixture clients replay detections.jsonl / scenegraphs.jsonl /
// answers.jsonl from a fixtures directory.
class FixtureDetectorClient : public DetectorClient {
public:
    explicit FixtureDetectorClient(const std::filesystem::path& fixtures_dir);
    DetectionSet detect_objects(const std::string& image_ref) const override;

private:
    std::map<std::string, DetectionSet> by_image_;
};

class FixtureSggClient : public SggClient {
public:
    explicit FixtureSggClient(const std::filesystem::path& fixtures_dir);
    SceneGraph generate_scene_graph(const std::string& image_ref) const override;

private:
    std::map<std::string, SceneGraph> by_image_;
};

class FixtureMllmClient : public MllmClient {
public:
    explicit FixtureMllmClient(const std::filesystem::path& fixtures_dir);
    ModelAnswer query_mllm(const std::string& image_ref,
                           const std::string& prompt) const override;
    std::string backend_id() const override { return "fixture"; }

private:
    std::map<std::string, std::string> by_key_;
};

// Substring fallback: 1.0 when the normalized ground truth occurs in the
// normalized prediction, else 0.0.
class FallbackGrader : public GraderClient {
public:
    double grade_open_ended(const std::string& question, const std::string& ground_truth,
                            const std::string& prediction) const override;
};

// Wire-shape parsing shared by the HTTP and fixture paths. Invariant
// violations surface as BackendError.
DetectionSet parse_detections_payload(const std::string& json_body);
SceneGraph parse_scenegraph_payload(const std::string& json_body);

}  // namespace geval
