#pragma once

#include "geval/types.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace geval {

// Append-only model-answer cache: one JSON object per line, keyed by the
// stable hash of (backend_id, image_ref, prompt). Replays byte-identical
// answer text. First write wins; later writes for the same key are logged
// and dropped.
class AnswerCache {
public:
    // Loads <dir>/answers_cache.jsonl if present and opens it for append.
    explicit AnswerCache(const std::filesystem::path& dir);

    std::optional<ModelAnswer> get(const std::string& key) const;
    void put(const std::string& key, const ModelAnswer& answer);

    std::size_t size() const;

    static std::filesystem::path file_path(const std::filesystem::path& dir);

private:
    mutable std::mutex mutex_;
    std::map<std::string, ModelAnswer> entries_;
    std::ofstream appender_;
};

}  // namespace geval
