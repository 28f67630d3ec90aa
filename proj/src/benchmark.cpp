#include "geval/benchmark.hpp"

#include "geval/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace geval {

namespace fs = std::filesystem;
using nlohmann::json;

std::string to_string(BenchmarkKind kind) {
    switch (kind) {
        case BenchmarkKind::MME: return "mme";
        case BenchmarkKind::MMVet: return "mmvet";
        case BenchmarkKind::Custom: return "custom";
    }
    return "custom";
}

BenchmarkKind benchmark_kind_from_string(const std::string& name) {
    std::string lower;
    for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "mme") return BenchmarkKind::MME;
    if (lower == "mmvet" || lower == "mm-vet") return BenchmarkKind::MMVet;
    if (lower == "custom") return BenchmarkKind::Custom;
    throw ConfigError("unknown benchmark kind: " + name);
}

namespace {

std::string to_lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

const std::set<std::string>& known_mme_tasks() {
    static const std::set<std::string> tasks = {
        "existence", "count", "position", "color", "poster",
        "celebrity", "scene", "landmark", "artwork", "ocr",
    };
    return tasks;
}

const std::array<const char*, 7> kManifestFields = {
    "id", "image_ref", "task", "question", "ground_truth", "capabilities", "image_group",
};

json sample_to_json(const Sample& s) {
    return json{{"id", s.id},
                {"image_ref", s.image_ref},
                {"task", s.task},
                {"question", s.question},
                {"ground_truth", s.ground_truth},
                {"capabilities", s.capabilities},
                {"image_group", s.image_group}};
}

Sample sample_from_json(const json& j, std::size_t line_no) {
    if (!j.is_object()) throw MalformedRecordError(line_no, "record is not an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find(kManifestFields.begin(), kManifestFields.end(), key) ==
            kManifestFields.end()) {
            throw MalformedRecordError(line_no, "unknown field '" + key + "'");
        }
    }
    Sample s;
    try {
        s.id = j.at("id").get<std::string>();
        s.image_ref = j.at("image_ref").get<std::string>();
        s.task = j.at("task").get<std::string>();
        s.question = j.at("question").get<std::string>();
        s.ground_truth = j.at("ground_truth").get<std::string>();
        s.capabilities = j.at("capabilities").get<std::vector<std::string>>();
        s.image_group = j.at("image_group").get<std::string>();
    } catch (const json::exception& e) {
        throw MalformedRecordError(line_no, e.what());
    }
    return s;
}

bool is_image_file(const fs::path& p) {
    static const std::set<std::string> exts = {".jpg", ".jpeg", ".png", ".bmp",
                                               ".gif", ".webp"};
    return exts.count(to_lower(p.extension().string())) > 0;
}

}  // namespace

SampleSet finalize_sample_set(std::vector<Sample> samples, BenchmarkKind kind) {
    std::sort(samples.begin(), samples.end(),
              [](const Sample& a, const Sample& b) { return a.id < b.id; });

    std::set<std::string> ids;
    std::map<std::string, std::size_t> group_counts;
    std::size_t line_no = 0;
    for (Sample& s : samples) {
        ++line_no;
        if (s.id.empty()) throw MalformedRecordError(line_no, "empty sample id");
        if (!ids.insert(s.id).second) throw DuplicateIdError(s.id);
        if (s.question.empty())
            throw MalformedRecordError(line_no, "empty question for sample " + s.id);
        if (kind == BenchmarkKind::MME) {
            std::string gt = to_lower(s.ground_truth);
            if (gt != "yes" && gt != "no") {
                throw MalformedRecordError(
                    line_no, "MME ground truth must be yes/no, got '" + s.ground_truth +
                                 "' for sample " + s.id);
            }
            s.ground_truth = gt;
            ++group_counts[s.image_group];
        }
    }
    if (kind == BenchmarkKind::MME) {
        for (const auto& [group, count] : group_counts) {
            if (count != 2) throw PairingViolationError(group, count);
        }
    }
    return SampleSet{std::move(samples), kind};
}

SampleSet load_manifest(const fs::path& path, BenchmarkKind kind) {
    std::ifstream in(path);
    if (!in) throw MissingFileError(path.string());

    std::vector<Sample> samples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw MalformedRecordError(line_no, e.what());
        }
        samples.push_back(sample_from_json(j, line_no));
    }
    return finalize_sample_set(std::move(samples), kind);
}

void save_manifest(const SampleSet& set, const fs::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write manifest: " + path.string());
    for (const Sample& s : set.samples) {
        out << sample_to_json(s).dump() << "\n";
    }
}

SampleSet adapt_mme_layout(const fs::path& root) {
    if (!fs::is_directory(root)) throw MissingFileError(root.string());

    std::vector<Sample> samples;
    std::vector<fs::path> task_dirs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory()) task_dirs.push_back(entry.path());
    }
    std::sort(task_dirs.begin(), task_dirs.end());

    for (const fs::path& task_dir : task_dirs) {
        const std::string task = task_dir.filename().string();
        if (!known_mme_tasks().count(to_lower(task))) {
            log_warn("unknown MME task directory '" + task + "', keeping as-is");
        }

        std::vector<fs::path> images;
        for (const auto& entry : fs::directory_iterator(task_dir)) {
            if (entry.is_regular_file() && is_image_file(entry.path())) {
                images.push_back(entry.path());
            }
        }
        std::sort(images.begin(), images.end());

        for (const fs::path& image : images) {
            fs::path sidecar = image;
            sidecar.replace_extension(".txt");
            std::ifstream in(sidecar);
            if (!in) {
                throw MalformedRecordError(
                    0, "missing or unreadable sidecar for image " + image.string());
            }
            // image_group is task-qualified so identical filenames in two
            // task directories cannot collapse into one group.
            const std::string rel = task + "/" + image.filename().string();
            std::string line;
            std::size_t qa_index = 0;
            std::size_t line_no = 0;
            while (std::getline(in, line)) {
                ++line_no;
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (line.empty()) continue;
                auto tab = line.find('\t');
                if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
                    throw MalformedRecordError(
                        line_no, "expected question<TAB>answer in " + sidecar.string());
                }
                ++qa_index;
                Sample s;
                s.id = task + "/" + image.stem().string() + "#" + std::to_string(qa_index);
                s.image_ref = rel;
                s.task = task;
                s.question = line.substr(0, tab);
                s.ground_truth = line.substr(tab + 1);
                s.image_group = rel;
                samples.push_back(std::move(s));
            }
        }
    }
    return finalize_sample_set(std::move(samples), BenchmarkKind::MME);
}

SampleSet adapt_mmvet_metadata(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw MissingFileError(file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    // nlohmann silently keeps the last duplicate key, so spot duplicates
    // through the parser callback before accepting the document.
    std::set<std::string> seen;
    std::string duplicate;
    json::parser_callback_t cb = [&](int depth, json::parse_event_t event, json& parsed) {
        if (depth == 1 && event == json::parse_event_t::key) {
            const std::string key = parsed.get<std::string>();
            if (!seen.insert(key).second && duplicate.empty()) duplicate = key;
        }
        return true;
    };

    json doc;
    try {
        doc = json::parse(text, cb);
    } catch (const json::exception& e) {
        throw MalformedRecordError(0, e.what());
    }
    if (!duplicate.empty()) throw DuplicateIdError(duplicate);
    if (!doc.is_object()) throw MalformedRecordError(0, "metadata root is not an object");

    std::vector<Sample> samples;
    std::size_t entry_no = 0;
    for (const auto& [id, entry] : doc.items()) {
        ++entry_no;
        if (!entry.is_object())
            throw MalformedRecordError(entry_no, "entry '" + id + "' is not an object");
        Sample s;
        s.id = id;
        try {
            if (entry.contains("imagename")) {
                s.image_ref = entry.at("imagename").get<std::string>();
            } else if (entry.contains("image")) {
                s.image_ref = entry.at("image").get<std::string>();
            }
            s.question = entry.at("question").get<std::string>();
            s.ground_truth = entry.at("answer").get<std::string>();
            if (entry.contains("capability")) {
                s.capabilities = entry.at("capability").get<std::vector<std::string>>();
            } else if (entry.contains("capabilities")) {
                s.capabilities = entry.at("capabilities").get<std::vector<std::string>>();
            }
        } catch (const json::exception& e) {
            throw MalformedRecordError(entry_no, "entry '" + id + "': " + e.what());
        }
        s.image_group = s.image_ref;
        samples.push_back(std::move(s));
    }
    return finalize_sample_set(std::move(samples), BenchmarkKind::MMVet);
}

}  // namespace geval
