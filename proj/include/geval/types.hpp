#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace geval {

// Axis-aligned pixel box: (x, y) is the top-left corner.
struct BBox {
    double x = 0;
    double y = 0;
    double w = 0;
    double h = 0;

    double center_x() const { return x + w / 2.0; }
    double center_y() const { return y + h / 2.0; }
    double area() const { return w * h; }
    double right() const { return x + w; }
    double bottom() const { return y + h; }

    bool valid() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(w) &&
               std::isfinite(h) && x >= 0 && y >= 0 && w > 0 && h > 0;
    }

    bool operator==(const BBox& other) const = default;
};

struct Detection {
    std::string label;
    BBox box;
    double confidence = 1.0;

    bool valid() const {
        return !label.empty() && box.valid() && confidence >= 0.0 && confidence <= 1.0;
    }

    bool operator==(const Detection& other) const = default;
};

// Backend output order is preserved; callers rely on indices for tie-breaks.
struct DetectionSet {
    std::vector<Detection> detections;

    bool operator==(const DetectionSet& other) const = default;
};

struct Triple {
    std::string subject;
    std::string predicate;
    std::string object;
    std::optional<double> confidence;

    bool valid() const {
        return !subject.empty() && !predicate.empty() && !object.empty() &&
               (!confidence || (*confidence >= 0.0 && *confidence <= 1.0));
    }

    bool operator==(const Triple& other) const = default;
};

struct SceneGraph {
    std::vector<Triple> triples;

    bool operator==(const SceneGraph& other) const = default;
};

struct ModelAnswer {
    std::string text;
    std::string backend_id;
    double latency_ms = 0.0;

    bool operator==(const ModelAnswer& other) const = default;
};

}  // namespace geval
