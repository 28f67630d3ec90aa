#include "geval/errors.hpp"

#include <atomic>
#include <cstdio>

namespace geval {

namespace {
std::atomic<bool> g_warnings_enabled{true};
}

void log_warn(const std::string& message) {
    if (g_warnings_enabled.load(std::memory_order_relaxed)) {
        std::fprintf(stderr, "[warn] %s\n", message.c_str());
    }
}

void set_warnings_enabled(bool enabled) {
    g_warnings_enabled.store(enabled, std::memory_order_relaxed);
}

}  // namespace geval
