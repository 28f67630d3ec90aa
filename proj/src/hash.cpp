#include "geval/hash.hpp"

#include <cstdio>

namespace geval {

std::uint64_t hash_parts(std::initializer_list<std::string_view> parts, std::uint64_t seed) {
    std::uint64_t h = seed;
    bool first = true;
    for (auto part : parts) {
        if (!first) {
            h ^= 0x1f;
            h *= kFnvPrime;
        }
        h = fnv1a64(part, h);
        first = false;
    }
    return h;
}

std::string to_hex(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

std::string fixture_answer_key(std::string_view image_ref, std::string_view prompt) {
    return to_hex(hash_parts({image_ref, prompt}));
}

std::string cache_key(std::string_view backend_id, std::string_view image_ref,
                      std::string_view prompt) {
    return to_hex(hash_parts({backend_id, image_ref, prompt}));
}

}  // namespace geval
