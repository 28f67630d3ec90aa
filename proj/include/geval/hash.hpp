#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace geval {

// FNV-1a, 64 bit. Stable across platforms and runs, which is what the
// fixture keys and the answer cache rely on.
constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

constexpr std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = kFnvOffset) {
    std::uint64_t h = seed;
    for (char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= kFnvPrime;
    }
    return h;
}

// Hashes the parts joined by a 0x1f separator so ("ab","c") != ("a","bc").
std::uint64_t hash_parts(std::initializer_list<std::string_view> parts,
                         std::uint64_t seed = kFnvOffset);

std::string to_hex(std::uint64_t value);

// Key for answers.jsonl fixture entries: stable hash of (image_ref, prompt).
std::string fixture_answer_key(std::string_view image_ref, std::string_view prompt);

// Key for the answer cache: stable hash of (backend_id, image_ref, prompt).
std::string cache_key(std::string_view backend_id, std::string_view image_ref,
                      std::string_view prompt);

}  // namespace geval
