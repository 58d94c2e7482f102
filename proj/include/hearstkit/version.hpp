#ifndef HEARSTKIT_VERSION_HPP
#define HEARSTKIT_VERSION_HPP

#include <cstdint>
#include <string>

namespace hearstkit {

inline constexpr const char* kVersion = "0.1.0";

inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(uint64_t v);

// Header comment stamped into every text artifact. config_digest should be
// computed over settings and input basenames so outputs are relocatable.
std::string artifact_header(const std::string& config_digest, uint64_t seed);

}  // namespace hearstkit

#endif
