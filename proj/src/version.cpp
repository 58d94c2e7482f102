#include "hearstkit/version.hpp"

#include <sstream>

namespace hearstkit {

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::string artifact_header(const std::string& config_digest, uint64_t seed) {
    std::ostringstream out;
    out << "# hearstkit " << kVersion << '\n'
        << "# config " << config_digest << '\n'
        << "# seed " << seed;
    return out.str();
}

}  // namespace hearstkit
