#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

namespace fracspec {

/// Full-precision decimal formatting (17 significant digits), locale-free.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// FNV-1a 64-bit hash, used to derive stable content digests for cached
/// reference solutions and CSV metadata.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace fracspec
