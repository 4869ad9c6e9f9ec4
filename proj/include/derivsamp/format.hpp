#pragma once

#include <charconv>
#include <string>

namespace derivsamp {

/// Shortest round-trip decimal form; stable across runs.
inline std::string fmt_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace derivsamp
