#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace qcirc {

/// Half-open byte range into the original source, with the 1-based line and
/// column of its first byte.
struct Span {
    uint32_t line = 1;
    uint32_t column = 1;
    size_t begin = 0;
    size_t end = 0;

    bool operator==(const Span &other) const = default;
};

inline std::string_view slice(std::string_view source, const Span &span) {
    return source.substr(span.begin, span.end - span.begin);
}

}  // namespace qcirc
