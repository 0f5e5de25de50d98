#pragma once

#include <stdexcept>
#include <string>

namespace drg {

// malformed input (graph6 / edge list); message carries byte or line position
struct format_error : std::runtime_error {
    explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

// structurally valid input the analysis refuses (disconnected, too large, trivial)
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

// a proven identity failed beyond tolerance; signals a bug or misclustered spectrum
struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace drg
