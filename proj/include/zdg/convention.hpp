#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace zdg {

// Self-loop policy for Gamma[Z_n]. A vertex x carries a loop iff n | x^2.
//   NoLoops     - loops dropped entirely (the standard convention; default)
//   LoopCounts2 - loop kept, contributes 2 to the degree, traversable once
//   LoopCounts1 - loop kept, contributes 1 to the degree (audit-only;
//                 Eulerian analysis refuses this policy)
enum class LoopPolicy { NoLoops, LoopCounts2, LoopCounts1 };

// Whether "has an Euler tour" means a closed circuit or an open trail.
enum class Reading { Circuit, Trail };

inline std::string_view to_string(LoopPolicy p) {
    switch (p) {
        case LoopPolicy::NoLoops: return "noloops";
        case LoopPolicy::LoopCounts2: return "loop2";
        case LoopPolicy::LoopCounts1: return "loop1";
    }
    return "noloops";
}

inline std::string_view to_string(Reading r) {
    return r == Reading::Circuit ? "circuit" : "trail";
}

inline std::optional<LoopPolicy> parse_loop_policy(std::string_view s) {
    if (s == "noloops") return LoopPolicy::NoLoops;
    if (s == "loop2") return LoopPolicy::LoopCounts2;
    if (s == "loop1") return LoopPolicy::LoopCounts1;
    return std::nullopt;
}

inline std::optional<Reading> parse_reading(std::string_view s) {
    if (s == "circuit") return Reading::Circuit;
    if (s == "trail") return Reading::Trail;
    return std::nullopt;
}

}  // namespace zdg
