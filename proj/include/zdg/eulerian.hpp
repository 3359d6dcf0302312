#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdg/convention.hpp"
#include "zdg/errors.hpp"
#include "zdg/explicit_graph.hpp"

namespace zdg {

// Existence report. Under NoLoops/LoopCounts2:
//   circuit_exists iff connected && odd_degree_vertex_count == 0 && !degenerate
//   trail_exists   iff connected && odd count in {0, 2}      && !degenerate
// Degenerate (no traversable edge) graphs are reported as such instead of
// being vacuously Eulerian.
struct EulerVerdict {
    u64 n = 0;
    LoopPolicy convention = LoopPolicy::NoLoops;
    bool connected = false;
    u64 odd_degree_vertex_count = 0;
    bool circuit_exists = false;
    bool trail_exists = false;
    bool degenerate = false;
    bool operator==(const EulerVerdict&) const = default;
};

// A walk using every edge of the graph exactly once; closed when the two
// endpoints coincide. Loops appear as a repeated vertex (v, v).
struct EulerTour {
    std::vector<u64> vertices;
    bool closed = false;
};

struct NoCircuitError : Error {
    EulerVerdict verdict;
    NoCircuitError(std::string msg, EulerVerdict v)
        : Error(std::move(msg)), verdict(v) {}
};

struct NoTrailError : Error {
    EulerVerdict verdict;
    NoTrailError(std::string msg, EulerVerdict v)
        : Error(std::move(msg)), verdict(v) {}
};

// Throws UnsupportedConventionError for LoopCounts1 (the parity criterion
// is invalid under unit-weight loops).
EulerVerdict euler_verdict_explicit(const ExplicitGraph& g);

// Same verdict computed from class degrees and class-graph connectivity;
// never materializes the graph. O(tau(n)^2)-ish, good to n = 2^63 - 1.
EulerVerdict euler_verdict_fast(u64 n, LoopPolicy convention);

// Hierholzer with adjacency cursors; neighbor order is ascending vertex
// value, circuits start at the smallest positive-degree vertex, trails at
// the smaller odd vertex. Deterministic.
EulerTour find_euler_circuit(const ExplicitGraph& g);
EulerTour find_euler_trail(const ExplicitGraph& g);

struct TourValidation {
    bool ok = false;
    std::string diagnostic;
};

// True iff every consecutive pair is an edge, every edge (including kept
// loops) is used exactly once, and the closed flag matches the endpoints.
// The diagnostic names the first violation.
TourValidation validate_tour(const ExplicitGraph& g, const EulerTour& tour);

std::string tour_to_text(const EulerTour& tour);

}  // namespace zdg
