#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zdg/convention.hpp"
#include "zdg/numtheory.hpp"

namespace zdg {

// Materialization guards. The explicit graph is the verification oracle,
// not the scale path; anything bigger belongs to the divisor-class model.
inline constexpr u64 kMaxExplicitVertices = 200'000;
inline constexpr u64 kMaxExplicitEdges = 20'000'000;

// Gamma[Z_n] materialized vertex-by-vertex. Vertices are the nonzero zero
// divisors of Z_n, ascending; u != v are adjacent iff n | u*v. Loops
// (n | x^2) are stored only when the policy keeps them.
struct ExplicitGraph {
    u64 n = 0;
    LoopPolicy convention = LoopPolicy::NoLoops;
    std::vector<u64> vertices;                    // ascending
    std::vector<std::vector<std::uint32_t>> adj;  // neighbor indices, ascending, loop-free
    std::vector<std::uint32_t> loops;             // indices with n | v^2, ascending
    u64 proper_edge_count = 0;                    // loops excluded

    std::size_t vertex_count() const { return vertices.size(); }

    // Degree including the loop contribution dictated by the policy.
    u64 degree(std::size_t idx) const;

    bool has_loop(std::size_t idx) const;

    // Adjacency by vertex value; loops are not adjacency here.
    bool adjacent(u64 u, u64 v) const;

    // Index of a vertex value, or npos if absent.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_of(u64 v) const;
};

// The nonzero zero divisors of Z_n, ascending: all x in (0, n) with
// gcd(n, x) > 1. Empty exactly when n is prime. Throws DomainError for n < 2.
std::vector<u64> zero_divisors(u64 n);

// Throws EmptyGraphError when n is prime (no vertices) and TooLargeError
// when the materialization guard trips.
ExplicitGraph build_graph(u64 n, LoopPolicy convention = LoopPolicy::NoLoops);

// True when build_graph would accept n.
bool materializable(u64 n);

std::map<u64, u64> degree_sequence(const ExplicitGraph& g);

// Proper edges only; loops are reported by g.loops.
u64 edge_count(const ExplicitGraph& g);

// Whole-vertex-set connectivity (an isolated vertex beside an edge would
// make this false; a one-vertex graph is connected).
bool is_connected(const ExplicitGraph& g);

// Structural recognizer. Loops never count toward recognition.
struct Structure {
    enum class Kind { Complete, CompleteBipartite, Other };
    Kind kind = Kind::Other;
    u64 a = 0;  // Complete: vertex count. CompleteBipartite: larger side.
    u64 b = 0;  // CompleteBipartite: smaller side.

    static Structure complete(u64 k) { return {Kind::Complete, k, 0}; }
    static Structure complete_bipartite(u64 x, u64 y);  // order-insensitive
    static Structure other() { return {}; }

    bool operator==(const Structure&) const = default;
    std::string to_string() const;
};

// Complete(k) iff every pair of vertices is adjacent (checked first);
// CompleteBipartite(a, b) iff a 2-coloring splits the vertices into two
// independent sets with every cross pair adjacent; Other otherwise.
Structure recognize_structure(const ExplicitGraph& g);

}  // namespace zdg
