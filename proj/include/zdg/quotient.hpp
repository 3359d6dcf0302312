#pragma once

#include <cstdint>
#include <vector>

#include "zdg/convention.hpp"
#include "zdg/explicit_graph.hpp"
#include "zdg/numtheory.hpp"

namespace zdg {

// One divisor class of Gamma[Z_n]: the vertices x with gcd(n, x) = d.
// The class has exactly phi(n/d) members, and every member has the same
// degree (class-uniformity), which is what makes the compressed model exact.
struct ClassNode {
    u64 d = 0;                // class representative gcd, a proper divisor
    u64 size = 0;             // phi(n/d) >= 1
    bool self_square = false; // (n/d) | d, i.e. members square to zero
    bool operator==(const ClassNode&) const = default;
};

// Compressed model of Gamma[Z_n]: one node per proper divisor d (1 < d < n),
// ascending. Classes d1, d2 (possibly equal) are adjacent iff n | d1*d2,
// equivalently (n/d1) | d2.
struct DivisorClassGraph {
    u64 n = 0;
    std::vector<ClassNode> classes;

    bool adjacent(std::size_t i, std::size_t j) const {
        return classes[j].d % (n / classes[i].d) == 0;
    }
    std::size_t class_count() const { return classes.size(); }
};

// Throws EmptyGraphError when n is prime, DomainError when n < 2.
DivisorClassGraph build_quotient(u64 n);

// Exact degree of every member of class d under the loop policy:
//   NoLoops      d - 1 - [(n/d) | d]
//   LoopCounts2  d - 1 + [(n/d) | d]
//   LoopCounts1  d - 1
// Throws DomainError unless d is a proper divisor of n.
u64 class_degree(u64 n, u64 d, LoopPolicy convention);

struct DegreeEntry {
    u64 d = 0;
    u64 size = 0;
    u64 degree = 0;
    bool odd = false;
    bool operator==(const DegreeEntry&) const = default;
};

struct DegreeProfile {
    u64 n = 0;
    LoopPolicy convention = LoopPolicy::NoLoops;
    std::vector<DegreeEntry> entries;  // ascending by d
    bool all_even = true;
    u64 odd_class_count = 0;
};

DegreeProfile degree_profile(u64 n, LoopPolicy convention);

// Half the size-weighted NoLoops degree sum. Throws InternalError if the
// sum comes out odd (handshake violation = bug) and DomainError if the
// count does not fit in 64 bits.
u64 quotient_edge_count(u64 n);

// Connectivity of the class graph restricted to inter-class edges (one
// lone class counts as connected). Agrees with explicit connectivity
// because any two members of adjacent classes are adjacent.
bool quotient_connected(u64 n);

// First `limit` members of class d: x = d*k with gcd(k, n/d) = 1, ascending.
std::vector<u64> expand_class(u64 n, u64 d, std::size_t limit);

// Structure recognizer on the class model; agrees with
// recognize_structure(build_graph(n)) wherever the latter is defined.
Structure recognize_structure_fast(u64 n);

}  // namespace zdg
