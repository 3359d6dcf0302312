#include "zdg/eulerian.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "zdg/quotient.hpp"

namespace zdg {

namespace {

void reject_loop1(LoopPolicy convention, const char* where) {
    if (convention == LoopPolicy::LoopCounts1) {
        throw UnsupportedConventionError(
            std::string(where) +
            ": loop1 breaks the even-degree criterion; use noloops or loop2");
    }
}

}  // namespace

EulerVerdict euler_verdict_explicit(const ExplicitGraph& g) {
    reject_loop1(g.convention, "euler_verdict_explicit");
    EulerVerdict v;
    v.n = g.n;
    v.convention = g.convention;
    v.connected = is_connected(g);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if ((g.degree(i) & 1) != 0) ++v.odd_degree_vertex_count;
    }
    u64 traversable = g.proper_edge_count;
    if (g.convention == LoopPolicy::LoopCounts2) traversable += g.loops.size();
    v.degenerate = traversable == 0;
    v.circuit_exists =
        v.connected && v.odd_degree_vertex_count == 0 && !v.degenerate;
    v.trail_exists = v.connected && !v.degenerate &&
                     (v.odd_degree_vertex_count == 0 ||
                      v.odd_degree_vertex_count == 2);
    return v;
}

EulerVerdict euler_verdict_fast(u64 n, LoopPolicy convention) {
    reject_loop1(convention, "euler_verdict_fast");
    const DivisorClassGraph g = build_quotient(n);
    EulerVerdict v;
    v.n = n;
    v.convention = convention;
    bool any_proper_edge = false;
    bool any_loop_class = false;
    for (const ClassNode& c : g.classes) {
        if ((class_degree(n, c.d, convention) & 1) != 0) {
            v.odd_degree_vertex_count += c.size;
        }
        if (class_degree(n, c.d, LoopPolicy::NoLoops) > 0) any_proper_edge = true;
        if (c.self_square) any_loop_class = true;
    }
    v.degenerate = !any_proper_edge &&
                   (convention != LoopPolicy::LoopCounts2 || !any_loop_class);
    v.connected = quotient_connected(n);
    v.circuit_exists =
        v.connected && v.odd_degree_vertex_count == 0 && !v.degenerate;
    v.trail_exists = v.connected && !v.degenerate &&
                     (v.odd_degree_vertex_count == 0 ||
                      v.odd_degree_vertex_count == 2);
    return v;
}

namespace {

// Edge-cursor Hierholzer. The adjacency copy carries one id per undirected
// edge (loops included once); the cursor never revisits a used edge, so the
// walk is linear in the edge count.
EulerTour hierholzer(const ExplicitGraph& g, std::size_t start) {
    const std::size_t vcount = g.vertex_count();
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adjc(vcount);
    std::uint32_t eid = 0;
    for (std::size_t i = 0; i < vcount; ++i) {
        for (std::uint32_t j : g.adj[i]) {
            if (j > i) {
                adjc[i].push_back({j, eid});
                adjc[j].push_back({static_cast<std::uint32_t>(i), eid});
                ++eid;
            }
        }
    }
    if (g.convention == LoopPolicy::LoopCounts2) {
        for (std::uint32_t l : g.loops) adjc[l].push_back({l, eid++});
    }
    for (auto& list : adjc) std::sort(list.begin(), list.end());

    std::vector<bool> used(eid, false);
    std::vector<std::size_t> cursor(vcount, 0);
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(start)};
    std::vector<u64> walk;
    walk.reserve(eid + 1);
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        auto& list = adjc[v];
        std::size_t& cur = cursor[v];
        while (cur < list.size() && used[list[cur].second]) ++cur;
        if (cur == list.size()) {
            walk.push_back(g.vertices[v]);
            stack.pop_back();
        } else {
            used[list[cur].second] = true;
            stack.push_back(list[cur].first);
        }
    }
    std::reverse(walk.begin(), walk.end());

    if (walk.size() != static_cast<std::size_t>(eid) + 1) {
        throw InternalError("hierholzer: walk missed edges despite verdict");
    }
    EulerTour tour;
    tour.vertices = std::move(walk);
    tour.closed = tour.vertices.front() == tour.vertices.back();
    return tour;
}

std::size_t smallest_positive_degree_vertex(const ExplicitGraph& g) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (g.degree(i) > 0) return i;
    }
    return 0;
}

}  // namespace

EulerTour find_euler_circuit(const ExplicitGraph& g) {
    const EulerVerdict v = euler_verdict_explicit(g);
    if (!v.circuit_exists) {
        throw NoCircuitError("find_euler_circuit: no Euler circuit in Gamma[Z_" +
                                 std::to_string(g.n) + "]",
                             v);
    }
    EulerTour tour = hierholzer(g, smallest_positive_degree_vertex(g));
    if (!tour.closed) throw InternalError("find_euler_circuit: open walk");
    return tour;
}

EulerTour find_euler_trail(const ExplicitGraph& g) {
    const EulerVerdict v = euler_verdict_explicit(g);
    if (!v.trail_exists) {
        throw NoTrailError("find_euler_trail: no Euler trail in Gamma[Z_" +
                               std::to_string(g.n) + "]",
                           v);
    }
    if (v.odd_degree_vertex_count == 0) return find_euler_circuit(g);
    std::size_t start = ExplicitGraph::npos;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if ((g.degree(i) & 1) != 0) {
            start = i;
            break;
        }
    }
    EulerTour tour = hierholzer(g, start);
    if (tour.closed) throw InternalError("find_euler_trail: closed walk");
    return tour;
}

TourValidation validate_tour(const ExplicitGraph& g, const EulerTour& tour) {
    const auto& seq = tour.vertices;
    if (seq.empty()) return {false, "empty tour"};
    for (u64 v : seq) {
        if (g.index_of(v) == ExplicitGraph::npos) {
            return {false, "vertex " + std::to_string(v) + " not in graph"};
        }
    }
    u64 total_edges = g.proper_edge_count;
    if (g.convention == LoopPolicy::LoopCounts2) total_edges += g.loops.size();

    std::map<std::pair<u64, u64>, int> uses;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const u64 u = seq[i], w = seq[i + 1];
        if (u == w) {
            if (g.convention != LoopPolicy::LoopCounts2 ||
                !g.has_loop(g.index_of(u))) {
                return {false, "no loop at " + std::to_string(u)};
            }
        } else if (!g.adjacent(u, w)) {
            return {false, "not an edge: " + std::to_string(u) + "-" +
                               std::to_string(w)};
        }
        if (++uses[{std::min(u, w), std::max(u, w)}] > 1) {
            return {false, "edge used twice: " + std::to_string(u) + "-" +
                               std::to_string(w)};
        }
    }
    if (uses.size() != total_edges) {
        return {false, "covers " + std::to_string(uses.size()) + " of " +
                           std::to_string(total_edges) + " edges"};
    }
    if (tour.closed != (seq.front() == seq.back())) {
        return {false, "closure flag mismatch"};
    }
    return {true, "ok"};
}

std::string tour_to_text(const EulerTour& tour) {
    std::string out;
    for (std::size_t i = 0; i < tour.vertices.size(); ++i) {
        if (i > 0) out += " - ";
        out += std::to_string(tour.vertices[i]);
    }
    return out;
}

}  // namespace zdg
