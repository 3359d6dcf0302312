#include "zdg/explicit_graph.hpp"

#include <algorithm>
#include <numeric>

#include "zdg/errors.hpp"
#include "zdg/quotient.hpp"

namespace zdg {

u64 ExplicitGraph::degree(std::size_t idx) const {
    u64 deg = adj[idx].size();
    if (convention != LoopPolicy::NoLoops && has_loop(idx)) {
        deg += convention == LoopPolicy::LoopCounts2 ? 2 : 1;
    }
    return deg;
}

bool ExplicitGraph::has_loop(std::size_t idx) const {
    return std::binary_search(loops.begin(), loops.end(),
                              static_cast<std::uint32_t>(idx));
}

bool ExplicitGraph::adjacent(u64 u, u64 v) const {
    if (u == v) return false;
    if (index_of(u) == npos || index_of(v) == npos) return false;
    return v % (n / std::gcd(n, u)) == 0;
}

std::size_t ExplicitGraph::index_of(u64 v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return npos;
    return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<u64> zero_divisors(u64 n) {
    if (n < 2) throw DomainError("zero_divisors: n must be >= 2");
    // Class-wise enumeration: the class of a proper divisor d holds d*k for
    // k in (0, n/d) coprime to n/d. Candidate waste is bounded by the
    // (n/d)/phi(n/d) ratio, so the total cost stays near the output size.
    std::vector<u64> out;
    for (u64 d : proper_divisor_classes_domain(n)) {
        const u64 m = n / d;
        for (u64 k = 1; k < m; ++k) {
            if (std::gcd(k, m) == 1) out.push_back(d * k);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool materializable(u64 n) {
    if (n < 4) return false;
    const Factorization f = factorize(n);
    if (f.is_prime()) return false;
    const u64 vertex_count = n - 1 - euler_phi(f);
    if (vertex_count > kMaxExplicitVertices) return false;
    u128 degree_sum = 0;
    for (u64 d : divisors(f)) {
        if (d == 1 || d == n) continue;
        degree_sum += u128{euler_phi(n / d)} * (d - 1);
    }
    return degree_sum / 2 <= kMaxExplicitEdges;
}

ExplicitGraph build_graph(u64 n, LoopPolicy convention) {
    if (n < 2) throw DomainError("build_graph: n must be >= 2");
    const Factorization f = factorize(n);
    if (f.is_prime()) {
        throw EmptyGraphError("build_graph: Z_" + std::to_string(n) +
                              " has no zero divisors");
    }
    const u64 vertex_count = n - 1 - euler_phi(f);
    if (vertex_count > kMaxExplicitVertices || !materializable(n)) {
        throw TooLargeError("build_graph: Gamma[Z_" + std::to_string(n) +
                            "] exceeds the materialization guard; use the "
                            "divisor-class path");
    }

    ExplicitGraph g;
    g.n = n;
    g.convention = convention;
    g.vertices = zero_divisors(n);

    const std::size_t vcount = g.vertices.size();
    g.adj.resize(vcount);
    u64 degree_sum = 0;
    for (std::size_t i = 0; i < vcount; ++i) {
        const u64 u = g.vertices[i];
        const u64 m = n / std::gcd(n, u);  // u*v = 0 mod n  iff  m | v
        for (u64 v = m; v < n; v += m) {
            if (v == u) continue;
            const std::size_t j = g.index_of(v);
            g.adj[i].push_back(static_cast<std::uint32_t>(j));
        }
        degree_sum += g.adj[i].size();
        if (convention != LoopPolicy::NoLoops && u % m == 0) {
            g.loops.push_back(static_cast<std::uint32_t>(i));
        }
    }
    if (degree_sum % 2 != 0) {
        throw InternalError("build_graph: asymmetric adjacency (handshake)");
    }
    g.proper_edge_count = degree_sum / 2;
    return g;
}

std::map<u64, u64> degree_sequence(const ExplicitGraph& g) {
    std::map<u64, u64> seq;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        seq[g.vertices[i]] = g.degree(i);
    }
    return seq;
}

u64 edge_count(const ExplicitGraph& g) { return g.proper_edge_count; }

bool is_connected(const ExplicitGraph& g) {
    const std::size_t vcount = g.vertex_count();
    if (vcount == 0) return false;
    std::vector<bool> seen(vcount, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t w : g.adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vcount;
}

Structure Structure::complete_bipartite(u64 x, u64 y) {
    return {Kind::CompleteBipartite, std::max(x, y), std::min(x, y)};
}

std::string Structure::to_string() const {
    switch (kind) {
        case Kind::Complete:
            return "complete(" + std::to_string(a) + ")";
        case Kind::CompleteBipartite:
            return "complete_bipartite(" + std::to_string(a) + "," +
                   std::to_string(b) + ")";
        case Kind::Other:
            return "other";
    }
    return "other";
}

Structure recognize_structure(const ExplicitGraph& g) {
    const std::size_t vcount = g.vertex_count();
    if (vcount == 0) return Structure::other();

    // Complete first: in a simple graph, degree V-1 everywhere is enough.
    bool complete = true;
    for (std::size_t i = 0; i < vcount && complete; ++i) {
        complete = g.adj[i].size() == vcount - 1;
    }
    if (complete) return Structure::complete(vcount);

    // 2-color; any odd cycle or a second component disqualifies.
    std::vector<int> color(vcount, -1);
    std::vector<std::uint32_t> stack{0};
    color[0] = 0;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t w : g.adj[v]) {
            if (color[w] == -1) {
                color[w] = 1 - color[v];
                ++reached;
                stack.push_back(w);
            } else if (color[w] == color[v]) {
                return Structure::other();
            }
        }
    }
    if (reached != vcount) return Structure::other();

    const u64 side1 = static_cast<u64>(std::count(color.begin(), color.end(), 1));
    const u64 side0 = vcount - side1;
    if (side0 == 0 || side1 == 0) return Structure::other();
    for (std::size_t i = 0; i < vcount; ++i) {
        const u64 other_side = color[i] == 0 ? side1 : side0;
        if (g.adj[i].size() != other_side) return Structure::other();
    }
    return Structure::complete_bipartite(side0, side1);
}

}  // namespace zdg
