#include "zdg/quotient.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "zdg/errors.hpp"

namespace zdg {

namespace {

Factorization checked_composite(u64 n, const char* where) {
    if (n < 2) throw DomainError(std::string(where) + ": n must be >= 2");
    Factorization f = factorize(n);
    if (f.is_prime()) {
        throw EmptyGraphError(std::string(where) + ": Z_" + std::to_string(n) +
                              " has no zero divisors");
    }
    return f;
}

bool is_self_square(u64 n, u64 d) { return d % (n / d) == 0; }

}  // namespace

DivisorClassGraph build_quotient(u64 n) {
    const Factorization f = checked_composite(n, "build_quotient");
    DivisorClassGraph g;
    g.n = n;
    const auto table = divisors_with_phi(f);  // ascending by divisor
    g.classes.reserve(table.size() - 2);
    // phi(n/d) pairs off against d mirrored through the table.
    for (std::size_t i = 1; i + 1 < table.size(); ++i) {
        const u64 d = table[i].first;
        const u64 size = table[table.size() - 1 - i].second;
        g.classes.push_back({d, size, is_self_square(n, d)});
    }
    return g;
}

u64 class_degree(u64 n, u64 d, LoopPolicy convention) {
    if (n < 4 || d <= 1 || d >= n || n % d != 0) {
        throw DomainError("class_degree: d must be a proper divisor of n");
    }
    // Neighbors of any member of class d are the multiples of n/d; the
    // member itself is one of them exactly when (n/d) | d.
    const u64 self = is_self_square(n, d) ? 1 : 0;
    switch (convention) {
        case LoopPolicy::NoLoops: return d - 1 - self;
        case LoopPolicy::LoopCounts2: return d - 1 + self;
        case LoopPolicy::LoopCounts1: return d - 1;
    }
    return d - 1 - self;
}

DegreeProfile degree_profile(u64 n, LoopPolicy convention) {
    const DivisorClassGraph g = build_quotient(n);
    DegreeProfile prof;
    prof.n = n;
    prof.convention = convention;
    prof.entries.reserve(g.classes.size());
    for (const ClassNode& c : g.classes) {
        const u64 deg = class_degree(n, c.d, convention);
        const bool odd = (deg & 1) != 0;
        prof.entries.push_back({c.d, c.size, deg, odd});
        if (odd) {
            prof.all_even = false;
            ++prof.odd_class_count;
        }
    }
    return prof;
}

u64 quotient_edge_count(u64 n) {
    const DivisorClassGraph g = build_quotient(n);
    u128 degree_sum = 0;
    for (const ClassNode& c : g.classes) {
        degree_sum += u128{c.size} * class_degree(n, c.d, LoopPolicy::NoLoops);
    }
    if ((degree_sum & 1) != 0) {
        throw InternalError("quotient_edge_count: odd degree sum (handshake)");
    }
    const u128 edges = degree_sum / 2;
    if (edges > std::numeric_limits<u64>::max()) {
        throw DomainError("quotient_edge_count: count exceeds 64-bit range");
    }
    return static_cast<u64>(edges);
}

namespace {

// Divisors of n indexed two ways: sorted by value, and by mixed-radix
// exponent code. The code lets class-graph BFS enumerate the neighbors of
// class d (the divisor multiples of n/d) in O(tau(d)) with O(1) lookups.
struct DivisorTable {
    std::vector<unsigned> radix;          // alpha_i + 1 per prime
    std::vector<u64> sorted;              // divisor values, ascending
    std::vector<std::uint32_t> code_to_sorted;
    std::vector<std::vector<unsigned>> exps;  // exponents per sorted index

    explicit DivisorTable(const Factorization& f) {
        const std::size_t k = f.factors.size();
        radix.resize(k);
        std::size_t total = 1;
        for (std::size_t i = 0; i < k; ++i) {
            radix[i] = f.factors[i].exponent + 1;
            total *= radix[i];
        }
        std::vector<std::pair<u64, std::uint32_t>> by_value(total);
        std::vector<unsigned> e(k, 0);
        for (std::uint32_t code = 0; code < total; ++code) {
            u64 v = 1;
            for (std::size_t i = 0; i < k; ++i) {
                for (unsigned j = 0; j < e[i]; ++j) v *= f.factors[i].prime;
            }
            by_value[code] = {v, code};
            for (std::size_t i = 0; i < k; ++i) {  // odometer increment
                if (++e[i] < radix[i]) break;
                e[i] = 0;
            }
        }
        std::sort(by_value.begin(), by_value.end());
        sorted.resize(total);
        code_to_sorted.resize(total);
        exps.assign(total, std::vector<unsigned>(k));
        for (std::uint32_t s = 0; s < total; ++s) {
            sorted[s] = by_value[s].first;
            code_to_sorted[by_value[s].second] = s;
            std::uint32_t c = by_value[s].second;
            for (std::size_t i = 0; i < k; ++i) {
                exps[s][i] = c % radix[i];
                c /= radix[i];
            }
        }
    }

    std::uint32_t code_of(const std::vector<unsigned>& e) const {
        std::uint32_t c = 0;
        for (std::size_t i = e.size(); i-- > 0;) c = c * radix[i] + e[i];
        return c;
    }
};

}  // namespace

bool quotient_connected(u64 n) {
    const Factorization f = checked_composite(n, "quotient_connected");
    const DivisorTable table(f);
    const std::size_t total = table.sorted.size();   // tau(n)
    const std::size_t class_count = total - 2;       // minus d=1 and d=n
    if (class_count <= 1) return true;

    const std::size_t k = table.radix.size();
    // Sorted index 0 is d=1 and index total-1 is d=n; classes are between.
    std::vector<bool> seen(total, false);
    std::vector<std::uint32_t> stack{1};
    seen[1] = true;
    std::size_t reached = 1;
    std::vector<unsigned> lo(k), e(k);
    while (!stack.empty()) {
        const std::uint32_t s = stack.back();
        stack.pop_back();
        // Neighbors of class d: divisors that are multiples of n/d, i.e.
        // exponent vectors bounded below by alpha_i - e_i(d).
        for (std::size_t i = 0; i < k; ++i) {
            lo[i] = table.radix[i] - 1 - table.exps[s][i];
            e[i] = lo[i];
        }
        for (;;) {
            const std::uint32_t t = table.code_to_sorted[table.code_of(e)];
            if (t != s && t + 1 != total && !seen[t]) {  // skips d=n; d=1 unreachable
                seen[t] = true;
                ++reached;
                stack.push_back(t);
            }
            std::size_t i = 0;
            while (i < k && ++e[i] == table.radix[i]) e[i] = lo[i], ++i;
            if (i == k) break;
        }
    }
    return reached == class_count;
}

std::vector<u64> expand_class(u64 n, u64 d, std::size_t limit) {
    if (n < 4 || d <= 1 || d >= n || n % d != 0) {
        throw DomainError("expand_class: d must be a proper divisor of n");
    }
    std::vector<u64> members;
    const u64 m = n / d;
    for (u64 k = 1; k < m && members.size() < limit; ++k) {
        if (std::gcd(k, m) == 1) members.push_back(d * k);
    }
    return members;
}

Structure recognize_structure_fast(u64 n) {
    const DivisorClassGraph g = build_quotient(n);
    const std::size_t count = g.class_count();

    // Complete: all cross-class pairs adjacent and every class with two or
    // more members internally adjacent (self-square).
    bool complete = true;
    for (std::size_t i = 0; i < count && complete; ++i) {
        if (g.classes[i].size >= 2 && !g.classes[i].self_square) complete = false;
        for (std::size_t j = i + 1; j < count && complete; ++j) {
            if (!g.adjacent(i, j)) complete = false;
        }
    }
    if (complete) {
        u64 total = 0;
        for (const ClassNode& c : g.classes) total += c.size;
        return Structure::complete(total);
    }

    // Complete bipartite on the class level: no class may be internally
    // adjacent, the inter-class graph must 2-color in one component, and
    // every cross-side class pair must be adjacent.
    for (const ClassNode& c : g.classes) {
        if (c.size >= 2 && c.self_square) return Structure::other();
    }
    std::vector<int> color(count, -1);
    std::vector<std::size_t> stack{0};
    color[0] = 0;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < count; ++w) {
            if (w == v || !g.adjacent(v, w)) continue;
            if (color[w] == -1) {
                color[w] = 1 - color[v];
                ++reached;
                stack.push_back(w);
            } else if (color[w] == color[v]) {
                return Structure::other();
            }
        }
    }
    if (reached != count) return Structure::other();
    u64 side[2] = {0, 0};
    for (std::size_t i = 0; i < count; ++i) {
        side[color[i]] += g.classes[i].size;
        for (std::size_t j = i + 1; j < count; ++j) {
            const bool adj = g.adjacent(i, j);
            if (color[i] == color[j] && adj) return Structure::other();
            if (color[i] != color[j] && !adj) return Structure::other();
        }
    }
    if (side[0] == 0 || side[1] == 0) return Structure::other();
    return Structure::complete_bipartite(side[0], side[1]);
}

}  // namespace zdg
