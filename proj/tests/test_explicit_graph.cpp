#include <doctest.h>

#include <numeric>
#include <set>

#include "zdg/errors.hpp"
#include "zdg/explicit_graph.hpp"

using namespace zdg;

namespace {

// Independent oracle for the vertex set: x is a zero divisor iff some
// nonzero y has x*y = 0 mod n (128-bit product, no gcd shortcut).
std::vector<u64> zero_divisors_brute(u64 n) {
    std::vector<u64> out;
    for (u64 x = 1; x < n; ++x) {
        for (u64 y = 1; y < n; ++y) {
            if ((u128{x} * y) % n == 0) {
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

bool adjacent_brute(u64 n, u64 u, u64 v) { return (u128{u} * v) % n == 0; }

}  // namespace

TEST_CASE("zero divisors by definition") {
    CHECK(zero_divisors(12) == std::vector<u64>{2, 3, 4, 6, 8, 9, 10});
    CHECK(zero_divisors(7).empty());
    CHECK(zero_divisors(4) == std::vector<u64>{2});
    CHECK_THROWS_AS(zero_divisors(1), DomainError);
}

TEST_CASE("zero divisors agree with the product-based oracle up to 200") {
    for (u64 n = 2; n <= 200; ++n) {
        if (zero_divisors(n) != zero_divisors_brute(n)) {
            REQUIRE_MESSAGE(false, "vertex set mismatch at n=", n);
        }
    }
}

TEST_CASE("build_graph on the smallest cases") {
    const ExplicitGraph g9 = build_graph(9);
    CHECK(g9.vertices == std::vector<u64>{3, 6});
    CHECK(edge_count(g9) == 1);
    CHECK(g9.adjacent(3, 6));
    CHECK(g9.loops.empty());

    const ExplicitGraph g25 = build_graph(25);
    CHECK(g25.vertices == std::vector<u64>{5, 10, 15, 20});
    CHECK(edge_count(g25) == 6);  // K_4
    for (std::size_t i = 0; i < 4; ++i) CHECK(g25.degree(i) == 3);

    const ExplicitGraph g9l = build_graph(9, LoopPolicy::LoopCounts2);
    CHECK(edge_count(g9l) == 1);
    REQUIRE(g9l.loops.size() == 2);  // 9 | 3^2 and 9 | 6^2
    CHECK(g9l.degree(0) == 3);
    CHECK(g9l.degree(1) == 3);

    const ExplicitGraph g9l1 = build_graph(9, LoopPolicy::LoopCounts1);
    CHECK(g9l1.degree(0) == 2);
}

TEST_CASE("build_graph errors") {
    CHECK_THROWS_AS(build_graph(7), EmptyGraphError);
    CHECK_THROWS_AS(build_graph(2), EmptyGraphError);
    CHECK_THROWS_AS(build_graph(1), DomainError);
    CHECK_THROWS_AS(build_graph(600'000), TooLargeError);
    CHECK(!materializable(600'000));
    CHECK(!materializable(7));
    CHECK(materializable(2000));
}

TEST_CASE("degree sequences and edge counts") {
    const ExplicitGraph g12 = build_graph(12);
    const std::map<u64, u64> want = {{2, 1}, {3, 2}, {4, 3}, {6, 4},
                                     {8, 3}, {9, 2}, {10, 1}};
    CHECK(degree_sequence(g12) == want);
    CHECK(edge_count(g12) == 8);

    const ExplicitGraph g15 = build_graph(15);
    for (const auto& [v, deg] : degree_sequence(g15)) {
        CHECK(deg == (v % 3 == 0 ? 2 : 4));
    }

    const ExplicitGraph g4 = build_graph(4);
    CHECK(degree_sequence(g4) == std::map<u64, u64>{{2, 0}});
    CHECK(edge_count(g4) == 0);
}

TEST_CASE("adjacency agrees with the product-based oracle up to 200") {
    for (u64 n = 4; n <= 200; ++n) {
        if (is_prime(n)) continue;
        const ExplicitGraph g = build_graph(n);
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            std::set<u64> nbrs;
            for (std::uint32_t j : g.adj[i]) nbrs.insert(g.vertices[j]);
            for (std::size_t j = 0; j < g.vertex_count(); ++j) {
                const u64 u = g.vertices[i], v = g.vertices[j];
                const bool want = i != j && adjacent_brute(n, u, v);
                if (nbrs.count(v) != static_cast<std::size_t>(want)) {
                    REQUIRE_MESSAGE(false, "adjacency mismatch at n=", n,
                                    " u=", u, " v=", v);
                }
            }
        }
    }
}

TEST_CASE("graph invariants on composite n up to 2000") {
    for (u64 n = 4; n <= 2000; ++n) {
        if (is_prime(n)) continue;
        const ExplicitGraph g = build_graph(n);
        REQUIRE(g.vertex_count() == n - 1 - euler_phi(n));
        u64 degree_sum = 0;
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            degree_sum += g.adj[i].size();
        }
        REQUIRE(degree_sum % 2 == 0);  // handshake
        REQUIRE(degree_sum / 2 == edge_count(g));
        if (edge_count(g) >= 1) REQUIRE(is_connected(g));
    }
}

TEST_CASE("adjacency symmetry on composite n up to 512") {
    for (u64 n = 4; n <= 512; ++n) {
        if (is_prime(n)) continue;
        const ExplicitGraph g = build_graph(n);
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            for (std::uint32_t j : g.adj[i]) {
                const auto& back = g.adj[j];
                REQUIRE(std::binary_search(back.begin(), back.end(),
                                           static_cast<std::uint32_t>(i)));
            }
        }
    }
}

TEST_CASE("structure recognizer") {
    CHECK(recognize_structure(build_graph(25)) == Structure::complete(4));
    CHECK(recognize_structure(build_graph(15)) ==
          Structure::complete_bipartite(4, 2));
    // Order-insensitive: (2,4) names the same graph.
    CHECK(recognize_structure(build_graph(15)) ==
          Structure::complete_bipartite(2, 4));
    CHECK(recognize_structure(build_graph(12)) == Structure::other());
    CHECK(recognize_structure(build_graph(4)) == Structure::complete(1));
    CHECK(recognize_structure(build_graph(9)) == Structure::complete(2));
    CHECK(recognize_structure(build_graph(14)) ==
          Structure::complete_bipartite(6, 1));
    CHECK(Structure::complete_bipartite(4, 2).to_string() ==
          "complete_bipartite(4,2)");
    CHECK(Structure::complete(4).to_string() == "complete(4)");

    // Loops never count toward recognition.
    CHECK(recognize_structure(build_graph(9, LoopPolicy::LoopCounts2)) ==
          Structure::complete(2));
}
