// Acceptance suite: runs every gate criterion and prints one PASS/FAIL line
// per criterion. argv[1] must point at the zdg CLI binary (used by the
// determinism criterion). Exits nonzero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "zdg/audit.hpp"
#include "zdg/eulerian.hpp"
#include "zdg/explicit_graph.hpp"
#include "zdg/numtheory.hpp"
#include "zdg/quotient.hpp"

using namespace zdg;

namespace {

struct Criterion {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;  // keep the first failure
        pass = false;
    }
};

bool is_composite(u64 n) { return n >= 4 && !is_prime(n); }

// 1. Closed-form class degree equals the oracle degree for every vertex of
//    every composite n in [4, 512].
Criterion degree_decompression() {
    Criterion c;
    for (u64 n = 4; n <= 512; ++n) {
        if (!is_composite(n)) continue;
        const ExplicitGraph g = build_graph(n);
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            const u64 d = std::gcd(n, g.vertices[i]);
            if (g.degree(i) != class_degree(n, d, LoopPolicy::NoLoops)) {
                c.fail("mismatch at n=" + std::to_string(n) +
                       ", x=" + std::to_string(g.vertices[i]));
            }
        }
    }
    return c;
}

// 2. Sum of phi(n/d) over proper divisors equals n - 1 - phi(n) for all
//    composite n <= 2000; prime-power class sizes are p^(m-i) - p^(m-i-1).
Criterion class_size_identities() {
    Criterion c;
    for (u64 n = 4; n <= 2000; ++n) {
        if (!is_composite(n)) continue;
        u64 sum = 0;
        for (const ClassNode& node : build_quotient(n).classes) sum += node.size;
        if (sum != n - 1 - euler_phi(n)) {
            c.fail("class sizes do not sum at n=" + std::to_string(n));
        }
    }
    for (u64 p : {2, 3, 5}) {
        u64 n = p;
        for (unsigned m = 2; m <= 6; ++m) {
            n *= p;
            const DivisorClassGraph g = build_quotient(n);
            if (g.classes.size() != m - 1) {
                c.fail("wrong class count for p^" + std::to_string(m));
                continue;
            }
            for (unsigned i = 1; i < m; ++i) {
                u64 upper = 1, lower = 1;
                for (unsigned j = 0; j < m - i; ++j) upper *= p;
                for (unsigned j = 0; j + 1 < m - i; ++j) lower *= p;
                if (g.classes[i - 1].size != upper - lower) {
                    c.fail("class size off at p=" + std::to_string(p) +
                           " m=" + std::to_string(m) + " i=" + std::to_string(i));
                }
            }
        }
    }
    return c;
}

// 3. Recognizer: Gamma[Z_{p^2}] = K_{p-1}; Gamma[Z_{pq}] = K_{p-1,q-1}.
Criterion structure_theorems() {
    Criterion c;
    for (u64 p : {2, 3, 5, 7, 11, 13}) {
        if (recognize_structure(build_graph(p * p)) != Structure::complete(p - 1)) {
            c.fail("p^2 not recognized as complete at p=" + std::to_string(p));
        }
    }
    const std::vector<u64> odd_primes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (std::size_t i = 0; i < odd_primes.size(); ++i) {
        for (std::size_t j = i + 1; j < odd_primes.size(); ++j) {
            const u64 p = odd_primes[i], q = odd_primes[j];
            if (recognize_structure(build_graph(p * q)) !=
                Structure::complete_bipartite(p - 1, q - 1)) {
                c.fail("pq not recognized at p=" + std::to_string(p) +
                       " q=" + std::to_string(q));
            }
        }
    }
    return c;
}

// 4. Gamma[Z_{pq}] (odd p < q <= 31) has a validated Euler circuit whose
//    length is the edge count.
Criterion euler_positive_cases() {
    Criterion c;
    const std::vector<u64> odd_primes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (std::size_t i = 0; i < odd_primes.size(); ++i) {
        for (std::size_t j = i + 1; j < odd_primes.size(); ++j) {
            const u64 n = odd_primes[i] * odd_primes[j];
            const ExplicitGraph g = build_graph(n);
            const EulerVerdict v = euler_verdict_explicit(g);
            if (!v.circuit_exists) {
                c.fail("no circuit at n=" + std::to_string(n));
                continue;
            }
            const EulerTour tour = find_euler_circuit(g);
            const TourValidation check = validate_tour(g, tour);
            if (!check.ok || tour.vertices.size() != edge_count(g) + 1) {
                c.fail("tour invalid at n=" + std::to_string(n) + ": " +
                       check.diagnostic);
            }
        }
    }
    return c;
}

// 5. Gamma[Z_{p^a q^b}] (a, b >= 2) and Gamma[Z_{p^m}] (m >= 3) have no
//    circuit, each with an odd-degree witness class.
Criterion euler_negative_cases() {
    Criterion c;
    const auto expect_odd_witness = [&c](u64 n) {
        const EulerVerdict v = euler_verdict_fast(n, LoopPolicy::NoLoops);
        if (v.circuit_exists) {
            c.fail("unexpected circuit at n=" + std::to_string(n));
            return;
        }
        const DegreeProfile prof = degree_profile(n, LoopPolicy::NoLoops);
        if (prof.odd_class_count == 0) {
            c.fail("no odd-degree witness class at n=" + std::to_string(n));
        }
        if (materializable(n)) {
            const EulerVerdict oracle =
                euler_verdict_explicit(build_graph(n, LoopPolicy::NoLoops));
            if (!(oracle == v)) {
                c.fail("fast/oracle mismatch at n=" + std::to_string(n));
            }
        }
    };
    const std::vector<u64> odd = {3, 5, 7};
    for (std::size_t i = 0; i < odd.size(); ++i) {
        for (std::size_t j = i + 1; j < odd.size(); ++j) {
            for (unsigned a = 2; a <= 3; ++a) {
                for (unsigned b = 2; b <= 3; ++b) {
                    u64 n = 1;
                    for (unsigned t = 0; t < a; ++t) n *= odd[i];
                    for (unsigned t = 0; t < b; ++t) n *= odd[j];
                    expect_odd_witness(n);
                }
            }
        }
    }
    for (u64 p : {2, 3, 5, 7}) {
        u64 n = p * p;
        for (unsigned m = 3; m <= 5; ++m) {
            n *= p;
            expect_odd_witness(n);
        }
    }
    return c;
}

// 6. Fast path equals the explicit oracle field-for-field on [4, 2000].
Criterion fast_path_equivalence() {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    for (u64 n = 4; n <= 2000; ++n) {
        if (!is_composite(n)) continue;
        for (LoopPolicy policy : {LoopPolicy::NoLoops, LoopPolicy::LoopCounts2}) {
            const EulerVerdict fast = euler_verdict_fast(n, policy);
            const EulerVerdict oracle =
                euler_verdict_explicit(build_graph(n, policy));
            if (!(fast == oracle)) {
                c.fail("verdict mismatch at n=" + std::to_string(n) +
                       " convention=" + std::string(to_string(policy)));
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (secs >= 60.0) {
        c.fail("sweep took " + std::to_string(secs) + " s (budget 60 s)");
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), " [%.1f s]", secs);
    if (c.pass) c.detail = buf;
    return c;
}

// 7. Hierholzer soundness/completeness on [4, 300], circuits and trails.
Criterion hierholzer_property() {
    Criterion c;
    for (u64 n = 4; n <= 300; ++n) {
        if (!is_composite(n)) continue;
        const ExplicitGraph g = build_graph(n);
        const EulerVerdict v = euler_verdict_explicit(g);
        bool circuit_ok;
        try {
            const EulerTour tour = find_euler_circuit(g);
            circuit_ok = validate_tour(g, tour).ok &&
                         tour.vertices.size() == edge_count(g) + 1 && tour.closed;
            if (!v.circuit_exists) c.fail("circuit built against the verdict at n=" + std::to_string(n));
        } catch (const NoCircuitError&) {
            circuit_ok = !v.circuit_exists;
        }
        if (!circuit_ok) c.fail("circuit case failed at n=" + std::to_string(n));
        bool trail_ok;
        try {
            const EulerTour tour = find_euler_trail(g);
            trail_ok = validate_tour(g, tour).ok;
            if (!v.trail_exists) c.fail("trail built against the verdict at n=" + std::to_string(n));
        } catch (const NoTrailError&) {
            trail_ok = !v.trail_exists;
        }
        if (!trail_ok) c.fail("trail case failed at n=" + std::to_string(n));
    }
    return c;
}

// 8. Classification audit at 200: the computed Eulerian set is re-derived
//    here from the explicit oracle, and the discrepancy sets must be the
//    known ones.
Criterion classification_audit() {
    Criterion c;
    std::vector<u64> oracle_set;
    std::vector<u64> odd_squarefree;
    for (u64 n = 4; n <= 200; ++n) {
        if (!is_composite(n)) continue;
        if (euler_verdict_explicit(build_graph(n)).circuit_exists) {
            oracle_set.push_back(n);
        }
        if (n % 2 == 1 && is_squarefree(n)) odd_squarefree.push_back(n);
    }
    const ClassificationReport rep =
        audit_classification(200, LoopPolicy::NoLoops, Reading::Circuit);
    if (rep.computed_eulerian != oracle_set) {
        c.fail("computed set disagrees with the per-n oracle");
    }
    if (rep.computed_eulerian != odd_squarefree) {
        c.fail("computed set is not the odd squarefree composites");
    }
    if (rep.false_positives != std::vector<u64>{9, 25, 49, 121, 169}) {
        c.fail("false positives off");
    }
    if (rep.false_negatives != std::vector<u64>{105, 165, 195}) {
        c.fail("false negatives off");
    }
    return c;
}

// 9. Fast verdict under 50 ms at n = 963761198400 (tau = 6720), with
//    internal consistency checks.
Criterion performance_threshold() {
    Criterion c;
    const u64 n = 963761198400ULL;
    if (factorize(n).divisor_count() != 6720) {
        c.fail("tau(n) != 6720");
        return c;
    }
    double best = 1e9;
    EulerVerdict v;
    for (int round = 0; round < 3; ++round) {
        const auto start = std::chrono::steady_clock::now();
        v = euler_verdict_fast(n, LoopPolicy::NoLoops);
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        best = std::min(best, secs);
    }
    if (best >= 0.050) {
        c.fail("euler_verdict_fast took " + std::to_string(best * 1000) + " ms");
    }
    if (v.circuit_exists || !v.connected) c.fail("implausible verdict fields");
    // Internal consistency: integral edge count, class sizes sum to the
    // vertex count, and the odd-vertex count is even-consistent.
    const u64 edges = quotient_edge_count(n);  // throws if the sum is odd
    if (edges == 0) c.fail("edge count zero");
    u64 size_sum = 0, odd_sum = 0;
    for (const ClassNode& node : build_quotient(n).classes) {
        size_sum += node.size;
        if (class_degree(n, node.d, LoopPolicy::NoLoops) % 2 == 1) {
            odd_sum += node.size;
        }
    }
    if (size_sum != n - 1 - euler_phi(n)) c.fail("class sizes do not sum");
    if (odd_sum != v.odd_degree_vertex_count) c.fail("odd count inconsistent");
    char buf[64];
    std::snprintf(buf, sizeof(buf), " [%.2f ms best of 3]", best * 1000);
    if (c.pass) c.detail = buf;
    return c;
}

// 10. Repeated sweep and audit command runs are byte-identical.
std::string g_cli;
std::filesystem::path g_tmp;

// Runs "zdg <args> <tmpfile>" so the bytes come from the CLI's own writer.
std::string run_to_file(const std::string& args, const std::string& tag) {
    const auto path = g_tmp / tag;
    const std::string cmd =
        "'" + g_cli + "' " + args + " '" + path.string() + "' > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) return "<command failed>";
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

Criterion determinism() {
    Criterion c;
    if (g_cli.empty()) {
        c.fail("CLI path missing (pass it as argv[1])");
        return c;
    }
    std::error_code ec;
    std::filesystem::create_directories(g_tmp, ec);

    const std::string sweep1 = run_to_file("sweep 4 200 --csv", "s1.csv");
    const std::string sweep2 = run_to_file("sweep 4 200 --csv", "s2.csv");
    if (sweep1.empty() || sweep1 == "<command failed>") {
        c.fail("sweep produced no output");
    } else if (sweep1 != sweep2) {
        c.fail("sweep CSV differs between runs");
    }

    const std::string audit1 = run_to_file("audit all --json", "a1.json");
    const std::string audit2 = run_to_file("audit all --json", "a2.json");
    if (audit1.empty() || audit1 == "<command failed>") {
        c.fail("audit produced no output");
    } else if (audit1 != audit2) {
        c.fail("audit JSON differs between runs");
    }

    const std::string csv1 = run_to_file("audit all --csv", "ac1.csv");
    const std::string csv2 = run_to_file("audit all --csv", "ac2.csv");
    if (csv1 != csv2) c.fail("audit CSV differs between runs");

    std::filesystem::remove_all(g_tmp, ec);
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    g_tmp = std::filesystem::temp_directory_path() /
            ("zdg_acceptance_" + std::to_string(::getpid()));

    struct Entry {
        const char* name;
        Criterion (*fn)();
    };
    const Entry entries[] = {
        {"degree decompression exact on [4,512]", degree_decompression},
        {"class-size identities to 2000 and prime powers", class_size_identities},
        {"structure theorems (complete / complete bipartite)", structure_theorems},
        {"Euler circuits with validated tours on pq", euler_positive_cases},
        {"no circuits for p^a q^b and p^m with odd witnesses", euler_negative_cases},
        {"fast path equals oracle field-for-field on [4,2000]", fast_path_equivalence},
        {"Hierholzer soundness and completeness on [4,300]", hierholzer_property},
        {"classification audit at 200 with known discrepancies", classification_audit},
        {"fast verdict < 50 ms at n = 963761198400", performance_threshold},
        {"byte-identical repeated sweep and audit runs", determinism},
    };

    int failures = 0;
    int index = 0;
    for (const Entry& e : entries) {
        ++index;
        Criterion c;
        try {
            c = e.fn();
        } catch (const std::exception& ex) {
            c.fail(std::string("exception: ") + ex.what());
        }
        std::printf("[%s] criterion %2d: %s%s%s\n", c.pass ? "PASS" : "FAIL",
                    index, e.name, c.detail.empty() ? "" : " — ",
                    c.detail.c_str());
        if (!c.pass) ++failures;
    }
    std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
