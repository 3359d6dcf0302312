// zdg: build, analyze, and audit zero-divisor graphs Gamma[Z_n].
//
// Exit codes: 0 ok, 1 usage, 2 no zero divisors (prime n), 3 graph too
// large to materialize, 4 no circuit/trail, 5 internal inconsistency.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zdg/audit.hpp"
#include "zdg/convention.hpp"
#include "zdg/errors.hpp"
#include "zdg/eulerian.hpp"
#include "zdg/explicit_graph.hpp"
#include "zdg/io.hpp"
#include "zdg/numtheory.hpp"
#include "zdg/quotient.hpp"

namespace {

using namespace zdg;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file: " + path);
    f << content;
}

std::string json_text(const ojson& doc) { return doc.dump(2) + "\n"; }

const char* bool_str(bool b) { return b ? "true" : "false"; }

LoopPolicy convention_of(const std::string& s) {
    auto policy = parse_loop_policy(s);
    if (!policy) throw DomainError("unknown convention: " + s);
    return *policy;
}

Reading reading_of(const std::string& s) {
    auto r = parse_reading(s);
    if (!r) throw DomainError("unknown reading: " + s);
    return *r;
}

void check_modulus(u64 n) {
    if (n < 2) throw DomainError("n must be >= 2");
    if (n > kMaxModulus) throw DomainError("n exceeds 2^63 - 1");
}

std::string verdict_text(const EulerVerdict& v, const char* mode, Reading reading) {
    const bool eulerian =
        reading == Reading::Circuit ? v.circuit_exists : v.trail_exists;
    const std::string euler_label =
        "eulerian (" + std::string(to_string(reading)) + ")";
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "Gamma[Z_%llu] (%s, %s)\n"
                  "  connected            %s\n"
                  "  degenerate           %s\n"
                  "  odd degree vertices  %llu\n"
                  "  circuit exists       %s\n"
                  "  trail exists         %s\n"
                  "  %-19s  %s\n",
                  static_cast<unsigned long long>(v.n),
                  std::string(to_string(v.convention)).c_str(), mode,
                  bool_str(v.connected), bool_str(v.degenerate),
                  static_cast<unsigned long long>(v.odd_degree_vertex_count),
                  bool_str(v.circuit_exists), bool_str(v.trail_exists),
                  euler_label.c_str(), bool_str(eulerian));
    return buf;
}

int run_check(u64 n, const std::string& mode, LoopPolicy policy,
              Reading reading, bool json_wanted, const std::string& json_path) {
    check_modulus(n);
    EulerVerdict fast, oracle;
    bool have_fast = false;
    if (mode == "fast" || mode == "both") {
        fast = euler_verdict_fast(n, policy);
        have_fast = true;
    }
    if (mode == "oracle" || mode == "both") {
        oracle = euler_verdict_explicit(build_graph(n, policy));
    }
    if (mode == "both" && !(fast == oracle)) {
        std::cerr << "zdg check: fast and oracle verdicts disagree for n=" << n
                  << "\n";
        throw InternalError("fast/oracle verdict mismatch");
    }
    const EulerVerdict& v = have_fast ? fast : oracle;
    const bool eulerian =
        reading == Reading::Circuit ? v.circuit_exists : v.trail_exists;

    if (json_wanted) {
        ojson doc{{"n", n},
                  {"mode", mode},
                  {"convention", to_string(policy)},
                  {"reading", to_string(reading)},
                  {"eulerian", eulerian}};
        if (mode == "both") {
            doc["fast"] = to_json(fast);
            doc["oracle"] = to_json(oracle);
            doc["agree"] = true;
        } else {
            doc["verdict"] = to_json(v);
        }
        write_output(json_path, json_text(doc));
    } else {
        std::string out = verdict_text(v, mode.c_str(), reading);
        if (mode == "both") out += "  fast/oracle agree    true\n";
        std::cout << out;
    }
    return 0;
}

int run_degrees(u64 n, LoopPolicy policy, bool json_wanted,
                const std::string& json_path) {
    check_modulus(n);
    const DegreeProfile prof = degree_profile(n, policy);
    if (json_wanted) {
        write_output(json_path, json_text(to_json(prof)));
        return 0;
    }
    std::printf("Gamma[Z_%llu] degree profile (%s)\n",
                static_cast<unsigned long long>(n),
                std::string(to_string(policy)).c_str());
    std::printf("%12s %12s %12s  %s\n", "d", "size", "degree", "parity");
    for (const DegreeEntry& e : prof.entries) {
        std::printf("%12llu %12llu %12llu  %s\n",
                    static_cast<unsigned long long>(e.d),
                    static_cast<unsigned long long>(e.size),
                    static_cast<unsigned long long>(e.degree),
                    e.odd ? "odd" : "even");
    }
    std::printf("all even: %s   odd classes: %llu\n", bool_str(prof.all_even),
                static_cast<unsigned long long>(prof.odd_class_count));
    return 0;
}

int run_build(u64 n, LoopPolicy policy, bool dot_wanted,
              const std::string& dot_path, bool json_wanted,
              const std::string& json_path) {
    check_modulus(n);
    if (json_wanted) {
        // The class-model serialization works at any supported modulus.
        write_output(json_path, json_text(to_json(build_quotient(n))));
    }
    if (dot_wanted) {
        const ExplicitGraph g = build_graph(n, policy);
        write_output(dot_path, dot_graph(g));
    }
    if (!json_wanted && !dot_wanted) {
        const ExplicitGraph g = build_graph(n, policy);
        std::printf("Gamma[Z_%llu]: %zu vertices, %llu edges, %zu loops (%s)\n",
                    static_cast<unsigned long long>(n), g.vertex_count(),
                    static_cast<unsigned long long>(edge_count(g)),
                    g.loops.size(), std::string(to_string(policy)).c_str());
    }
    return 0;
}

int run_tour(u64 n, bool want_trail, LoopPolicy policy, bool json_wanted,
             const std::string& json_path) {
    check_modulus(n);
    const ExplicitGraph g = build_graph(n, policy);
    const EulerTour tour = want_trail ? find_euler_trail(g) : find_euler_circuit(g);
    const TourValidation check = validate_tour(g, tour);
    if (!check.ok) {
        throw InternalError("constructed tour failed validation: " +
                            check.diagnostic);
    }
    if (json_wanted) {
        ojson doc = to_json(tour);
        doc["n"] = n;
        doc["kind"] = tour.closed ? "circuit" : "trail";
        write_output(json_path, json_text(doc));
    } else {
        std::cout << tour_to_text(tour) << "\n";
    }
    return 0;
}

int run_sweep(u64 lo, u64 hi, LoopPolicy policy, bool csv_wanted,
              const std::string& csv_path, bool json_wanted,
              const std::string& json_path) {
    if (hi < lo) throw DomainError("sweep: max must be >= min");
    check_modulus(hi);
    const std::vector<SweepRow> rows = sweep_range(lo, hi, policy);
    if (csv_wanted) write_output(csv_path, sweep_csv(rows));
    if (json_wanted) write_output(json_path, json_text(sweep_json(rows)));
    if (!csv_wanted && !json_wanted) std::cout << sweep_text(rows);
    return 0;
}

int run_audit(const std::string& claim_arg, u64 n_max, LoopPolicy policy,
              Reading reading, bool json_wanted, const std::string& json_path,
              bool csv_wanted, const std::string& csv_path) {
    std::vector<ClaimId> ids;
    if (claim_arg == "all") {
        ids = all_claims();
    } else {
        auto id = parse_claim(claim_arg);
        if (!id) throw DomainError("unknown claim: " + claim_arg);
        ids.push_back(*id);
    }

    std::vector<ClaimAuditRecord> records;
    bool have_classification = false;
    ClassificationReport classification;
    for (ClaimId id : ids) {
        std::vector<ClaimInstance> instances = default_instances(id);
        if (id == ClaimId::ClassFinal) {
            instances = {instance_nmax(n_max)};
            classification = audit_classification(n_max, policy, reading);
            have_classification = true;
        }
        auto recs = audit_claim(id, instances, policy, reading);
        records.insert(records.end(), recs.begin(), recs.end());
    }

    if (json_wanted) {
        ojson doc{{"convention", to_string(policy)},
                  {"reading", to_string(reading)}};
        ojson arr = ojson::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        doc["records"] = std::move(arr);
        if (have_classification) doc["classification"] = to_json(classification);
        write_output(json_path, json_text(doc));
    }
    if (csv_wanted) write_output(csv_path, audit_csv(records));
    if (!json_wanted && !csv_wanted) {
        std::size_t agree = 0;
        for (const auto& r : records) {
            std::printf("%s [%s] %s: expected=%s computed=%s %s%s%s\n",
                        std::string(claim_name(r.claim)).c_str(),
                        r.instance.c_str(), r.sub.c_str(), r.expected.c_str(),
                        r.computed.c_str(), r.agrees ? "AGREE" : "DISAGREE",
                        r.witness.empty() ? "" : "  witness: ",
                        r.witness.c_str());
            if (r.agrees) ++agree;
        }
        std::printf("records: %zu, agree: %zu, disagree: %zu\n", records.size(),
                    agree, records.size() - agree);
        if (have_classification) {
            std::printf("classification (n <= %llu): computed %zu Eulerian, "
                        "claimed %zu, false positives %zu, false negatives %zu\n",
                        static_cast<unsigned long long>(classification.n_max),
                        classification.computed_eulerian.size(),
                        classification.claimed_eulerian.size(),
                        classification.false_positives.size(),
                        classification.false_negatives.size());
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-divisor graph Euler analyzer"};
    app.fallthrough(true);
    app.require_subcommand(1);

    std::string conv_str = "noloops";
    app.add_option("--convention", conv_str,
                   "loop policy: noloops|loop2|loop1 (default noloops)")
        ->envname("ZDG_CONVENTION");
    std::string reading_str = "circuit";
    app.add_option("--reading", reading_str, "euler reading: circuit|trail");

    // check
    auto* cmd_check = app.add_subcommand("check", "Euler verdict for Gamma[Z_n]");
    u64 check_n = 0;
    cmd_check->add_option("n", check_n, "modulus")->required();
    bool flag_fast = false, flag_oracle = false, flag_both = false;
    cmd_check->add_flag("--fast", flag_fast, "class-model path only (default)");
    cmd_check->add_flag("--oracle", flag_oracle, "explicit graph only");
    cmd_check->add_flag("--both", flag_both, "run both and require agreement");
    std::string check_json;
    auto* check_json_opt =
        cmd_check->add_option("--json", check_json, "JSON output [PATH]")
            ->expected(0, 1);

    // degrees
    auto* cmd_degrees =
        app.add_subcommand("degrees", "degree profile by divisor class");
    u64 degrees_n = 0;
    cmd_degrees->add_option("n", degrees_n, "modulus")->required();
    std::string degrees_json;
    auto* degrees_json_opt =
        cmd_degrees->add_option("--json", degrees_json, "JSON output [PATH]")
            ->expected(0, 1);

    // build
    auto* cmd_build = app.add_subcommand("build", "materialize Gamma[Z_n]");
    u64 build_n = 0;
    cmd_build->add_option("n", build_n, "modulus")->required();
    std::string build_dot, build_json;
    auto* build_dot_opt =
        cmd_build->add_option("--dot", build_dot, "DOT output [PATH]")
            ->expected(0, 1);
    auto* build_json_opt =
        cmd_build
            ->add_option("--json", build_json, "class-model JSON output [PATH]")
            ->expected(0, 1);

    // tour
    auto* cmd_tour =
        app.add_subcommand("tour", "construct a validated Euler tour");
    u64 tour_n = 0;
    cmd_tour->add_option("n", tour_n, "modulus")->required();
    bool tour_trail = false;
    cmd_tour->add_flag("--trail", tour_trail, "open trail instead of circuit");
    std::string tour_json;
    auto* tour_json_opt =
        cmd_tour->add_option("--json", tour_json, "JSON output [PATH]")
            ->expected(0, 1);

    // sweep
    auto* cmd_sweep =
        app.add_subcommand("sweep", "per-n report over a composite range");
    u64 sweep_lo = 0, sweep_hi = 0;
    cmd_sweep->add_option("min", sweep_lo, "range start")->required();
    cmd_sweep->add_option("max", sweep_hi, "range end")->required();
    std::string sweep_csv_path, sweep_json_path;
    auto* sweep_csv_opt =
        cmd_sweep->add_option("--csv", sweep_csv_path, "CSV output [PATH]")
            ->expected(0, 1);
    auto* sweep_json_opt =
        cmd_sweep->add_option("--json", sweep_json_path, "JSON output [PATH]")
            ->expected(0, 1);

    // audit
    auto* cmd_audit =
        app.add_subcommand("audit", "evaluate the claim catalog");
    std::string audit_claim_arg;
    cmd_audit
        ->add_option("claim", audit_claim_arg,
                     "THM-3.1|THM-3.2|THM-3.3|THM-4.1|THM-4.2|THM-4.3|"
                     "CLASS-FINAL|all")
        ->required();
    u64 audit_max = 200;
    cmd_audit->add_option("--max", audit_max,
                          "classification sweep bound (CLASS-FINAL)");
    std::string audit_json_path, audit_csv_path;
    auto* audit_json_opt =
        cmd_audit->add_option("--json", audit_json_path, "JSON output [PATH]")
            ->expected(0, 1);
    auto* audit_csv_opt =
        cmd_audit->add_option("--csv", audit_csv_path, "CSV output [PATH]")
            ->expected(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const LoopPolicy policy = convention_of(conv_str);
        const Reading reading = reading_of(reading_str);
        if (cmd_check->parsed()) {
            if (flag_fast + flag_oracle + flag_both > 1) {
                throw DomainError("pick one of --fast/--oracle/--both");
            }
            const std::string mode =
                flag_oracle ? "oracle" : (flag_both ? "both" : "fast");
            return run_check(check_n, mode, policy, reading,
                             check_json_opt->count() > 0, check_json);
        }
        if (cmd_degrees->parsed()) {
            return run_degrees(degrees_n, policy, degrees_json_opt->count() > 0,
                               degrees_json);
        }
        if (cmd_build->parsed()) {
            return run_build(build_n, policy, build_dot_opt->count() > 0,
                             build_dot, build_json_opt->count() > 0, build_json);
        }
        if (cmd_tour->parsed()) {
            return run_tour(tour_n, tour_trail, policy,
                            tour_json_opt->count() > 0, tour_json);
        }
        if (cmd_sweep->parsed()) {
            return run_sweep(sweep_lo, sweep_hi, policy,
                             sweep_csv_opt->count() > 0, sweep_csv_path,
                             sweep_json_opt->count() > 0, sweep_json_path);
        }
        if (cmd_audit->parsed()) {
            return run_audit(audit_claim_arg, audit_max, policy, reading,
                             audit_json_opt->count() > 0, audit_json_path,
                             audit_csv_opt->count() > 0, audit_csv_path);
        }
        return 1;
    } catch (const EmptyGraphError& e) {
        std::cerr << "zdg: no zero divisors: " << e.what() << "\n";
        return 2;
    } catch (const TooLargeError& e) {
        std::cerr << "zdg: " << e.what() << "\n";
        return 3;
    } catch (const NoCircuitError& e) {
        std::cerr << "zdg: " << e.what() << "\n";
        return 4;
    } catch (const NoTrailError& e) {
        std::cerr << "zdg: " << e.what() << "\n";
        return 4;
    } catch (const InternalError& e) {
        std::cerr << "zdg: internal inconsistency: " << e.what() << "\n";
        return 5;
    } catch (const UnsupportedConventionError& e) {
        std::cerr << "zdg: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "zdg: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "zdg: " << e.what() << "\n";
        return 1;
    }
}
