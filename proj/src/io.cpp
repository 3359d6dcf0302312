#include "zdg/io.hpp"

#include <algorithm>
#include <sstream>

#include "zdg/errors.hpp"

namespace zdg {

ojson to_json(const EulerVerdict& v) {
    return ojson{{"n", v.n},
                 {"convention", to_string(v.convention)},
                 {"connected", v.connected},
                 {"odd_degree_vertex_count", v.odd_degree_vertex_count},
                 {"circuit_exists", v.circuit_exists},
                 {"trail_exists", v.trail_exists},
                 {"degenerate", v.degenerate}};
}

ojson to_json(const DegreeProfile& p) {
    ojson entries = ojson::array();
    for (const DegreeEntry& e : p.entries) {
        entries.push_back(ojson{{"d", e.d},
                                {"size", e.size},
                                {"degree", e.degree},
                                {"parity", e.odd ? "odd" : "even"}});
    }
    return ojson{{"n", p.n},
                 {"convention", to_string(p.convention)},
                 {"entries", std::move(entries)},
                 {"all_even", p.all_even},
                 {"odd_class_count", p.odd_class_count}};
}

ojson to_json(const DivisorClassGraph& g) {
    ojson classes = ojson::array();
    for (const ClassNode& c : g.classes) {
        classes.push_back(ojson{
            {"d", c.d}, {"size", c.size}, {"self_square", c.self_square}});
    }
    ojson adjacency = ojson::array();
    for (std::size_t i = 0; i < g.class_count(); ++i) {
        for (std::size_t j = i; j < g.class_count(); ++j) {
            const bool adj = i == j ? g.classes[i].self_square : g.adjacent(i, j);
            if (adj) adjacency.push_back(ojson::array({i, j}));
        }
    }
    return ojson{{"n", g.n},
                 {"classes", std::move(classes)},
                 {"adjacency", std::move(adjacency)}};
}

ojson to_json(const EulerTour& t) {
    return ojson{{"closed", t.closed},
                 {"edges", t.vertices.empty() ? 0 : t.vertices.size() - 1},
                 {"vertices", t.vertices}};
}

ojson to_json(const ClaimAuditRecord& r) {
    return ojson{{"claim", std::string(claim_name(r.claim))},
                 {"sub", r.sub},
                 {"instance", r.instance},
                 {"convention", to_string(r.convention)},
                 {"reading", to_string(r.reading)},
                 {"expected", r.expected},
                 {"computed", r.computed},
                 {"agrees", r.agrees},
                 {"witness", r.witness}};
}

ojson to_json(const ClassificationReport& r) {
    return ojson{{"claim", "CLASS-FINAL"},
                 {"n_max", r.n_max},
                 {"convention", to_string(r.convention)},
                 {"reading", to_string(r.reading)},
                 {"computed_eulerian", r.computed_eulerian},
                 {"claimed_eulerian", r.claimed_eulerian},
                 {"false_positives", r.false_positives},
                 {"false_negatives", r.false_negatives},
                 {"oracle_checked", r.oracle_checked}};
}

SweepRow make_sweep_row(u64 n, LoopPolicy convention) {
    const EulerVerdict v = euler_verdict_fast(n, convention);
    SweepRow row;
    row.n = n;
    row.vertex_count = n - 1 - euler_phi(n);
    row.edge_count = quotient_edge_count(n);
    row.odd_degree_vertex_count = v.odd_degree_vertex_count;
    row.connected = v.connected;
    row.degenerate = v.degenerate;
    row.circuit_exists = v.circuit_exists;
    row.trail_exists = v.trail_exists;
    row.structure = recognize_structure_fast(n).to_string();
    return row;
}

std::vector<SweepRow> sweep_range(u64 lo, u64 hi, LoopPolicy convention) {
    if (lo < 2) lo = 2;
    std::vector<SweepRow> rows;
    for (u64 n = lo; n <= hi; ++n) {
        if (is_prime(n)) continue;
        rows.push_back(make_sweep_row(n, convention));
    }
    return rows;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "n,vertex_count,edge_count,odd_degree_vertex_count,connected,"
        "degenerate,circuit_exists,trail_exists,structure\r\n";
    for (const SweepRow& r : rows) {
        out += std::to_string(r.n) + ',' + std::to_string(r.vertex_count) +
               ',' + std::to_string(r.edge_count) + ',' +
               std::to_string(r.odd_degree_vertex_count) + ',' +
               bool_str(r.connected) + ',' + bool_str(r.degenerate) + ',' +
               bool_str(r.circuit_exists) + ',' + bool_str(r.trail_exists) +
               ',' + csv_escape(r.structure) + "\r\n";
    }
    return out;
}

ojson sweep_json(const std::vector<SweepRow>& rows) {
    ojson arr = ojson::array();
    for (const SweepRow& r : rows) {
        arr.push_back(ojson{{"n", r.n},
                            {"vertex_count", r.vertex_count},
                            {"edge_count", r.edge_count},
                            {"odd_degree_vertex_count", r.odd_degree_vertex_count},
                            {"connected", r.connected},
                            {"degenerate", r.degenerate},
                            {"circuit_exists", r.circuit_exists},
                            {"trail_exists", r.trail_exists},
                            {"structure", r.structure}});
    }
    return arr;
}

std::string sweep_text(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "     n  vertices      edges  odd_deg  conn  degen  circuit  trail  structure\n";
    for (const SweepRow& r : rows) {
        char line[128];
        std::snprintf(line, sizeof(line),
                      "%6llu  %8llu  %9llu  %7llu  %4s  %5s  %7s  %5s  ",
                      static_cast<unsigned long long>(r.n),
                      static_cast<unsigned long long>(r.vertex_count),
                      static_cast<unsigned long long>(r.edge_count),
                      static_cast<unsigned long long>(r.odd_degree_vertex_count),
                      bool_str(r.connected), bool_str(r.degenerate),
                      bool_str(r.circuit_exists), bool_str(r.trail_exists));
        os << line << r.structure << '\n';
    }
    return os.str();
}

std::string audit_csv(const std::vector<ClaimAuditRecord>& records) {
    std::string out =
        "claim,sub,instance,convention,reading,expected,computed,agrees,"
        "witness\r\n";
    for (const ClaimAuditRecord& r : records) {
        out += csv_escape(std::string(claim_name(r.claim))) + ',' +
               csv_escape(r.sub) + ',' + csv_escape(r.instance) + ',' +
               std::string(to_string(r.convention)) + ',' +
               std::string(to_string(r.reading)) + ',' +
               csv_escape(r.expected) + ',' + csv_escape(r.computed) + ',' +
               bool_str(r.agrees) + ',' + csv_escape(r.witness) + "\r\n";
    }
    return out;
}

std::string dot_graph(const ExplicitGraph& g) {
    std::string out = "graph zdg" + std::to_string(g.n) + " {\n";
    for (u64 v : g.vertices) {
        out += "  " + std::to_string(v) + ";\n";
    }
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        for (std::uint32_t j : g.adj[i]) {
            if (j > i) {
                out += "  " + std::to_string(g.vertices[i]) + " -- " +
                       std::to_string(g.vertices[j]) + ";\n";
            }
        }
    }
    for (std::uint32_t l : g.loops) {
        out += "  " + std::to_string(g.vertices[l]) + " -- " +
               std::to_string(g.vertices[l]) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace zdg
