#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zdg/audit.hpp"
#include "zdg/convention.hpp"
#include "zdg/eulerian.hpp"
#include "zdg/explicit_graph.hpp"
#include "zdg/quotient.hpp"

namespace zdg {

using ojson = nlohmann::ordered_json;

ojson to_json(const EulerVerdict& v);
ojson to_json(const DegreeProfile& p);
ojson to_json(const DivisorClassGraph& g);
ojson to_json(const EulerTour& t);
ojson to_json(const ClaimAuditRecord& r);
ojson to_json(const ClassificationReport& r);

// One sweep line per composite n, mirroring the fast verdict and the
// structure recognizer.
struct SweepRow {
    u64 n = 0;
    u64 vertex_count = 0;
    u64 edge_count = 0;
    u64 odd_degree_vertex_count = 0;
    bool connected = false;
    bool degenerate = false;
    bool circuit_exists = false;
    bool trail_exists = false;
    std::string structure;
};

SweepRow make_sweep_row(u64 n, LoopPolicy convention);
std::vector<SweepRow> sweep_range(u64 lo, u64 hi, LoopPolicy convention);

// RFC 4180: CRLF line endings, header row, quotes only where needed.
std::string sweep_csv(const std::vector<SweepRow>& rows);
ojson sweep_json(const std::vector<SweepRow>& rows);
std::string sweep_text(const std::vector<SweepRow>& rows);

std::string audit_csv(const std::vector<ClaimAuditRecord>& records);

// Undirected DOT; vertex labels are the residues, loops emitted as
// self-edges when the convention keeps them.
std::string dot_graph(const ExplicitGraph& g);

std::string csv_escape(const std::string& field);

}  // namespace zdg
