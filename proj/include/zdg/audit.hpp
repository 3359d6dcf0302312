#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/convention.hpp"
#include "zdg/numtheory.hpp"

namespace zdg {

// Closed catalog of audited claims about which Gamma[Z_n] are Eulerian and
// how they decompose into divisor classes.
enum class ClaimId {
    Thm31,       // Gamma[Z_{p^2}]: complete graph K_{p-1}; Eulerian iff p > 2
    Thm32,       // Gamma[Z_{p^3}]: never Eulerian; |A| = p(p-1), |B| = p-1
    Thm33,       // Gamma[Z_{p^m}]: never Eulerian; |A_i| = p^{m-i} - p^{m-i-1}
    Thm41,       // Gamma[Z_{pq}]: complete bipartite; Eulerian iff p, q odd
    Thm42,       // Gamma[Z_{p^a q^b}], a, b >= 2: never Eulerian
    Thm43,       // Gamma[Z_n], all exponents >= 2: never Eulerian
    ClassFinal,  // claimed classification: Eulerian iff n = p^2 or n = pq
};

std::string_view claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);
const std::vector<ClaimId>& all_claims();

// A claim statement split into independently checkable sub-assertions.
struct SubAssertion {
    std::string id;
    std::string statement;
    std::string domain;
};

std::vector<SubAssertion> claim_predicates(ClaimId id);

// One parameter binding: a prime signature [(p_i, alpha_i)], primes
// ascending. CLASS-FINAL instances carry a sweep bound instead.
struct ClaimInstance {
    std::vector<PrimePower> signature;
    u64 n_max = 0;  // ClassFinal only

    u64 modulus() const;  // product of the signature, overflow-checked
};

ClaimInstance instance_p(u64 p);
ClaimInstance instance_pm(u64 p, unsigned m);
ClaimInstance instance_pq(u64 p, u64 q);
ClaimInstance instance_pq_exp(u64 p, unsigned a, u64 q, unsigned b);
ClaimInstance instance_signature(std::vector<PrimePower> sig);
ClaimInstance instance_nmax(u64 n_max);

// Instance grids used by `audit` when the caller gives no explicit ranges.
std::vector<ClaimInstance> default_instances(ClaimId id);

struct ClaimAuditRecord {
    ClaimId claim = ClaimId::Thm31;
    std::string sub;       // sub-assertion id ("euler", "structure", ...)
    std::string instance;  // "p=5", "p=3,q=5", "sig=3^2*5^2", "n_max=200"
    LoopPolicy convention = LoopPolicy::NoLoops;
    Reading reading = Reading::Circuit;
    std::string expected;
    std::string computed;
    bool agrees = false;
    std::string witness;  // set whenever agrees is false, and for every
                          // not-Eulerian outcome (smallest odd class)

    bool operator==(const ClaimAuditRecord&) const = default;
};

// One record per (instance, sub-assertion), deterministic order. Instances
// outside the claim's domain produce an "error:" record, not a failure.
// Fast-path results are cross-checked against the explicit oracle whenever
// the graph is materializable; a mismatch throws InternalError.
std::vector<ClaimAuditRecord> audit_claim(ClaimId id,
                                          const std::vector<ClaimInstance>& instances,
                                          LoopPolicy convention, Reading reading);

struct ClassificationReport {
    u64 n_max = 0;
    LoopPolicy convention = LoopPolicy::NoLoops;
    Reading reading = Reading::Circuit;
    std::vector<u64> computed_eulerian;  // {composite n <= n_max : Eulerian}
    std::vector<u64> claimed_eulerian;   // {p^2 : p odd} + {pq : odd p < q}
    std::vector<u64> false_positives;    // claimed but not Eulerian
    std::vector<u64> false_negatives;    // Eulerian but not claimed
    u64 oracle_checked = 0;              // how many n were oracle-verified
};

// Sweeps every composite n <= n_max through the fast path (oracle-verified
// where materializable) and diffs the result against the claimed set.
ClassificationReport audit_classification(u64 n_max, LoopPolicy convention,
                                          Reading reading);

}  // namespace zdg
