#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homog/family.hpp"
#include "homog/regularity.hpp"

namespace homog {

// Quantities derived from eps and the family; every later stage reads its
// thresholds from here.
struct Parameters {
    Rational eps;
    int f = 0;
    Rational c;
    Rational c_const;
    Rational gamma;          // min{1/f^2, eps/4, (1/2)(c*eps/4)^(1/c)}, maybe tightened
    long long k0 = 0;        // ceil(1/gamma)
    long long k_max = 0;     // k0 * ceil(1/gamma)^2 unless overridden
    long long clique_target = 0; // ceil(1/(2*gamma))
    Rational b_target;       // 4/eps
    bool tightened = false;  // gamma was lowered to restore the extraction chain
};

Parameters derive_parameters(const Rational& eps, const FamilySpec& fam);

enum class ReducedRule { RPrime, RSigned };

// Graph on part indices. RPrime: edge iff the pair is density-homogeneous.
// RSigned: defined on a clique of RPrime; edge iff the pair is dense.
struct ReducedGraph {
    ReducedRule rule = ReducedRule::RPrime;
    Graph g;
    std::vector<int> part_of;     // reduced vertex -> partition part index
    long long homogeneous_pairs = 0;
    bool edge_bound_ok = false;   // e(R') >= (1-gamma) * C(k,2)
};

ReducedGraph build_r_prime(const RegularPartition& partition);

// Clique of size >= target in r_prime: greedy complement elimination first,
// exact search as fallback. Throws ViolationError when even exact search
// comes up short (the edge-count precondition must have failed).
std::vector<int> turan_clique(const ReducedGraph& r_prime, long long target);

ReducedGraph build_signed_reduced(const RegularPartition& partition, const std::vector<int>& a);

struct ReducedHit {
    int member = -1;
    std::vector<int> parts; // partition part index per pattern vertex
};

// First induced family member inside the signed reduced graph under a
// deterministic order, or nullopt when it is family-free.
std::optional<ReducedHit> find_induced_in_reduced(const ReducedGraph& r, const FamilySpec& fam,
                                                  long long subset_budget = 2'000'000);

InducedCopyEvidence case1_evidence(const Graph& g, const RegularPartition& partition,
                                   const ReducedHit& hit, const FamilySpec& fam,
                                   const Parameters& params, uint64_t seed,
                                   int evidence_target = 100);

struct EhResult {
    std::vector<int> members; // reduced vertex ids
    bool clique_side = false;
};

// Larger of an exact maximum clique and maximum independent set of the
// signed reduced graph; cotree-based when the family pins down 4-path
// freeness, branch and bound otherwise. Checks |B| >= c_const * |A|^c.
EhResult eh_clique_or_independent(const ReducedGraph& r, const FamilySpec& fam);

enum class Side { Sparse, Dense };

struct HomogeneousSetCertificate {
    VertexSet x;
    Density density;
    Side side = Side::Sparse;
    std::vector<int> parts_used;
    Rational delta_actual;
};

struct Case2Violation {
    std::string detail;
    Density recount;
};

// X = union of the parts named by parts_used; the certificate stands on the
// exact recount, the derivation chain is only logged.
std::variant<HomogeneousSetCertificate, Case2Violation> case2_assemble(
    const Graph& g, const RegularPartition& partition, const std::vector<int>& parts_used,
    bool clique_side, const Parameters& params);

enum class Branch { PartitionEvidence, Case1, Case2 };

struct RunTrace {
    long long k = 0;
    long long bad_count = 0;
    long long a_size = 0;
    long long b_size = 0;
    Side side = Side::Sparse;
    bool side_meaningful = false;
    Branch branch = Branch::Case2;
    int rounds = 0;
    Rational delta_promised; // t/k for the certificate branch
    bool chain_ok = false;       // c_const * |A|^c >= 4/eps
    bool b_meets_target = false; // |B| >= 4/eps
};

struct Outcome {
    std::variant<HomogeneousSetCertificate, InducedCopyEvidence> value;
    RunTrace trace;
    Parameters params;
    std::string family_name;
    long long digest_n = 0;
    long long digest_m = 0;

    bool is_certificate() const { return std::holds_alternative<HomogeneousSetCertificate>(value); }
    const HomogeneousSetCertificate& certificate() const {
        return std::get<HomogeneousSetCertificate>(value);
    }
    const InducedCopyEvidence& evidence() const { return std::get<InducedCopyEvidence>(value); }

    std::string to_text() const;
    static Outcome from_text(const std::string& text);
    static Outcome read_file(const std::string& path);
    void write_file(const std::string& path) const;
};

struct RunConfig {
    int min_n = 4;
    int evidence_target = 100;
    long long k_max_override = 0; // 0 = derive
};

// The full dichotomy: partition, reduce, extract, and certify. Every
// returned outcome has been re-verified against g.
Outcome run(const Graph& g, const Rational& eps, const FamilySpec& fam, uint64_t seed,
            const RunConfig& cfg = {});

} // namespace homog
