#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "homog/family.hpp"
#include "homog/graph.hpp"
#include "homog/induced.hpp"

namespace homog {

enum class PairLabel : uint8_t { Low, High, Bad };

inline std::size_t pair_index(int k, int i, int j) {
    // i < j, lex over (i, j)
    return std::size_t(i) * k - std::size_t(i) * (i + 1) / 2 + std::size_t(j - i - 1);
}

struct PairClassification {
    int k = 0;
    std::vector<PairLabel> labels;   // pair_index order
    std::vector<Density> densities;  // pair_index order
    long long bad_count = 0;
};

// Exact rational label per pair: LOW iff d <= gamma, HIGH iff d >= 1-gamma,
// BAD otherwise. gamma >= 1/2 leaves nothing BAD.
PairClassification classify_pairs(const Graph& g, const std::vector<VertexSet>& parts,
                                  const Rational& gamma);

struct RegularPartition {
    std::vector<VertexSet> parts;
    Rational gamma;
    std::vector<PairLabel> labels;
    std::vector<Density> densities;
    long long bad_count = 0;

    int k() const { return int(parts.size()); }
    PairLabel label(int i, int j) const {
        return labels[pair_index(k(), std::min(i, j), std::max(i, j))];
    }
    const Density& density(int i, int j) const {
        return densities[pair_index(k(), std::min(i, j), std::max(i, j))];
    }
    long long pair_count() const { return (long long)k() * (k() - 1) / 2; }
    bool within_bad_budget() const {
        // bad_count <= gamma * C(k,2)
        return (__int128)bad_count * gamma.den() <= (__int128)gamma.num() * pair_count();
    }

    std::string to_text() const;
    static RegularPartition from_text(const std::string& text, const Graph& g);
};

struct AfnStats {
    int rounds = 0;
    std::vector<std::pair<int, long long>> trajectory; // (k, bad_count) per round
    long long copies_found = 0;
};

struct PartitionOutcome {
    std::variant<RegularPartition, InducedCopyEvidence> value;
    AfnStats stats;

    bool is_partition() const { return std::holds_alternative<RegularPartition>(value); }
    const RegularPartition& partition() const { return std::get<RegularPartition>(value); }
    const InducedCopyEvidence& evidence() const { return std::get<InducedCopyEvidence>(value); }
};

struct AfnConfig {
    int evidence_target = 100;
    int draws_per_assignment = 8;
    long long probe_budget_factor = 64; // draws per round = factor * evidence_target
};

// Refine-or-probe loop meeting the partition contract: returns an
// equipartition with at most gamma*C(k,2) non-homogeneous pairs for some
// k0 <= k <= k_max, or `evidence_target` verified induced copies of a family
// member. Throws ExhaustionError when k_max is reached with neither.
PartitionOutcome afn_partition(const Graph& g, const FamilySpec& fam, const Rational& gamma,
                               int k0, int k_max, uint64_t seed, const AfnConfig& cfg = {});

} // namespace homog
