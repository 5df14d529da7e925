#pragma once

#include "cliquesat/count.hpp"
#include "cliquesat/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cliquesat {

// Vertex subset of a small pattern F; bit i stands for pattern vertex i.
using SubsetMask = std::uint32_t;

inline constexpr std::size_t kMaxCoverPatternVertices = 6;
inline constexpr std::size_t kMaxCandidateSets = 24;

// A family of vertex subsets of F, each spanning an edge of F, jointly covering E(F).
// Its weight is u^a (m/n)^b with a the number of members and b their total size.
struct ValidFamily {
    std::vector<SubsetMask> sets;  // ascending, distinct

    [[nodiscard]] std::size_t member_count() const noexcept { return sets.size(); }
    [[nodiscard]] std::size_t total_size() const;
    [[nodiscard]] long double log_weight(long double u, long double m, long double n) const;
    // Largest |A ∩ B| over distinct members.
    [[nodiscard]] std::size_t max_pairwise_intersection() const;

    friend bool operator==(const ValidFamily&, const ValidFamily&) = default;
};

// The family E(F): one two-element set per edge.
ValidFamily edge_family(const Graph& f);

// Subsets of V(F) that span at least one edge, ascending.
std::vector<SubsetMask> candidate_sets(const Graph& f);

// Visits every valid family once (members ascending). Throws CapabilityError when
// v(F) > kMaxCoverPatternVertices or F has more than kMaxCandidateSets candidate sets.
void for_each_valid_family(const Graph& f, const std::function<void(std::span<const SubsetMask>)>& visit);
std::vector<ValidFamily> enumerate_valid_families(const Graph& f);

struct MaximizerReport {
    ValidFamily best;
    long double log_weight = 0;
    std::size_t best_members = 0;      // (a, b) of the maximum; families with equal
    std::size_t best_total_size = 0;   // pairs have equal weight exactly
    std::vector<ValidFamily> maximizers;
    // A family with a different (a, b) came within 1e-12 of the maximum in log space,
    // so the floating comparison alone cannot separate them.
    bool float_tie = false;
    std::size_t families_scanned = 0;
};

// Throws InputError unless u (m/n)^{2-(v-2)/(e-1)} > 1, u m^2 < n^2, m <= n, e(F) >= 2
// and F is 2-balanced.
void require_maximizer_regime(const Graph& f, long double u, long double m, long double n);
bool in_maximizer_regime(const Graph& f, long double u, long double m, long double n);

// Argmax of w over all valid families; gated by require_maximizer_regime.
MaximizerReport max_weight_family(const Graph& f, long double u, long double m, long double n);
// The same scan without the regime gate, for probing outside it.
MaximizerReport max_weight_family_unchecked(const Graph& f, long double u, long double m, long double n);

// One (copy, covering) pair: the copy as host images of pattern vertices (the
// lexicographically smallest labeling of that copy) and the covering's clique indices.
struct ZPair {
    std::vector<Vertex> copy;
    std::vector<std::size_t> cliques;
};

struct ZReport {
    Count z;
    std::size_t copies = 0;
};

// Number of pairs (copy of F inside the union, covering by present cliques) where every
// covering clique spans an edge of the copy, traces on the copy's vertex set are
// pairwise distinct, and the cliques cover all of its edges.
// With guarded = true, requires v(F) <= 6 and (n <= 14 or at most 12 cliques).
ZReport count_Z(const Graph& f, const CliqueUnion& cu, bool guarded = true);

// Visits every pair counted by count_Z.
void for_each_z_pair(const Graph& f, const CliqueUnion& cu, const std::function<void(const ZPair&)>& visit,
                     bool guarded = true);

} // namespace cliquesat
