#include "cliquesat/covers.hpp"

#include "cliquesat/bounds.hpp"
#include "cliquesat/counters.hpp"
#include "cliquesat/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

namespace cliquesat {

namespace {

// Bit j set when pattern edge j lies inside `set`.
std::uint64_t edges_inside(const std::vector<Edge>& edges, SubsetMask set) {
    std::uint64_t covered = 0;
    for (std::size_t j = 0; j < edges.size(); ++j) {
        if (((set >> edges[j].u) & 1U) != 0 && ((set >> edges[j].v) & 1U) != 0) {
            covered |= std::uint64_t{1} << j;
        }
    }
    return covered;
}

std::uint64_t all_edges(std::size_t count) {
    return count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

void require_cover_pattern(const Graph& f) {
    if (f.vertex_count() > kMaxCoverPatternVertices) {
        throw CapabilityError("covering enumeration supports patterns with at most " +
                              std::to_string(kMaxCoverPatternVertices) + " vertices");
    }
}

} // namespace

std::size_t ValidFamily::total_size() const {
    std::size_t total = 0;
    for (SubsetMask s : sets) {
        total += static_cast<std::size_t>(std::popcount(s));
    }
    return total;
}

long double ValidFamily::log_weight(long double u, long double m, long double n) const {
    return static_cast<long double>(member_count()) * std::log(u) +
           static_cast<long double>(total_size()) * std::log(m / n);
}

std::size_t ValidFamily::max_pairwise_intersection() const {
    std::size_t best = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            best = std::max(best, static_cast<std::size_t>(std::popcount(sets[i] & sets[j])));
        }
    }
    return best;
}

ValidFamily edge_family(const Graph& f) {
    ValidFamily family;
    for (const Edge& e : f.edges()) {
        family.sets.push_back((SubsetMask{1} << e.u) | (SubsetMask{1} << e.v));
    }
    std::sort(family.sets.begin(), family.sets.end());
    return family;
}

std::vector<SubsetMask> candidate_sets(const Graph& f) {
    require_cover_pattern(f);
    const auto edges = f.edges();
    std::vector<SubsetMask> out;
    for (SubsetMask set = 1; set < (SubsetMask{1} << f.vertex_count()); ++set) {
        if (edges_inside(edges, set) != 0) {
            out.push_back(set);
        }
    }
    return out;
}

void for_each_valid_family(const Graph& f, const std::function<void(std::span<const SubsetMask>)>& visit) {
    const auto candidates = candidate_sets(f);
    if (candidates.size() > kMaxCandidateSets) {
        throw CapabilityError("pattern has " + std::to_string(candidates.size()) +
                              " candidate sets; valid-family enumeration supports at most " +
                              std::to_string(kMaxCandidateSets));
    }
    const auto edges = f.edges();
    const std::uint64_t target = all_edges(edges.size());
    std::vector<std::uint64_t> inside(candidates.size());
    // suffix[i]: edges coverable by candidates i.. ; used to cut hopeless branches.
    std::vector<std::uint64_t> suffix(candidates.size() + 1, 0);
    for (std::size_t i = candidates.size(); i-- > 0;) {
        inside[i] = edges_inside(edges, candidates[i]);
        suffix[i] = suffix[i + 1] | inside[i];
    }
    std::vector<SubsetMask> chosen;
    std::function<void(std::size_t, std::uint64_t)> extend = [&](std::size_t i, std::uint64_t covered) {
        if ((covered | suffix[i]) != target) {
            return;
        }
        if (i == candidates.size()) {
            visit(chosen);
            return;
        }
        chosen.push_back(candidates[i]);
        extend(i + 1, covered | inside[i]);
        chosen.pop_back();
        extend(i + 1, covered);
    };
    extend(0, 0);
}

std::vector<ValidFamily> enumerate_valid_families(const Graph& f) {
    std::vector<ValidFamily> out;
    for_each_valid_family(f, [&](std::span<const SubsetMask> sets) {
        out.push_back(ValidFamily{{sets.begin(), sets.end()}});
    });
    std::sort(out.begin(), out.end(), [](const ValidFamily& a, const ValidFamily& b) { return a.sets < b.sets; });
    return out;
}

bool in_maximizer_regime(const Graph& f, long double u, long double m, long double n) {
    if (f.edge_count() < 2 || f.vertex_count() < 3 || !(u > 0) || !(m > 0) || m > n) {
        return false;
    }
    if (!(u * m * m < n * n)) {
        return false;
    }
    const long double exponent =
        2.0L - static_cast<long double>(f.vertex_count() - 2) / static_cast<long double>(f.edge_count() - 1);
    if (!(std::log(u) + exponent * std::log(m / n) > 0)) {
        return false;
    }
    return is_2_balanced(f);
}

void require_maximizer_regime(const Graph& f, long double u, long double m, long double n) {
    if (f.edge_count() < 2) {
        throw InputError("maximizer regime needs e(F) >= 2");
    }
    if (f.vertex_count() < 3) {
        throw InputError("maximizer regime needs v(F) >= 3");
    }
    if (!(m > 0) || m > n) {
        throw InputError("maximizer regime needs 0 < m <= n");
    }
    if (!(u > 0) || !(u * m * m < n * n)) {
        throw InputError("maximizer regime needs u m^2 < n^2");
    }
    if (!in_maximizer_regime(f, u, m, n)) {
        if (!is_2_balanced(f)) {
            throw InputError("maximizer regime needs a 2-balanced F");
        }
        throw InputError("maximizer regime needs u (m/n)^{2-(v-2)/(e-1)} > 1");
    }
}

MaximizerReport max_weight_family_unchecked(const Graph& f, long double u, long double m, long double n) {
    const long double log_u = std::log(u);
    const long double log_ratio = std::log(m / n);
    // Weight depends only on (a, b), so scan the pairs first.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pairs;
    MaximizerReport report;
    for_each_valid_family(f, [&](std::span<const SubsetMask> sets) {
        std::size_t b = 0;
        for (SubsetMask s : sets) {
            b += static_cast<std::size_t>(std::popcount(s));
        }
        ++pairs[{sets.size(), b}];
        ++report.families_scanned;
    });
    if (pairs.empty()) {
        throw InternalError("pattern has no valid family");
    }
    const auto weight = [&](const std::pair<std::size_t, std::size_t>& p) {
        return static_cast<long double>(p.first) * log_u + static_cast<long double>(p.second) * log_ratio;
    };
    auto best = pairs.begin()->first;
    for (const auto& [p, count] : pairs) {
        if (weight(p) > weight(best)) {
            best = p;
        }
    }
    report.best_members = best.first;
    report.best_total_size = best.second;
    report.log_weight = weight(best);
    for (const auto& [p, count] : pairs) {
        if (p != best && std::fabs(weight(p) - report.log_weight) <= 1e-12L * std::max(1.0L, std::fabs(report.log_weight))) {
            report.float_tie = true;
        }
    }
    for_each_valid_family(f, [&](std::span<const SubsetMask> sets) {
        if (sets.size() != best.first) {
            return;
        }
        ValidFamily family{{sets.begin(), sets.end()}};
        if (family.total_size() == best.second) {
            report.maximizers.push_back(std::move(family));
        }
    });
    report.best = report.maximizers.front();
    return report;
}

MaximizerReport max_weight_family(const Graph& f, long double u, long double m, long double n) {
    require_maximizer_regime(f, u, m, n);
    return max_weight_family_unchecked(f, u, m, n);
}

// --- Z(F, G) ----------------------------------------------------------------

void for_each_z_pair(const Graph& f, const CliqueUnion& cu, const std::function<void(const ZPair&)>& visit,
                     bool guarded) {
    require_cover_pattern(f);
    if (guarded && cu.vertex_count() > 14 && cu.size() > 12) {
        throw CapabilityError("Z enumeration supports unions on at most 14 vertices or with at most 12 cliques");
    }
    if (f.edge_count() == 0 || f.edge_count() > 64) {
        throw InputError("Z enumeration needs a pattern with 1..64 edges");
    }
    const Graph host = union_graph(cu);
    const auto pattern_edges = f.edges();
    const std::uint64_t target = all_edges(pattern_edges.size());
    const auto symmetries = automorphisms(f);

    std::map<Edge, std::vector<std::size_t>> cliques_on_edge;
    for (std::size_t c = 0; c < cu.size(); ++c) {
        const auto& members = cu.clique(c);
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                cliques_on_edge[{members[i], members[j]}].push_back(c);
            }
        }
    }

    struct TraceGroup {
        SubsetMask trace = 0;
        std::uint64_t covers = 0;
        std::vector<std::size_t> cliques;
    };

    ZPair pair;
    for_each_embedding(f, host, [&](std::span<const Vertex> image) {
        // Keep one labeling per copy: the lexicographically smallest under Aut(F).
        for (const auto& sigma : symmetries) {
            for (std::size_t i = 0; i < image.size(); ++i) {
                const Vertex other = image[sigma[i]];
                if (other != image[i]) {
                    if (other < image[i]) {
                        return;
                    }
                    break;
                }
            }
        }
        std::vector<std::size_t> relevant;
        for (const Edge& e : pattern_edges) {
            const Vertex a = std::min(image[e.u], image[e.v]);
            const Vertex b = std::max(image[e.u], image[e.v]);
            const auto& list = cliques_on_edge.at({a, b});
            relevant.insert(relevant.end(), list.begin(), list.end());
        }
        std::sort(relevant.begin(), relevant.end());
        relevant.erase(std::unique(relevant.begin(), relevant.end()), relevant.end());

        std::map<SubsetMask, TraceGroup> by_trace;
        for (std::size_t c : relevant) {
            const auto& members = cu.clique(c);
            SubsetMask trace = 0;
            for (std::size_t i = 0; i < image.size(); ++i) {
                if (std::binary_search(members.begin(), members.end(), image[i])) {
                    trace |= SubsetMask{1} << i;
                }
            }
            auto& group = by_trace[trace];
            group.trace = trace;
            group.covers = edges_inside(pattern_edges, trace);
            group.cliques.push_back(c);
        }
        std::vector<TraceGroup> groups;
        for (auto& [trace, group] : by_trace) {
            groups.push_back(std::move(group));
        }
        if (groups.size() > 40) {
            throw CapabilityError("too many distinct clique traces on one copy");
        }
        pair.copy.assign(image.begin(), image.end());
        pair.cliques.clear();
        // Choose at most one clique per trace; the chosen traces must cover every edge.
        std::vector<std::uint64_t> suffix(groups.size() + 1, 0);
        for (std::size_t i = groups.size(); i-- > 0;) {
            suffix[i] = suffix[i + 1] | groups[i].covers;
        }
        std::function<void(std::size_t, std::uint64_t)> extend = [&](std::size_t i, std::uint64_t covered) {
            if ((covered | suffix[i]) != target) {
                return;
            }
            if (i == groups.size()) {
                visit(pair);
                return;
            }
            extend(i + 1, covered);
            for (std::size_t c : groups[i].cliques) {
                pair.cliques.push_back(c);
                extend(i + 1, covered | groups[i].covers);
                pair.cliques.pop_back();
            }
        };
        extend(0, 0);
    });
}

ZReport count_Z(const Graph& f, const CliqueUnion& cu, bool guarded) {
    ZReport report;
    std::vector<Vertex> last;
    for_each_z_pair(
        f, cu,
        [&](const ZPair& pair) {
            report.z += Count{1};
            if (pair.copy != last) {
                ++report.copies;
                last = pair.copy;
            }
        },
        guarded);
    return report;
}

} // namespace cliquesat
