#include "cliquesat/constructions.hpp"

#include "cliquesat/bounds.hpp"
#include "cliquesat/counters.hpp"
#include "cliquesat/covers.hpp"
#include "cliquesat/errors.hpp"
#include "cliquesat/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace cliquesat {

namespace {

// Below this inclusion probability the binomial count is drawn as Poisson(u).
constexpr double kPoissonThreshold = 0x1.0p-40;

// ceil that forgives floating noise just above an integer, e.g. pow(16, 1.5).
std::size_t ceil_tolerant(long double x) {
    return static_cast<std::size_t>(std::ceil(x - 1e-9L));
}

// Uniform m-subset of {0..n-1} by Floyd's algorithm, sorted.
VertexSet random_subset(Rng& rng, std::size_t n, std::size_t m) {
    std::set<Vertex> chosen;
    for (std::size_t j = n - m; j < n; ++j) {
        const auto pick = static_cast<Vertex>(rng.below(j + 1));
        if (!chosen.insert(pick).second) {
            chosen.insert(static_cast<Vertex>(j));
        }
    }
    return {chosen.begin(), chosen.end()};
}

} // namespace

RandomCliqueSample sample_random_clique_graph(const RandomCliqueParams& params) {
    const std::size_t n = params.n;
    const std::size_t m = params.m;
    if (m < 2 || m > n) {
        throw InputError("random clique graph needs 2 <= m <= n");
    }
    if (!(params.u >= 0) || !std::isfinite(params.u)) {
        throw InputError("random clique graph needs finite u >= 0");
    }
    RandomCliqueSample sample;
    const Count subsets = binomial(n, m);
    const long double total = subsets.to_long_double();
    sample.saturated = params.u >= total;
    sample.p = sample.saturated ? 1.0 : static_cast<double>(params.u / total);
    Rng rng(params.seed);
    std::vector<VertexSet> cliques;

    if (subsets <= Count{kExhaustiveSubsetLimit}) {
        sample.exhaustive = true;
        VertexSet s(m);
        std::iota(s.begin(), s.end(), Vertex{0});
        while (true) {
            if (rng.bernoulli(sample.p)) {
                cliques.push_back(s);
            }
            std::size_t i = m;
            while (i > 0 && s[i - 1] == n - m + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++s[i - 1];
            for (std::size_t j = i; j < m; ++j) {
                s[j] = s[j - 1] + 1;
            }
        }
    } else {
        std::uint64_t k = 0;
        if (sample.p < kPoissonThreshold) {
            std::poisson_distribution<std::uint64_t> draw(params.u);
            k = params.u > 0 ? draw(rng.engine()) : 0;
        } else {
            if (subsets > Count{static_cast<std::uint64_t>(INT64_MAX)}) {
                throw CapabilityError("C(n, m) too large for the binomial sampler at this p");
            }
            std::binomial_distribution<std::int64_t> draw(static_cast<std::int64_t>(subsets.to_u64()), sample.p);
            k = static_cast<std::uint64_t>(draw(rng.engine()));
        }
        std::set<VertexSet> chosen;
        const std::uint64_t budget = 100 * std::max<std::uint64_t>(k, 1);
        std::uint64_t attempts = 0;
        while (chosen.size() < k) {
            if (++attempts > budget) {
                throw InputError("rejection sampling of distinct subsets exceeded its retry budget");
            }
            chosen.insert(random_subset(rng, n, m));
        }
        cliques.assign(chosen.begin(), chosen.end());
    }
    sample.cliques = CliqueUnion(n, m, std::move(cliques));
    return sample;
}

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0 && p <= 1)) {
        throw InputError("G(n,p) needs 0 <= p <= 1");
    }
    Rng rng(seed);
    GraphBuilder builder(n);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (rng.bernoulli(p)) {
                builder.add_edge(a, b);
            }
        }
    }
    return std::move(builder).build();
}

Graph disjoint_cliques(std::size_t count, std::size_t size) {
    if (count < 1 || size < 1) {
        throw InputError("disjoint cliques need count, size >= 1");
    }
    GraphBuilder builder(count * size);
    VertexSet block(size);
    for (std::size_t i = 0; i < count; ++i) {
        std::iota(block.begin(), block.end(), static_cast<Vertex>(i * size));
        builder.add_clique(block);
    }
    return std::move(builder).build();
}

Graph clique_graph(const BipartiteGraph& b) {
    GraphBuilder builder(b.v_size());
    for (Vertex u = 0; u < b.u_size(); ++u) {
        builder.add_clique(b.u_neighbors(u));
    }
    return std::move(builder).build();
}

PruneResult prune_high_degree(const BipartiteGraph& b, const PruneParams& params) {
    if (params.degree_cap < 1) {
        throw InputError("degree cap must be at least 1");
    }
    PruneResult result;
    for (Vertex u = 0; u < b.u_size(); ++u) {
        if (b.u_degree(u) <= params.degree_cap) {
            result.kept_u.push_back(u);
        }
    }
    result.pruned = b.restrict_u(result.kept_u);
    result.edges_before = b.edge_count();
    result.edges_after = result.pruned.edge_count();
    result.kept_majority = 2 * result.edges_after > result.edges_before;
    return result;
}

FFreeResult build_f_free_clique_graph(std::size_t n, std::size_t r, const Graph& f, double alpha,
                                      std::uint64_t seed) {
    if (f.edge_count() < 2) {
        throw InputError("F-free construction needs e(F) >= 2");
    }
    if (r < 2 || r >= f.vertex_count()) {
        throw InputError("F-free construction needs 2 <= r < v(F)");
    }
    if (!is_2_balanced(f)) {
        throw InputError("F-free construction needs a 2-balanced F");
    }
    if (!(alpha >= 0)) {
        throw InputError("F-free construction needs alpha >= 0");
    }
    if (n < r) {
        throw InputError("F-free construction needs n >= r");
    }
    FFreeResult result;
    auto& report = result.report;
    report.m = r;
    const long double exponent =
        2.0L - static_cast<long double>(f.vertex_count() - 2) / static_cast<long double>(f.edge_count() - 1);
    report.u = static_cast<double>(2.0L * std::pow(static_cast<long double>(n) / static_cast<long double>(r), exponent));
    report.sampled_u = alpha * report.u;

    const auto sample = sample_random_clique_graph({n, r, report.sampled_u, seed});
    report.saturated = sample.saturated;
    report.initial_cliques = sample.cliques.size();

    std::vector<bool> removed(sample.cliques.size(), false);
    // The deletion argument needs every pair, so the small-instance guard is off here.
    for_each_z_pair(
        f, sample.cliques,
        [&](const ZPair& pair) {
            report.pairs += Count{1};
            const bool hit = std::any_of(pair.cliques.begin(), pair.cliques.end(),
                                         [&](std::size_t c) { return removed[c]; });
            if (!hit) {
                removed[pair.cliques.front()] = true;
            }
        },
        false);
    for (std::size_t c = 0; c < removed.size(); ++c) {
        if (removed[c]) {
            report.removed.push_back(c);
        }
    }
    result.cliques = sample.cliques.without(report.removed);
    report.final_cliques = result.cliques.size();

    const Graph host = union_graph(result.cliques);
    if (count_subgraph(f, host) != Count{0}) {
        std::ostringstream witness;
        bool first = true;
        for_each_embedding(f, host, [&](std::span<const Vertex> image) {
            if (first) {
                for (Vertex v : image) {
                    witness << ' ' << v;
                }
                first = false;
            }
        });
        throw InternalError("F-free construction left a copy of F at vertices" + witness.str());
    }
    return result;
}

SearchStrategy parse_strategy(const std::string& name) {
    if (name == "random_order") {
        return SearchStrategy::random_order;
    }
    if (name == "degree_balanced") {
        return SearchStrategy::degree_balanced;
    }
    throw InputError("unknown search strategy '" + name + "' (expected random_order or degree_balanced)");
}

std::string to_string(SearchStrategy strategy) {
    return strategy == SearchStrategy::random_order ? "random_order" : "degree_balanced";
}

PathSearchResult search_path_bounded_bipartite(std::size_t m, std::size_t n, std::size_t ell,
                                               std::size_t edge_target, std::uint64_t seed,
                                               SearchStrategy strategy) {
    if (ell < 1) {
        throw InputError("path bound ell must be at least 1");
    }
    PathSearchResult result;
    result.edge_target = edge_target;
    PathCounter counter(m, n);
    Rng rng(seed);
    const auto shuffle = [&](auto& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[rng.below(i)]);
        }
    };
    // Path counts only grow with the edge set, so a rejected pair never becomes
    // acceptable later; each pair needs at most one proposal.
    if (strategy == SearchStrategy::random_order) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        pairs.reserve(m * n);
        for (Vertex u = 0; u < m; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                pairs.emplace_back(u, v);
            }
        }
        shuffle(pairs);
        for (const auto& [u, v] : pairs) {
            if (counter.edge_count() >= edge_target) {
                break;
            }
            ++result.proposals;
            counter.try_add_edge(u, v, ell);
        }
    } else {
        std::vector<std::vector<Vertex>> untried(m);
        for (auto& list : untried) {
            list.resize(n);
            std::iota(list.begin(), list.end(), Vertex{0});
            shuffle(list);
        }
        std::vector<Vertex> order(m);
        std::iota(order.begin(), order.end(), Vertex{0});
        bool progress = true;
        while (progress && counter.edge_count() < edge_target) {
            progress = false;
            shuffle(order);
            for (Vertex u : order) {
                if (counter.edge_count() >= edge_target) {
                    break;
                }
                // Propose until one edge sticks or the candidates run out.
                while (!untried[u].empty()) {
                    const Vertex v = untried[u].back();
                    untried[u].pop_back();
                    ++result.proposals;
                    progress = true;
                    if (counter.try_add_edge(u, v, ell)) {
                        break;
                    }
                }
            }
        }
    }
    result.graph = counter.graph();
    result.reached_target = result.graph.edge_count() >= edge_target;
    return result;
}

Count k2t_clique_graph_cap(std::size_t ell, std::size_t d, std::size_t t, std::size_t u_size) {
    Count cap{u_size};
    for (std::size_t i = 0; i < 2 * t; ++i) {
        cap *= Count{ell};
    }
    for (std::size_t i = 0; i < 2 + t; ++i) {
        cap *= Count{d};
    }
    return cap;
}

Lemma37Result lemma37_construction(const Lemma37Params& params) {
    if (params.ell < 2 || params.t <= params.ell) {
        throw InputError("construction needs t > ell >= 2");
    }
    if (params.r < 3) {
        throw InputError("construction needs r >= 3");
    }
    const Rational eps_max(static_cast<std::int64_t>(params.r) - 2, 2 * static_cast<std::int64_t>(params.t));
    if (params.epsilon < Rational(0) || params.epsilon > eps_max) {
        throw InputError("construction needs 0 <= eps <= (r-2)/(2t) = " + to_string(eps_max));
    }
    if (params.n < 1 || !(params.c > 0) || !(params.d > 0)) {
        throw InputError("construction needs n >= 1 and positive c, D");
    }
    const long double n = static_cast<long double>(params.n);
    const long double eps = to_real(params.epsilon);
    Lemma37Result result;
    auto& report = result.report;
    report.u_size = ceil_tolerant(std::pow(n, 1.5L - 2 * eps));
    report.edge_target = ceil_tolerant(2.0L * params.c * std::pow(n, 1.5L - eps));
    report.degree_cap = std::max<std::size_t>(1, ceil_tolerant(params.d * params.ell * std::pow(n, eps)));

    const auto search = search_path_bounded_bipartite(report.u_size, params.n, params.ell, report.edge_target,
                                                      params.seed, params.strategy);
    report.edges_found = search.graph.edge_count();
    const auto pruned = prune_high_degree(search.graph, PruneParams{report.degree_cap});
    report.pruned_u_size = pruned.pruned.u_size();
    report.edges_after_prune = pruned.edges_after;
    report.kept_majority = pruned.kept_majority;
    report.max_u_degree = pruned.pruned.max_u_degree();
    report.multiplicity = path_multiplicity(pruned.pruned);

    result.bipartite = pruned.pruned;
    result.graph = clique_graph(result.bipartite);
    report.cliques = count_cliques(result.graph, params.r);
    report.k2t = count_complete_bipartite(result.graph, 2, params.t);
    report.k2t_cap = k2t_clique_graph_cap(params.ell, report.max_u_degree, params.t, report.pruned_u_size);
    return result;
}

} // namespace cliquesat
