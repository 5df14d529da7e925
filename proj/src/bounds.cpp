#include "cliquesat/bounds.hpp"

#include "cliquesat/errors.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace cliquesat {

namespace {

Rational rat(std::size_t value) { return Rational(static_cast<std::int64_t>(value)); }

Rational choose2(std::size_t r) { return rat(r * (r - 1) / 2); }

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw InputError(message);
    }
}

ExponentProfile profile(std::string lead, Rational a, Rational b, std::string description) {
    ExponentProfile p;
    p.lead = std::move(lead);
    p.lead_exponent = a;
    p.n_exponent = b;
    p.description = std::move(description);
    return p;
}

} // namespace

Rational two_density(std::size_t vertices, std::size_t edges) {
    require(vertices >= 3, "2-density needs at least 3 vertices");
    return Rational(static_cast<std::int64_t>(edges) - 1, static_cast<std::int64_t>(vertices) - 2);
}

BalanceVerdict check_2_balanced(const Graph& f) {
    const std::size_t v = f.vertex_count();
    if (v > kMaxBalanceVertices) {
        throw CapabilityError("2-balancedness scan supports at most " + std::to_string(kMaxBalanceVertices) +
                              " vertices");
    }
    require(f.edge_count() >= 1, "2-balancedness needs at least one edge");
    require(v >= 3, "2-balancedness needs at least 3 vertices");
    BalanceVerdict verdict;
    verdict.density = two_density(v, f.edge_count());
    for (std::uint32_t mask = 1; mask < (1U << v); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size < 3 || size == v) {
            continue;
        }
        VertexSet members;
        for (Vertex x = 0; x < v; ++x) {
            if (((mask >> x) & 1U) != 0) {
                members.push_back(x);
            }
        }
        const Rational d = two_density(size, f.induced(members).edge_count());
        if (d > verdict.density && (verdict.balanced || d > verdict.witness_density)) {
            verdict.balanced = false;
            verdict.witness = members;
            verdict.witness_density = d;
        }
    }
    return verdict;
}

bool is_2_balanced(const Graph& f) { return check_2_balanced(f).balanced; }

long double ExponentProfile::log_value(long double lead_value, long double n, long double multiplier) const {
    return std::log(multiplier) + to_real(lead_exponent) * std::log(lead_value) + to_real(n_exponent) * std::log(n);
}

long double ExponentProfile::value(long double lead_value, long double n, long double multiplier) const {
    return std::exp(log_value(lead_value, n, multiplier));
}

std::string ExponentProfile::formula() const {
    std::ostringstream out;
    out << lead << "^(" << to_string(lead_exponent) << ") n^(" << to_string(n_exponent) << ")";
    return out.str();
}

Rational beta_exponent(std::size_t vertices, std::size_t edges, std::size_t r) {
    require(edges >= 2, "beta needs e(F) >= 2");
    require(r >= 2 && r < vertices, "beta needs 2 <= r < v(F)");
    const auto v = static_cast<std::int64_t>(vertices);
    const auto e = static_cast<std::int64_t>(edges);
    const auto rr = static_cast<std::int64_t>(r);
    return Rational(v - 2, (rr - 2) * (e - 1) + v - 2);
}

Rational beta_exponent(const Graph& f, std::size_t r) {
    return beta_exponent(f.vertex_count(), f.edge_count(), r);
}

bool beta_beats_gnp(std::size_t vertices, std::size_t edges, std::size_t r) {
    return beta_exponent(vertices, edges, r) > Rational(1) / choose2(r);
}

bool density_beats_gnp(std::size_t vertices, std::size_t edges, std::size_t r) {
    require(r >= 3 && vertices >= 3, "density comparison needs r, v(F) >= 3");
    return Rational(static_cast<std::int64_t>(r) + 1, 2) > two_density(vertices, edges);
}

std::pair<Rational, Rational> thm11_crossover_exponents(std::size_t r, std::size_t t) {
    require(t >= 2 && r > 2 && r < 2 + t, "K_{2,t} bound needs t >= 2 and 2 < r < 2 + t");
    const Rational x(static_cast<std::int64_t>(r) - 2, 2 * static_cast<std::int64_t>(t));
    const auto tt = static_cast<std::int64_t>(t);
    const auto rr = static_cast<std::int64_t>(r) - 2;
    const Rational denom = Rational((2 * tt - 1) * rr + tt);
    const Rational first = x * Rational(tt, rr) + Rational(3, 2);
    const Rational second = x * Rational(2 * tt * tt) / denom + Rational((3 * tt - 2) * rr + 2 * tt) / denom;
    return {first, second};
}

Thm11Result thm11_lower(long double k, long double n, std::size_t r, std::size_t t) {
    require(t >= 2, "K_{2,t} bound needs t >= 2");
    require(r > 2 && r < 2 + t, "K_{2,t} bound needs 2 < r < 2 + t");
    require(k >= 1, "K_{2,t} bound needs k >= 1");
    require(n >= 1, "K_{2,t} bound needs n >= 1");
    const auto tt = static_cast<std::int64_t>(t);
    const auto rr = static_cast<std::int64_t>(r) - 2;
    const std::int64_t denom = (2 * tt - 1) * rr + tt;
    Thm11Result out;
    out.first = profile("k", Rational(tt, rr), Rational(3, 2), "many-edges branch");
    out.second = profile("k", Rational(2 * tt * tt, denom), Rational((3 * tt - 2) * rr + 2 * tt, denom),
                         "common-neighbor branch");
    out.log_first = out.first.log_value(k, n);
    out.log_second = out.second.log_value(k, n);
    out.regime = out.log_first <= out.log_second ? 1 : 2;
    out.value = std::exp(std::min(out.log_first, out.log_second));
    out.crossover_exponent = Rational(rr, 2 * tt);
    out.crossover = std::pow(n, to_real(out.crossover_exponent));
    const long double at_first = out.first.log_value(out.crossover, n);
    const long double at_second = out.second.log_value(out.crossover, n);
    // Relative agreement of the values is the absolute gap of their logs.
    if (std::fabs(at_first - at_second) > 1e-9L) {
        throw InternalError("K_{2,t} branches disagree at the crossover");
    }
    return out;
}

long double real_binomial(long double x, std::size_t k) {
    long double value = 1;
    for (std::size_t i = 0; i < k; ++i) {
        value *= (x - static_cast<long double>(i)) / static_cast<long double>(i + 1);
    }
    return value;
}

long double kruskal_katona_bound(Count cliques, std::size_t r, std::size_t s) {
    require(r >= 1, "Kruskal-Katona bound needs r >= 1");
    require(s <= r, "Kruskal-Katona bound needs s <= r");
    require(cliques >= Count{1}, "Kruskal-Katona bound needs N >= 1");
    const long double target = cliques.to_long_double();
    long double lo = static_cast<long double>(r);
    long double hi = lo + 1;
    while (real_binomial(hi, r) < target) {
        hi = 2 * hi;
    }
    while (hi - lo > 1e-9L * std::max(1.0L, hi)) {
        const long double mid = (lo + hi) / 2;
        (real_binomial(mid, r) < target ? lo : hi) = mid;
    }
    const long double x = (lo + hi) / 2;
    const auto nearest = static_cast<std::uint64_t>(std::llround(x));
    if (nearest >= r && binomial(nearest, r) == cliques) {
        return binomial(nearest, s).to_long_double();
    }
    return real_binomial(x, s);
}

ExponentProfile eskst_bound(std::size_t s, std::size_t t) {
    require(s >= 1 && s <= t, "K_{s,t} supersaturation needs 1 <= s <= t");
    return profile("k", rat(s * t), rat(s), "copies of K_{s,t} when e(G) = k n^{2-1/s}");
}

ExponentProfile gnp_baseline(std::size_t vertices, std::size_t edges, std::size_t r) {
    require(r >= 2, "G(n,p) baseline needs r >= 2");
    const Rational a = rat(edges) / choose2(r);
    return profile("N", a, rat(vertices) - rat(r) * a, "expected copies in G(n,p) with N copies of K_r");
}

ExponentProfile thm12_bound(const Graph& f, std::size_t r) {
    require(is_2_balanced(f), "random-clique bound needs a 2-balanced F");
    const Rational a = rat(f.edge_count()) * beta_exponent(f, r);
    return profile("N", a, rat(f.vertex_count()) - rat(r) * a, "random-clique upper bound");
}

ExponentProfile thm12_normalized(const Graph& f, std::size_t r, Rational alpha) {
    auto p = thm12_bound(f, r);
    p.n_exponent += alpha * p.lead_exponent;
    p.lead = "k";
    p.description += " with N = k n^" + to_string(alpha);
    return p;
}

bool lemma41_gate(std::size_t r, std::size_t s, std::size_t t) {
    require(s >= 2 && s <= t, "clique-union K_{s,t} bound needs 2 <= s <= t");
    const auto ss = static_cast<std::int64_t>(s);
    const auto ts = static_cast<std::int64_t>(t);
    return rat(r) <= Rational(2 * ss * ts - ss - ts, ss + ts - 2);
}

void require_lemma41_gate(std::size_t r, std::size_t s, std::size_t t) {
    if (!lemma41_gate(r, s, t)) {
        throw InputError("violated r <= (2st - s - t)/(s + t - 2): r = " + std::to_string(r) +
                         ", bound = " +
                         to_string(Rational(static_cast<std::int64_t>(2 * s * t - s - t),
                                            static_cast<std::int64_t>(s + t - 2))));
    }
}

Lemma41Value lemma41_bound(long double u, long double m, long double n, std::size_t r, std::size_t s,
                           std::size_t t) {
    require_lemma41_gate(r, s, t);
    require(u > 0 && m > 0 && n > 0, "clique-union bound needs positive u, m, n");
    Lemma41Value out;
    out.profile = profile("k", rat(s * t) / choose2(r), rat(s), "copies of K_{s,t} in a union of cliques");
    const Rational n_power = rat(r) - choose2(r) / rat(s);
    out.k = std::exp(std::log(u) + static_cast<long double>(r) * std::log(m) - to_real(n_power) * std::log(n));
    out.log_value = out.profile.log_value(out.k, n);
    return out;
}

Rational thm14_exponent(const Graph& f, std::size_t r) {
    require(f.edge_count() >= 2, "clique Turan bound needs e(F) >= 2");
    require(r >= 2 && r < f.vertex_count(), "clique Turan bound needs 2 <= r < v(F)");
    require(is_2_balanced(f), "clique Turan bound needs a 2-balanced F");
    return Rational(2) - Rational(static_cast<std::int64_t>(f.vertex_count()) - 2,
                                  static_cast<std::int64_t>(f.edge_count()) - 1);
}

ExponentProfile prop15_bound(std::size_t tree_vertices, std::size_t r) {
    require(r >= 2 && r < tree_vertices, "tree bound needs 2 <= r < v(T)");
    return profile("k", Rational(static_cast<std::int64_t>(tree_vertices) - 1, static_cast<std::int64_t>(r) - 1),
                   Rational(1), "copies of a tree when N(K_r, G) = k n");
}

ConjectureValue conj_rhs(const std::string& name, std::size_t r, std::size_t s, std::size_t t,
                         long double epsilon) {
    ConjectureValue out;
    out.epsilon = epsilon;
    if (name == "k2t") {
        require(t >= 2, "k2t needs t >= 2");
        out.profile = profile("k", rat(t), Rational(3, 2), "conjectured K_{2,t} count with k n^{3/2} triangles, n-exponent + eps");
        out.epsilon_sign = 1;
    } else if (name == "kst") {
        require(r >= 2 && r <= s && s <= t, "kst needs 2 <= r <= s <= t");
        out.profile = profile("k", rat(s * t) / choose2(r), rat(s), "conjectured K_{s,t} count, n-exponent - eps");
        out.epsilon_sign = -1;
    } else if (name == "k3t") {
        require(t >= 3, "k3t needs t >= 3");
        out.profile = profile("k", rat(t), Rational(3), "conjectured K_{3,t} count with k n^2 triangles, n-exponent - eps");
        out.epsilon_sign = -1;
    } else {
        throw InputError("unknown conjecture '" + name + "' (expected k2t, kst or k3t)");
    }
    return out;
}

} // namespace cliquesat
