#include "preclude/generators.hpp"

#include "preclude/errors.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace preclude {
namespace {

Graph complete_bipartite(long m, long n) {
    std::vector<std::pair<int, int>> edges;
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < n; ++j)
            edges.push_back({static_cast<int>(i), static_cast<int>(m + j)});
    return build_graph(static_cast<int>(m + n), edges);
}

Graph cycle(long len) {
    std::vector<std::pair<int, int>> edges;
    for (long i = 0; i < len; ++i)
        edges.push_back({static_cast<int>(i), static_cast<int>((i + 1) % len)});
    return build_graph(static_cast<int>(len), edges);
}

Graph path(long n) {
    std::vector<std::pair<int, int>> edges;
    for (long i = 0; i + 1 < n; ++i)
        edges.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
    return build_graph(static_cast<int>(n), edges);
}

Graph hypercube(long dim) {
    const long n = 1L << dim;
    std::vector<std::pair<int, int>> edges;
    for (long u = 0; u < n; ++u)
        for (long b = 0; b < dim; ++b) {
            long v = u ^ (1L << b);
            if (u < v) edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        }
    return build_graph(static_cast<int>(n), edges);
}

// Union of r random permutation matchings between sides of size n; a
// permutation that would duplicate an existing edge is redrawn.
Graph random_regular_bipartite(long n, long r, std::uint64_t seed) {
    Lcg rng(seed);
    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    std::vector<std::pair<int, int>> edges;
    std::vector<int> perm(n);
    for (long round = 0; round < r; ++round) {
        bool placed = false;
        for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
            std::iota(perm.begin(), perm.end(), 0);
            for (long i = n - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.next_below(i + 1)]);
            bool clash = false;
            for (long i = 0; i < n && !clash; ++i) clash = used[i][perm[i]];
            if (clash) continue;
            for (long i = 0; i < n; ++i) {
                used[i][perm[i]] = 1;
                edges.push_back({static_cast<int>(i), static_cast<int>(n + perm[i])});
            }
            placed = true;
        }
        if (!placed)
            throw invalid_spec_error(
                "random_regular_bipartite: no parallel-free matching after 1000 "
                "draws; try another seed");
    }
    return build_graph(static_cast<int>(2 * n), edges);
}

Graph random_tree(long n, std::uint64_t seed) {
    Lcg rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (long v = 1; v < n; ++v) {
        int parent = static_cast<int>(rng.next_below(v));
        edges.push_back({parent, static_cast<int>(v)});
    }
    return build_graph(static_cast<int>(n), edges);
}

}  // namespace

GkGraph gen_gk(int k) {
    if (k < 1) throw invalid_spec_error("gk requires k >= 1");
    GkGraph out;
    auto a = [&](int i) { return i; };
    auto b = [&](int i) { return 2 * k + i; };
    auto c = [&](int j) { return 4 * k + j; };
    auto d = [&](int j) { return 5 * k + j; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 2 * k; ++i) edges.push_back({a(i), b(i)});
    for (int i = 0; i < 2 * k; ++i)
        for (int j = 0; j < k; ++j) edges.push_back({a(i), c(j)});
    for (int i = 0; i < 2 * k; ++i)
        for (int j = 0; j < k; ++j) edges.push_back({b(i), d(j)});
    out.graph = build_graph(6 * k, edges);
    for (int i = 0; i < 2 * k; ++i) out.a.push_back(a(i));
    for (int i = 0; i < 2 * k; ++i) out.b.push_back(b(i));
    for (int j = 0; j < k; ++j) out.c.push_back(c(j));
    for (int j = 0; j < k; ++j) out.d.push_back(d(j));
    return out;
}

Graph gen_family(const FamilySpec& spec) {
    const std::vector<long>& p = spec.params;
    auto arity = [&](std::size_t count, const char* names) {
        if (p.size() != count)
            throw invalid_spec_error(spec.family + " takes parameters (" + names + ")");
    };
    auto seed = [&]() {
        if (!spec.seed) throw invalid_spec_error(spec.family + " requires a seed");
        return *spec.seed;
    };

    if (spec.family == "gk") {
        arity(1, "k");
        if (p[0] < 1) throw invalid_spec_error("gk requires k >= 1");
        return gen_gk(static_cast<int>(p[0])).graph;
    }
    if (spec.family == "complete_bipartite") {
        arity(2, "m, n");
        if (p[0] < 1 || p[1] < 1)
            throw invalid_spec_error("complete_bipartite requires m, n >= 1");
        return complete_bipartite(p[0], p[1]);
    }
    if (spec.family == "cycle") {
        arity(1, "length");
        if (p[0] < 3) throw invalid_spec_error("cycle requires length >= 3");
        return cycle(p[0]);
    }
    if (spec.family == "path") {
        arity(1, "vertices");
        if (p[0] < 1) throw invalid_spec_error("path requires >= 1 vertex");
        return path(p[0]);
    }
    if (spec.family == "hypercube") {
        arity(1, "dimension");
        if (p[0] < 1 || p[0] > 20)
            throw invalid_spec_error("hypercube requires 1 <= dimension <= 20");
        return hypercube(p[0]);
    }
    if (spec.family == "random_regular_bipartite") {
        arity(2, "side, degree");
        if (p[0] < 1 || p[1] < 1 || p[1] > p[0])
            throw invalid_spec_error(
                "random_regular_bipartite requires 1 <= degree <= side");
        return random_regular_bipartite(p[0], p[1], seed());
    }
    if (spec.family == "random_tree") {
        arity(1, "vertices");
        if (p[0] < 1) throw invalid_spec_error("random_tree requires >= 1 vertex");
        return random_tree(p[0], seed());
    }
    throw invalid_spec_error("unknown family '" + spec.family + "'");
}

}  // namespace preclude
