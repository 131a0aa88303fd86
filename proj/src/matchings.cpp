#include "preclude/matchings.hpp"

#include "preclude/errors.hpp"
#include "preclude/flows.hpp"

#include <algorithm>
#include <string>

namespace preclude {

namespace {

// Shared backtracking core.  Matches the lowest-index unmatched vertex to each
// unmatched neighbor in index order; collects every perfect matching unless
// stop_at_first is set.  Returns false when the cap was hit.
bool backtrack(const Graph& g, const std::vector<char>* removed, std::vector<char>& matched,
               std::vector<int>& current, std::vector<std::vector<int>>& out, long cap,
               bool stop_at_first) {
    int v = -1;
    for (int i = 0; i < g.n; ++i) {
        if (!matched[i]) {
            v = i;
            break;
        }
    }
    if (v < 0) {
        out.push_back(current);
        return !(stop_at_first || static_cast<long>(out.size()) > cap);
    }
    for (int w : g.adj[v]) {
        if (matched[w]) continue;
        const int e = g.edge_index(v, w);
        if (removed && (*removed)[e]) continue;
        matched[v] = matched[w] = 1;
        current.push_back(e);
        const bool keep_going = backtrack(g, removed, matched, current, out, cap, stop_at_first);
        current.pop_back();
        matched[v] = matched[w] = 0;
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

MatchingSet enumerate_perfect_matchings(const Graph& g, long cap) {
    if (g.n % 2 != 0) throw precondition_error("perfect matchings require even order");
    if (cap <= 0) throw precondition_error("matching cap must be positive");
    MatchingSet set;
    set.graph = g;
    if (g.n == 0) {
        set.matchings.push_back({});
        return set;
    }
    std::vector<char> matched(g.n, 0);
    std::vector<int> current;
    if (!backtrack(g, nullptr, matched, current, set.matchings, cap, false)) {
        throw cap_exceeded_error("more than " + std::to_string(cap) +
                                 " perfect matchings (stopped after " +
                                 std::to_string(set.matchings.size()) + ")");
    }
    for (auto& m : set.matchings) std::sort(m.begin(), m.end());
    std::sort(set.matchings.begin(), set.matchings.end());
    return set;
}

std::optional<std::vector<int>> find_perfect_matching(const Graph& g) {
    if (g.n % 2 != 0) return std::nullopt;
    std::vector<char> matched(g.n, 0);
    std::vector<int> current;
    std::vector<std::vector<int>> out;
    backtrack(g, nullptr, matched, current, out, 1, true);
    if (out.empty()) return std::nullopt;
    std::sort(out[0].begin(), out[0].end());
    return out[0];
}

bool pm_exists(const Graph& g) { return find_perfect_matching(g).has_value(); }

bool pm_exists_avoiding(const Graph& g, const std::vector<char>& removed_edges) {
    if (g.n % 2 != 0) return false;
    std::vector<char> matched(g.n, 0);
    std::vector<int> current;
    std::vector<std::vector<int>> out;
    backtrack(g, &removed_edges, matched, current, out, 1, true);
    return !out.empty();
}

std::optional<MinWeightPmResult> EnumerationPmOracle::min_weight_pm(const RationalVector& w) {
    if (static_cast<int>(w.size()) != set_.graph.edge_count()) {
        throw precondition_error("weight vector length mismatch");
    }
    std::optional<MinWeightPmResult> best;
    for (const auto& m : set_.matchings) {  // list is lex-sorted: first minimum wins ties
        Rational weight;
        for (int e : m) weight += w[e];
        if (!best || weight < best->weight) best = MinWeightPmResult{m, std::move(weight)};
    }
    return best;
}

std::optional<MinWeightPmResult> min_weight_perfect_matching(const Graph& g, const RationalVector& w) {
    if (g.n % 2 != 0) throw precondition_error("perfect matchings require even order");
    EnumerationPmOracle oracle(enumerate_perfect_matchings(g));
    return oracle.min_weight_pm(w);
}

SeparationResult separate_fmp(const Graph& g, const RationalVector& y, MinWeightPmOracle& oracle) {
    if (static_cast<int>(y.size()) != g.edge_count()) {
        throw precondition_error("y vector length mismatch");
    }
    SeparationResult res;
    for (int f = 0; f < g.edge_count(); ++f) {
        if (y[f] < 0) {  // Constraint (4) violated: w_f = 1
            res.inequality.assign(g.edge_count(), Rational(0));
            res.inequality[f] = 1;
            res.unit_edge = f;
            return res;
        }
    }
    const auto m0 = oracle.min_weight_pm(y);
    if (!m0) throw precondition_error("separate_fmp requires a graph with a perfect matching");
    if (m0->weight >= 1) {
        res.in_polyhedron = true;
        return res;
    }
    res.inequality.assign(g.edge_count(), Rational(0));
    for (int e : m0->edges) res.inequality[e] = 1;
    res.matching = m0->edges;
    return res;
}

SeparationResult separate_fmp(const Graph& g, const RationalVector& y) {
    if (g.n % 2 != 0) throw precondition_error("perfect matchings require even order");
    EnumerationPmOracle oracle(enumerate_perfect_matchings(g));
    return separate_fmp(g, y, oracle);
}

std::vector<std::vector<int>> pm_partition_regular_bipartite(const Graph& g, const Bipartition& bip) {
    int r = 0;
    try {
        r = regular_degree(g);
    } catch (const precondition_error&) {
        throw precondition_error("pm_partition requires a regular bipartite graph");
    }
    if (r < 1) throw precondition_error("pm_partition requires degree r >= 1");
    for (const auto& [u, v] : g.edges) {
        if (bip.color[u] == bip.color[v]) {
            throw precondition_error("pm_partition requires a regular bipartite graph");
        }
    }

    std::vector<std::vector<int>> parts;
    std::vector<char> used(g.edge_count(), 0);
    for (int round = 0; round < r; ++round) {
        // Extract a perfect matching of the remaining subgraph via the f==1 factor.
        std::vector<int> alive;
        std::vector<std::pair<int, int>> edges;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!used[e]) {
                alive.push_back(e);
                edges.push_back(g.edges[e]);
            }
        }
        const Graph sub = build_graph(g.n, edges);
        const FFactorResult ff = f_factor_exists(sub, bip, std::vector<int>(g.n, 1));
        if (!ff.exists) {
            throw preclude_error("internal error: regular bipartite graph lost its perfect matching");
        }
        std::vector<int> part;
        for (int se : ff.factor_edges) part.push_back(alive[se]);
        std::sort(part.begin(), part.end());
        for (int e : part) used[e] = 1;
        parts.push_back(std::move(part));
    }
    return parts;
}

} // namespace preclude
