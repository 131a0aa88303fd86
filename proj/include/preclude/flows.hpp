// Exact-rational maximum flow (augmenting shortest paths), minimum cut,
// feasible circulation with lower bounds (Hoffman), and bipartite
// f-factor / k-factor decision procedures via flow reductions.
#pragma once

#include "preclude/graph.hpp"
#include "preclude/rational.hpp"

#include <optional>
#include <vector>

namespace preclude {

struct Arc {
    int tail = 0;
    int head = 0;
    Rational lower;
    Rational capacity;
};

struct FlowNetwork {
    int node_count = 0;
    std::vector<Arc> arcs;
    std::optional<int> source;
    std::optional<int> sink;

    void add_arc(int tail, int head, Rational capacity) {
        arcs.push_back({tail, head, Rational(0), std::move(capacity)});
    }
    void add_arc(int tail, int head, Rational lower, Rational capacity) {
        arcs.push_back({tail, head, std::move(lower), std::move(capacity)});
    }
};

struct FlowAssignment {
    RationalVector flow;  // one value per arc, in arc order
};

struct MaxFlowResult {
    Rational value;
    FlowAssignment flow;
    std::vector<int> min_cut_side;  // residual-reachable nodes, ascending; contains source
};

// Edmonds-Karp with exact rationals.  Requires source/sink set and all arc
// lower bounds zero; the returned cut capacity equals the flow value.
MaxFlowResult max_flow(const FlowNetwork& net);

struct CirculationResult {
    bool feasible = false;
    FlowAssignment flow;             // when feasible: lower <= flow <= capacity, zero excess everywhere
    std::vector<int> violating_set;  // when infeasible: R with c(V\R, R) < l(R, V\R)
};

// Hoffman's circulation theorem, made constructive by the standard reduction
// to max flow through a super source/sink absorbing the lower bounds.
CirculationResult feasible_circulation(const FlowNetwork& net);

struct FFactorResult {
    bool exists = false;
    bool degree_sum_mismatch = false;  // condition (i) failed: sum f over A != sum f over B
    std::vector<int> factor_edges;     // when exists: edge ids with degree f(v) at every v
    std::vector<int> witness_x;        // when not: X subseteq A, Y subseteq B with
    std::vector<int> witness_y;        //   f(X) > e(X,Y) + f(B\Y)
};

// Ore / Folkman-Fulkerson f-factor test for bipartite graphs, via the flow
// network source->a (cap f(a)), unit arcs on edges A->B, b->sink (cap f(b)).
FFactorResult f_factor_exists(const Graph& g, const Bipartition& bip, const std::vector<int>& f);

// Largest k with a k-factor, by upward scan bounded by the minimum degree.
int max_k_factor(const Graph& g, const Bipartition& bip);

} // namespace preclude
