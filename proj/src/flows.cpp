#include "preclude/flows.hpp"

#include "preclude/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace preclude {

namespace {

void validate(const FlowNetwork& net) {
    for (const Arc& a : net.arcs) {
        if (a.tail < 0 || a.tail >= net.node_count || a.head < 0 || a.head >= net.node_count) {
            throw precondition_error("arc endpoint out of range");
        }
        if (a.tail == a.head) throw precondition_error("self-loop arc");
        if (a.lower < 0 || a.capacity < 0 || a.lower > a.capacity) {
            throw precondition_error("arc requires 0 <= lower <= capacity");
        }
    }
}

// Residual graph: arc i maps to residual edges 2i (forward) and 2i+1 (back).
struct Residual {
    std::vector<std::vector<int>> out;  // node -> residual edge ids
    std::vector<int> to;
    RationalVector cap;

    Residual(int n, const std::vector<Arc>& arcs, const RationalVector& forward_cap)
        : out(n) {
        to.reserve(2 * arcs.size());
        cap.reserve(2 * arcs.size());
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            out[arcs[i].tail].push_back(static_cast<int>(to.size()));
            to.push_back(arcs[i].head);
            cap.push_back(forward_cap[i]);
            out[arcs[i].head].push_back(static_cast<int>(to.size()));
            to.push_back(arcs[i].tail);
            cap.push_back(Rational(0));
        }
    }

    // BFS from s; pred[v] = residual edge entering v, or -1.
    std::vector<int> bfs(int s) const {
        std::vector<int> pred(out.size(), -1);
        std::vector<char> seen(out.size(), 0);
        seen[s] = 1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int e : out[v]) {
                if (cap[e] > 0 && !seen[to[e]]) {
                    seen[to[e]] = 1;
                    pred[to[e]] = e;
                    queue.push_back(to[e]);
                }
            }
        }
        return pred;
    }
};

// Core Edmonds-Karp; returns (value, per-arc flow, residual-reachable set).
MaxFlowResult run_max_flow(int n, const std::vector<Arc>& arcs, const RationalVector& forward_cap,
                           int s, int t) {
    Residual r(n, arcs, forward_cap);
    Rational value;
    for (;;) {
        const std::vector<int> pred = r.bfs(s);
        if (pred[t] < 0) break;
        Rational push;
        bool first = true;
        for (int v = t; v != s; v = r.to[pred[v] ^ 1]) {
            const Rational& c = r.cap[pred[v]];
            if (first || c < push) push = c;
            first = false;
        }
        for (int v = t; v != s; v = r.to[pred[v] ^ 1]) {
            r.cap[pred[v]] -= push;
            r.cap[pred[v] ^ 1] += push;
        }
        value += push;
    }
    MaxFlowResult res;
    res.value = std::move(value);
    res.flow.flow.resize(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) res.flow.flow[i] = r.cap[2 * i + 1];
    const std::vector<int> pred = r.bfs(s);
    for (int v = 0; v < n; ++v) {
        if (v == s || pred[v] >= 0) res.min_cut_side.push_back(v);
    }
    return res;
}

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
    validate(net);
    if (!net.source || !net.sink) throw precondition_error("max_flow: missing terminals");
    if (*net.source == *net.sink) throw precondition_error("max_flow: source equals sink");
    for (const Arc& a : net.arcs) {
        if (a.lower != 0) throw precondition_error("max_flow requires zero lower bounds");
    }
    RationalVector caps(net.arcs.size());
    for (std::size_t i = 0; i < net.arcs.size(); ++i) caps[i] = net.arcs[i].capacity;
    return run_max_flow(net.node_count, net.arcs, caps, *net.source, *net.sink);
}

CirculationResult feasible_circulation(const FlowNetwork& net) {
    validate(net);
    const int n = net.node_count;
    const int s = n, t = n + 1;

    // Standard reduction: send l through every arc, then repair the excesses
    // b(v) = l(in(v)) - l(out(v)) with a super source/sink over caps c - l.
    std::vector<Arc> arcs;
    RationalVector caps;
    for (const Arc& a : net.arcs) {
        arcs.push_back({a.tail, a.head, Rational(0), Rational(0)});
        caps.push_back(a.capacity - a.lower);
    }
    RationalVector excess(n, Rational(0));
    for (const Arc& a : net.arcs) {
        excess[a.head] += a.lower;
        excess[a.tail] -= a.lower;
    }
    Rational need;
    for (int v = 0; v < n; ++v) {
        if (excess[v] > 0) {
            arcs.push_back({s, v, Rational(0), Rational(0)});
            caps.push_back(excess[v]);
            need += excess[v];
        } else if (excess[v] < 0) {
            arcs.push_back({v, t, Rational(0), Rational(0)});
            caps.push_back(-excess[v]);
        }
    }

    const MaxFlowResult mf = run_max_flow(n + 2, arcs, caps, s, t);
    CirculationResult out;
    if (mf.value == need) {
        out.feasible = true;
        out.flow.flow.resize(net.arcs.size());
        for (std::size_t i = 0; i < net.arcs.size(); ++i) {
            out.flow.flow[i] = net.arcs[i].lower + mf.flow.flow[i];
        }
        return out;
    }
    // Violating set: R = original nodes outside the min-cut source side; then
    // c(V\R, R) < l(R, V\R) follows from the deficient cut.
    std::vector<char> in_cut(n + 2, 0);
    for (int v : mf.min_cut_side) in_cut[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (!in_cut[v]) out.violating_set.push_back(v);
    }
    return out;
}

FFactorResult f_factor_exists(const Graph& g, const Bipartition& bip, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != g.n) throw precondition_error("f vector length mismatch");
    for (int v : f) {
        if (v < 0) throw precondition_error("f must be nonnegative");
    }
    for (const auto& [u, v] : g.edges) {
        if (bip.color[u] == bip.color[v]) throw precondition_error("graph is not bipartite");
    }

    FFactorResult res;
    long sum_a = 0, sum_b = 0;
    for (int v : bip.side_a) sum_a += f[v];
    for (int v : bip.side_b) sum_b += f[v];
    if (sum_a != sum_b) {
        res.degree_sum_mismatch = true;
        return res;
    }

    // source -> a (cap f(a)); a -> b per edge (cap 1); b -> sink (cap f(b)).
    const int s = g.n, t = g.n + 1;
    std::vector<Arc> arcs;
    RationalVector caps;
    for (int a : bip.side_a) {
        arcs.push_back({s, a, Rational(0), Rational(0)});
        caps.push_back(Rational(f[a]));
    }
    std::vector<int> edge_arc(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        if (!bip.in_a(u)) std::swap(u, v);
        edge_arc[e] = static_cast<int>(arcs.size());
        arcs.push_back({u, v, Rational(0), Rational(0)});
        caps.push_back(Rational(1));
    }
    for (int b : bip.side_b) {
        arcs.push_back({b, t, Rational(0), Rational(0)});
        caps.push_back(Rational(f[b]));
    }

    const MaxFlowResult mf = run_max_flow(g.n + 2, arcs, caps, s, t);
    if (mf.value == sum_a) {
        res.exists = true;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (mf.flow.flow[edge_arc[e]] == 1) res.factor_edges.push_back(e);
        }
        return res;
    }
    // Deficient cut S: with X = A cap S and Y = B \ S the cut capacity bound
    // gives f(X) > e(X,Y) + f(B\Y).
    std::vector<char> in_cut(g.n + 2, 0);
    for (int v : mf.min_cut_side) in_cut[v] = 1;
    for (int a : bip.side_a) {
        if (in_cut[a]) res.witness_x.push_back(a);
    }
    for (int b : bip.side_b) {
        if (!in_cut[b]) res.witness_y.push_back(b);
    }
    return res;
}

int max_k_factor(const Graph& g, const Bipartition& bip) {
    if (g.n == 0) return 0;
    const int bound = min_degree(g);
    int best = 0;
    for (int k = 1; k <= bound; ++k) {
        std::vector<int> f(g.n, k);
        if (!f_factor_exists(g, bip, f).exists) break;
        best = k;
    }
    return best;
}

} // namespace preclude
