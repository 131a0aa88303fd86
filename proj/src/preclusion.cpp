#include "preclude/preclusion.hpp"

#include "preclude/errors.hpp"
#include "preclude/flows.hpp"
#include "preclude/lp.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace preclude {
namespace {

void require_even_order(const Graph& g) {
    if (g.n == 0) throw precondition_error("graph has no vertices");
    if (g.n % 2 != 0)
        throw precondition_error("graph has odd order " + std::to_string(g.n));
}

void require_proper_bipartition(const Graph& g, const Bipartition& bip) {
    if (static_cast<int>(bip.color.size()) != g.n)
        throw precondition_error("bipartition does not match the graph");
    for (auto [u, v] : g.edges)
        if (bip.color[u] == bip.color[v])
            throw precondition_error("bipartition is not proper: edge {" +
                                     std::to_string(u) + "," + std::to_string(v) +
                                     "} stays inside one side");
}

// min 1.y (or plain LP when binary is false) subject to y(M) >= 1 per matching.
LinearProgram covering_program(int num_edges,
                               const std::vector<std::vector<int>>& matchings,
                               bool binary) {
    LinearProgram lp(num_edges, Sense::Minimize);
    for (int j = 0; j < num_edges; ++j) {
        lp.objective[j] = 1;
        if (binary) {
            lp.integral[j] = 1;
            lp.upper[j] = Rational(1);
        }
    }
    for (const auto& m : matchings) {
        RationalVector row(num_edges, Rational(0));
        for (int e : m) row[e] = 1;
        lp.add_row(std::move(row), Relation::GreaterEq, Rational(1));
    }
    return lp;
}

const char* status_name(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "?";
}

LpSolution solved_or_throw(const LinearProgram& lp, const char* what, bool via_auto) {
    LpSolution sol = via_auto ? solve_lp_auto(lp) : solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
        throw preclude_error(std::string(what) + " unexpectedly " + status_name(sol.status));
    return sol;
}

// Number of edge subsets mp_exhaustive would visit; used to keep the optional
// cross-check from running away.
bool exhaustive_budget_ok(int m, long k) {
    double total = 0, binom = 1;
    for (long s = 0; s <= k; ++s) {
        total += binom;
        if (total > 2e6) return false;
        binom = binom * static_cast<double>(m - s) / static_cast<double>(s + 1);
    }
    return true;
}

int edges_between(const Graph& g, const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<char> on_x(g.n, 0), on_y(g.n, 0);
    for (int v : x) on_x[v] = 1;
    for (int v : y) on_y[v] = 1;
    int count = 0;
    for (auto [u, v] : g.edges)
        if ((on_x[u] && on_y[v]) || (on_x[v] && on_y[u])) ++count;
    return count;
}

struct FormulaResult {
    Rational value;
    std::vector<int> x;  // vertices, ascending
    std::vector<int> y;
};

// Exhaustive minimization of (e(X,Y) + r*min{|X|,|Y|}) / (|X|+|Y|-|A|) over
// X subseteq A, Y subseteq B.  For a fixed X and |Y| the best Y takes the
// |Y| vertices of B with fewest neighbors in X, so only |B| ratios per X need
// checking.  Ties pick the lexicographically smallest (X, Y).
FormulaResult formula_exhaustive(const Graph& g, const std::vector<int>& a_side,
                                 const std::vector<int>& b_side, int r) {
    const int na = static_cast<int>(a_side.size());
    const int nb = static_cast<int>(b_side.size());
    std::vector<int> pos_in_a(g.n, -1);
    for (int i = 0; i < na; ++i) pos_in_a[a_side[i]] = i;
    std::vector<std::vector<int>> b_nbr(nb);  // positions into a_side
    for (int j = 0; j < nb; ++j)
        for (int u : g.adj[b_side[j]])
            if (pos_in_a[u] >= 0) b_nbr[j].push_back(pos_in_a[u]);

    bool have = false;
    Rational best;
    std::vector<int> best_x, best_y;
    std::vector<int> degx(nb), order(nb), pref(nb + 1);

    auto y_from_order = [&](int ysz) {
        std::vector<int> y(ysz);
        for (int t = 0; t < ysz; ++t) y[t] = b_side[order[t]];
        std::sort(y.begin(), y.end());
        return y;
    };
    auto x_from_mask = [&](std::uint32_t mask) {
        std::vector<int> x;
        for (int i = 0; i < na; ++i)
            if (mask & (1u << i)) x.push_back(a_side[i]);
        return x;
    };

    for (std::uint32_t mask = 0; mask < (1u << na); ++mask) {
        const int xs = std::popcount(mask);
        const int ymin = std::max(1, na - xs + 1);
        if (ymin > nb) continue;
        for (int j = 0; j < nb; ++j) {
            int d = 0;
            for (int i : b_nbr[j])
                if (mask & (1u << i)) ++d;
            degx[j] = d;
        }
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int p, int q) {
            return degx[p] != degx[q] ? degx[p] < degx[q] : p < q;
        });
        pref[0] = 0;
        for (int t = 0; t < nb; ++t) pref[t + 1] = pref[t] + degx[order[t]];
        for (int ysz = ymin; ysz <= nb; ++ysz) {
            const long num = pref[ysz] + static_cast<long>(r) * std::min(xs, ysz);
            const int den = xs + ysz - na;
            Rational ratio = rat(num, den);
            if (have && ratio > best) continue;
            std::vector<int> x = x_from_mask(mask);
            std::vector<int> y = y_from_order(ysz);
            if (!have || ratio < best ||
                std::pair(x, y) < std::pair(best_x, best_y)) {
                have = true;
                best = std::move(ratio);
                best_x = std::move(x);
                best_y = std::move(y);
            }
        }
    }
    if (!have) throw preclude_error("formula domain is empty");
    return {best, best_x, best_y};
}

// Saturation test for the larger side B via max flow (unit terminal arcs,
// effectively unbounded middle arcs).  Returns nullopt when the graph has a
// perfect matching, otherwise a pair (X0, Y0) with e(X0,Y0) = 0 and
// |X0| + |Y0| > |A|: Y0 = B-side Hall violator, X0 = A minus its neighbors.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
bipartite_hall_violator(const Graph& g, const std::vector<int>& a_side,
                        const std::vector<int>& b_side) {
    const int s = g.n, t = g.n + 1;
    FlowNetwork net;
    net.node_count = g.n + 2;
    net.source = s;
    net.sink = t;
    std::vector<char> on_a(g.n, 0);
    for (int v : a_side) on_a[v] = 1;
    for (int b : b_side) net.add_arc(s, b, Rational(1));
    const Rational big(g.n + 1);
    for (auto [u, v] : g.edges) {
        int av = on_a[u] ? u : v, bv = on_a[u] ? v : u;
        net.add_arc(bv, av, big);
    }
    for (int a : a_side) net.add_arc(a, t, Rational(1));
    MaxFlowResult mf = max_flow(net);
    if (a_side.size() == b_side.size() &&
        mf.value == Rational(static_cast<long>(b_side.size())))
        return std::nullopt;

    std::vector<char> in_cut(net.node_count, 0);
    for (int v : mf.min_cut_side) in_cut[v] = 1;
    std::vector<int> y0;
    for (int b : b_side)
        if (in_cut[b]) y0.push_back(b);
    std::vector<char> nbr(g.n, 0);
    for (int b : y0)
        for (int u : g.adj[b]) nbr[u] = 1;
    std::vector<int> x0;
    for (int a : a_side)
        if (!nbr[a]) x0.push_back(a);
    if (x0.size() + y0.size() <= a_side.size())
        throw preclude_error("hall violator extraction failed");
    return std::make_pair(std::move(x0), std::move(y0));
}

// Candidate ratios p/q for the parametric searches, ascending and distinct.
std::vector<Rational> candidate_ratios(int max_num, int max_den) {
    std::set<Rational> seen;
    for (int q = 1; q <= max_den; ++q)
        for (int p = 1; p <= max_num; ++p) seen.insert(rat(p, q));
    return {seen.begin(), seen.end()};
}

// Parametric evaluation of the plain bipartite formula, for sides too large
// to enumerate subsets.  Tests candidate values V through the capacity-z flow
// network (arcs s->a and b->t capacity 1, edges capacity z = 1/V); V is
// attainable iff the max flow saturates A.  The minimizing pair is read off
// the min cut at the first infeasible candidate.
FormulaResult formula_parametric(const Graph& g, const std::vector<int>& a_side,
                                 const std::vector<int>& b_side) {
    if (auto viol = bipartite_hall_violator(g, a_side, b_side))
        return {Rational(0), viol->first, viol->second};

    const int na = static_cast<int>(a_side.size());
    std::vector<char> on_a(g.n, 0);
    for (int v : a_side) on_a[v] = 1;
    const int s = g.n, t = g.n + 1;

    auto run = [&](const Rational& v) {
        Rational z = Rational(1) / v;
        FlowNetwork net;
        net.node_count = g.n + 2;
        net.source = s;
        net.sink = t;
        for (int a : a_side) net.add_arc(s, a, Rational(1));
        for (auto [u, w] : g.edges) {
            int av = on_a[u] ? u : w, bv = on_a[u] ? w : u;
            net.add_arc(av, bv, z);
        }
        for (int b : b_side) net.add_arc(b, t, Rational(1));
        return max_flow(net);
    };
    auto feasible = [&](const MaxFlowResult& mf) { return mf.value == Rational(na); };

    std::vector<Rational> cand = candidate_ratios(g.edge_count(), na);
    int lo = 0, hi = static_cast<int>(cand.size()) - 1;
    if (feasible(run(cand[hi]))) {
        // Only reachable when |A| = 1: the minimum is hit by (A, B) itself.
        if (rat(edges_between(g, a_side, b_side),
                static_cast<int>(b_side.size())) != cand[hi])
            throw preclude_error("parametric search produced an inconsistent witness");
        return {cand[hi], a_side, b_side};
    }
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (feasible(run(cand[mid])))
            lo = mid;
        else
            hi = mid;
    }

    MaxFlowResult cut_run = run(cand[hi]);
    std::vector<char> in_cut(g.n + 2, 0);
    for (int v : cut_run.min_cut_side) in_cut[v] = 1;
    std::vector<int> x, y;
    for (int a : a_side)
        if (in_cut[a]) x.push_back(a);
    for (int b : b_side)
        if (!in_cut[b]) y.push_back(b);
    const int den = static_cast<int>(x.size() + y.size()) - na;
    if (den <= 0 || rat(edges_between(g, x, y), den) != cand[lo])
        throw preclude_error("parametric search produced an inconsistent witness");
    return {cand[lo], std::move(x), std::move(y)};
}

// Parametric evaluation of the product formula via the circulation network:
// s->a and b->t within [max(0, 1-rz), 1], edges within [0, z], plus a return
// arc t->s.  A candidate V is attainable iff the circulation is feasible at
// z = 1/V; otherwise the violating set yields the minimizing pair.
FormulaResult product_formula_parametric(const Graph& g,
                                         const std::vector<int>& a_side,
                                         const std::vector<int>& b_side, int r) {
    const int na = static_cast<int>(a_side.size());
    std::vector<char> on_a(g.n, 0);
    for (int v : a_side) on_a[v] = 1;
    const int s = g.n, t = g.n + 1;

    auto run = [&](const Rational& v) {
        Rational z = Rational(1) / v;
        Rational lo_term = std::max(Rational(0), Rational(1) - Rational(r) * z);
        FlowNetwork net;
        net.node_count = g.n + 2;
        for (int a : a_side) net.add_arc(s, a, lo_term, Rational(1));
        for (auto [u, w] : g.edges) {
            int av = on_a[u] ? u : w, bv = on_a[u] ? w : u;
            net.add_arc(av, bv, Rational(0), z);
        }
        for (int b : b_side) net.add_arc(b, t, lo_term, Rational(1));
        net.add_arc(t, s, Rational(0), Rational(na));
        return feasible_circulation(net);
    };

    std::vector<Rational> cand =
        candidate_ratios(g.edge_count() + r * na, na);
    int lo = 0, hi = static_cast<int>(cand.size()) - 1;
    if (run(cand[hi]).feasible) {
        // Only reachable when |A| = 1: the minimum is hit by (A, B) itself.
        if (rat(edges_between(g, a_side, b_side) + static_cast<long>(r) * na,
                na) != cand[hi])
            throw preclude_error("parametric search produced an inconsistent witness");
        return {cand[hi], a_side, b_side};
    }
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (run(cand[mid]).feasible)
            lo = mid;
        else
            hi = mid;
    }

    CirculationResult bad = run(cand[hi]);
    std::vector<char> in_r(g.n + 2, 0);
    for (int v : bad.violating_set) in_r[v] = 1;
    std::vector<int> x, y;
    for (int a : a_side)
        if (!in_r[a]) x.push_back(a);
    for (int b : b_side)
        if (in_r[b]) y.push_back(b);
    const int den = static_cast<int>(x.size() + y.size()) - na;
    const long num = edges_between(g, x, y) +
                     static_cast<long>(r) *
                         static_cast<long>(std::min(x.size(), y.size()));
    if (den <= 0 || rat(num, den) != cand[lo])
        throw preclude_error("parametric search produced an inconsistent witness");
    return {cand[lo], std::move(x), std::move(y)};
}

// Uniform certificate 1/(|X|+|Y|-|A|) on E(X,Y), zero elsewhere.
RationalVector uniform_certificate(const Graph& g, const FormulaResult& fr, int na) {
    RationalVector cert(g.edge_count(), Rational(0));
    const int den = static_cast<int>(fr.x.size() + fr.y.size()) - na;
    std::vector<char> on_x(g.n, 0), on_y(g.n, 0);
    for (int v : fr.x) on_x[v] = 1;
    for (int v : fr.y) on_y[v] = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        if ((on_x[u] && on_y[v]) || (on_x[v] && on_y[u])) cert[e] = rat(1, den);
    }
    return cert;
}

}  // namespace

PreclusionReport mp(const Graph& g, long matching_cap, bool with_exhaustive) {
    require_even_order(g);
    MatchingSet ms = enumerate_perfect_matchings(g, matching_cap);
    PreclusionReport rep;
    rep.method = "enumeration";
    if (ms.matchings.empty()) {
        rep.value = 0;
        rep.preclusion_set = std::vector<int>{};
        return rep;
    }
    LinearProgram lp = covering_program(g.edge_count(), ms.matchings, true);
    LpSolution sol = solve_01(lp);
    if (sol.status != LpStatus::Optimal)
        throw preclude_error(std::string("matching covering program unexpectedly ") +
                             status_name(sol.status));
    rep.value = sol.value;
    std::vector<int> chosen;
    for (int e = 0; e < g.edge_count(); ++e)
        if (sol.primal[e] == 1) chosen.push_back(e);
    rep.preclusion_set = std::move(chosen);
    if (with_exhaustive &&
        exhaustive_budget_ok(g.edge_count(), rat_num(rep.value)))
        rep.cross_check["exhaustive"] = mp_exhaustive(g).value;
    return rep;
}

PreclusionReport mp_exhaustive(const Graph& g) {
    require_even_order(g);
    const int m = g.edge_count();
    std::vector<char> removed(m, 0);
    for (int s = 0; s <= m; ++s) {
        std::vector<int> comb(s);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            for (int e : comb) removed[e] = 1;
            bool killed = !pm_exists_avoiding(g, removed);
            for (int e : comb) removed[e] = 0;
            if (killed) {
                PreclusionReport rep;
                rep.method = "enumeration";
                rep.value = s;
                rep.preclusion_set = comb;
                return rep;
            }
            int i = s - 1;
            while (i >= 0 && comb[i] == m - s + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    throw preclude_error("no edge subset precludes; graph has no vertices?");
}

PreclusionReport mpf_enumerated(const Graph& g, long matching_cap) {
    require_even_order(g);
    MatchingSet ms = enumerate_perfect_matchings(g, matching_cap);
    PreclusionReport rep;
    rep.method = "enumeration";
    if (ms.matchings.empty()) {
        rep.value = 0;
        rep.certificate_y = RationalVector(g.edge_count(), Rational(0));
        return rep;
    }
    LinearProgram lp = covering_program(g.edge_count(), ms.matchings, false);
    LpSolution sol = solved_or_throw(lp, "matching covering LP", true);
    rep.value = sol.value;
    rep.certificate_y = sol.primal;
    return rep;
}

PreclusionReport mpf_cutting_plane(const Graph& g, long matching_cap) {
    require_even_order(g);
    auto first = find_perfect_matching(g);
    if (!first) throw precondition_error("graph has no perfect matching");
    MatchingSet ms = enumerate_perfect_matchings(g, matching_cap);
    const long total = static_cast<long>(ms.matchings.size());
    EnumerationPmOracle oracle(std::move(ms));

    std::vector<std::vector<int>> rows = {*first};
    for (long round = 0; round <= total; ++round) {
        LinearProgram lp = covering_program(g.edge_count(), rows, false);
        LpSolution sol = solved_or_throw(lp, "restricted covering LP", true);
        SeparationResult sep = separate_fmp(g, sol.primal, oracle);
        if (sep.in_polyhedron) {
            PreclusionReport rep;
            rep.method = "cutting_plane";
            rep.value = sol.value;
            rep.certificate_y = sol.primal;
            return rep;
        }
        if (sep.matching.empty())
            throw preclude_error("separation returned a unit row for a nonnegative point");
        rows.push_back(sep.matching);
    }
    throw preclude_error("cutting plane failed to converge");
}

LOfGResult l_of_g(const Graph& g, int oddcut_cap, bool include_odd_cuts) {
    require_even_order(g);
    if (g.n > oddcut_cap)
        throw cap_exceeded_error("odd-cut LP limited to " + std::to_string(oddcut_cap) +
                                 " vertices, got " + std::to_string(g.n));
    if (!pm_exists(g)) throw precondition_error("graph has no perfect matching");
    const int m = g.edge_count();
    LinearProgram lp(1 + m, Sense::Minimize);
    lp.objective[0] = 1;
    for (int e = 0; e < m; ++e) {
        RationalVector row(1 + m, Rational(0));
        row[0] = 1;
        row[1 + e] = -1;
        lp.add_row(std::move(row), Relation::GreaterEq, Rational(0));
    }
    for (int v = 0; v < g.n; ++v) {
        RationalVector row(1 + m, Rational(0));
        for (int e : g.incident_edges[v]) row[1 + e] = 1;
        lp.add_row(std::move(row), Relation::Equal, Rational(1));
    }
    if (include_odd_cuts) {
        for (const EdgeCut& cut : enumerate_nontrivial_odd_cuts(g)) {
            RationalVector row(1 + m, Rational(0));
            for (int e : cut.edge_ids) row[1 + e] = 1;
            lp.add_row(std::move(row), Relation::GreaterEq, Rational(1));
        }
    }
    LpSolution sol = solved_or_throw(lp, "odd-cut LP", true);
    return {sol.value, RationalVector(sol.primal.begin() + 1, sol.primal.end())};
}

PreclusionReport mpf_odd_cut_lp(const Graph& g, int oddcut_cap) {
    LOfGResult res = l_of_g(g, oddcut_cap);
    PreclusionReport rep;
    rep.method = "odd_cut_lp";
    rep.value = Rational(1) / res.l;
    return rep;
}

PreclusionReport mpf_bipartite_formula(const Graph& g, const Bipartition& bip) {
    require_even_order(g);
    require_proper_bipartition(g, bip);
    std::vector<int> a_side = bip.side_a, b_side = bip.side_b;
    if (a_side.size() > b_side.size()) std::swap(a_side, b_side);
    const int na = static_cast<int>(a_side.size());

    FormulaResult fr = (g.n <= 24) ? formula_exhaustive(g, a_side, b_side, 0)
                                   : formula_parametric(g, a_side, b_side);
    PreclusionReport rep;
    rep.method = "bipartite_formula";
    rep.value = fr.value;
    rep.certificate_y = uniform_certificate(g, fr, na);
    rep.witness_xy = std::make_pair(std::move(fr.x), std::move(fr.y));
    return rep;
}

PreclusionReport mpf_bipartite_blp(const Graph& g, const Bipartition& bip) {
    require_proper_bipartition(g, bip);
    if (g.n == 0) throw precondition_error("graph has no vertices");
    std::vector<int> a_side = bip.side_a, b_side = bip.side_b;
    if (a_side.size() > b_side.size()) std::swap(a_side, b_side);
    if (bipartite_hall_violator(g, a_side, b_side))
        throw precondition_error("graph has no perfect matching");

    const int m = g.edge_count();
    LinearProgram lp(1 + m, Sense::Minimize);
    lp.objective[0] = 1;
    for (int e = 0; e < m; ++e) {
        RationalVector row(1 + m, Rational(0));
        row[0] = 1;
        row[1 + e] = -1;
        lp.add_row(std::move(row), Relation::GreaterEq, Rational(0));
    }
    for (int v = 0; v < g.n; ++v) {
        RationalVector row(1 + m, Rational(0));
        for (int e : g.incident_edges[v]) row[1 + e] = 1;
        lp.add_row(std::move(row), Relation::Equal, Rational(1));
    }
    LpSolution sol = solved_or_throw(lp, "degree-equality LP", false);
    PreclusionReport rep;
    rep.method = "blp";
    rep.value = Rational(1) / sol.value;
    return rep;
}

PreclusionReport mpf_product_regular(const Graph& g, const Bipartition& bip_g,
                                     const Graph& h) {
    require_proper_bipartition(g, bip_g);
    if (bip_g.side_a.size() != bip_g.side_b.size())
        throw precondition_error("product formula needs equal sides in g");
    if (g.n == 0) throw precondition_error("graph has no vertices");
    if (!try_bipartition(h)) throw precondition_error("h is not bipartite");
    const int r = regular_degree(h);
    if (r == 0) throw precondition_error("h must have positive degree");

    const std::vector<int>& a_side = bip_g.side_a;
    const std::vector<int>& b_side = bip_g.side_b;
    FormulaResult fr = (g.n <= 24)
                           ? formula_exhaustive(g, a_side, b_side, r)
                           : product_formula_parametric(g, a_side, b_side, r);

    // Reduced LP on one G-layer and one H-layer worth of variables.
    const int m = g.edge_count();
    LinearProgram lp(1 + m + g.n, Sense::Minimize);
    lp.objective[0] = 1;
    for (int e = 0; e < m; ++e) {
        RationalVector row(1 + m + g.n, Rational(0));
        row[0] = 1;
        row[1 + e] = -1;
        lp.add_row(std::move(row), Relation::GreaterEq, Rational(0));
    }
    for (int v = 0; v < g.n; ++v) {
        RationalVector row(1 + m + g.n, Rational(0));
        row[0] = 1;
        row[1 + m + v] = -1;
        lp.add_row(std::move(row), Relation::GreaterEq, Rational(0));
    }
    for (int v = 0; v < g.n; ++v) {
        RationalVector row(1 + m + g.n, Rational(0));
        for (int e : g.incident_edges[v]) row[1 + e] = 1;
        row[1 + m + v] = r;
        lp.add_row(std::move(row), Relation::Equal, Rational(1));
    }
    LpSolution sol = solved_or_throw(lp, "reduced product LP", false);
    Rational via_lp = Rational(1) / sol.value;

    PreclusionReport rep;
    rep.method = "product_formula";
    rep.value = fr.value;
    rep.witness_xy = std::make_pair(std::move(fr.x), std::move(fr.y));
    rep.cross_check["blp2"] = via_lp;
    if (via_lp != rep.value)
        throw verification_error("product formula " + rat_str(rep.value) +
                                 " disagrees with reduced LP " + rat_str(via_lp));
    return rep;
}

ProductBoundReport check_product_bound(const Graph& g, const Graph& h) {
    auto gb = try_bipartition(g);
    if (!gb) throw precondition_error("g is not bipartite");
    auto hb = try_bipartition(h);
    if (!hb) throw precondition_error("h is not bipartite");

    auto mpf_of = [](const Graph& x, const Bipartition& xb) {
        if (x.n % 2 != 0) return Rational(0);  // odd order: no perfect matching
        return mpf_bipartite_formula(x, xb).value;
    };
    Rational mpf_g = mpf_of(g, *gb);
    Rational mpf_h = mpf_of(h, *hb);

    ProductGraph prod = cartesian_product(g, h);
    Rational lhs = mpf_of(prod.graph, bipartition(prod.graph));
    Rational rhs = mpf_g + rat_floor(mpf_h);
    return {lhs, rhs, lhs >= rhs, lhs == rhs};
}

KFactorCrossCheck kfactor_crosscheck(const Graph& g, const Bipartition& bip) {
    require_even_order(g);
    require_proper_bipartition(g, bip);
    Rational value = mpf_bipartite_formula(g, bip).value;
    long fl = rat_num(rat_floor(value));
    int mk = max_k_factor(g, bip);
    return {fl, mk, fl == mk};
}

PreclusionReport mpf_auto(const Graph& g, bool run_all, long matching_cap,
                          int oddcut_cap) {
    require_even_order(g);
    auto bip = try_bipartition(g);

    PreclusionReport rep;
    if (bip)
        rep = mpf_bipartite_formula(g, *bip);
    else if (g.n <= oddcut_cap)
        rep = mpf_odd_cut_lp(g, oddcut_cap);
    else
        rep = mpf_enumerated(g, matching_cap);
    if (!run_all) return rep;

    const bool has_pm = rep.value > 0;
    auto record = [&](const std::string& method, const Rational& value) {
        if (method == rep.method) return;
        rep.cross_check[method] = value;
        if (value != rep.value)
            throw verification_error("pipeline " + method + " returned " +
                                     rat_str(value) + " but " + rep.method +
                                     " returned " + rat_str(rep.value));
    };
    record("enumeration", mpf_enumerated(g, matching_cap).value);
    if (has_pm) {
        record("cutting_plane", mpf_cutting_plane(g, matching_cap).value);
        if (g.n <= oddcut_cap)
            record("odd_cut_lp", mpf_odd_cut_lp(g, oddcut_cap).value);
        if (bip) record("blp", mpf_bipartite_blp(g, *bip).value);
    }
    return rep;
}

std::string report_to_json(const PreclusionReport& rep, int indent) {
    nlohmann::json j;
    j["value"] = {{"num", rat_num(rep.value)}, {"den", rat_den(rep.value)}};
    j["method"] = rep.method;
    if (rep.witness_xy) {
        j["witness_x"] = rep.witness_xy->first;
        j["witness_y"] = rep.witness_xy->second;
    }
    if (rep.certificate_y) {
        auto arr = nlohmann::json::array();
        for (int e = 0; e < static_cast<int>(rep.certificate_y->size()); ++e) {
            const Rational& y = (*rep.certificate_y)[e];
            if (y == 0) continue;
            arr.push_back({{"edge", e}, {"num", rat_num(y)}, {"den", rat_den(y)}});
        }
        j["certificate"] = std::move(arr);
    }
    if (rep.preclusion_set) j["preclusion_set"] = *rep.preclusion_set;
    if (!rep.cross_check.empty()) {
        nlohmann::json cc = nlohmann::json::object();
        for (const auto& [method, value] : rep.cross_check)
            cc[method] = {{"num", rat_num(value)}, {"den", rat_den(value)}};
        j["cross_check"] = std::move(cc);
    }
    return j.dump(indent);
}

}  // namespace preclude
