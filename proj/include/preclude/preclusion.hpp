#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "preclude/graph.hpp"
#include "preclude/matchings.hpp"
#include "preclude/rational.hpp"

namespace preclude {

// Result of any mp / mp_f computation. `method` names the pipeline that
// produced `value`; when other pipelines ran as well, their values land in
// `cross_check` keyed by method name.
struct PreclusionReport {
    Rational value;
    std::string method;  // enumeration | cutting_plane | odd_cut_lp |
                         // bipartite_formula | blp | product_formula
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness_xy;
    std::optional<RationalVector> certificate_y;
    std::optional<std::vector<int>> preclusion_set;  // edge ids, integer mp only
    std::map<std::string, Rational> cross_check;
};

std::string report_to_json(const PreclusionReport& rep, int indent = 2);

inline constexpr int kDefaultOddCutCap = 20;

// Integer matching preclusion number: minimum number of edges meeting every
// perfect matching, solved as a 0-1 covering program over the enumerated
// matchings. A graph without a perfect matching gets value 0 and an empty
// preclusion set. When `with_exhaustive` is set and the subset space is small
// enough, an independent subset-enumeration recount is stored under
// cross_check["exhaustive"].
PreclusionReport mp(const Graph& g, long matching_cap = kDefaultMatchingCap,
                    bool with_exhaustive = false);

// Independent mp pipeline: for s = 0, 1, ... try every s-subset of edges in
// lexicographic order and return the first whose removal kills all perfect
// matchings. Exponential; intended as a cross-check on small graphs.
PreclusionReport mp_exhaustive(const Graph& g);

// mp_f via the explicit covering LP over all enumerated perfect matchings.
PreclusionReport mpf_enumerated(const Graph& g,
                                long matching_cap = kDefaultMatchingCap);

// mp_f via row generation: start from one matching constraint and add
// violated ones from the separation oracle until the optimum is feasible.
PreclusionReport mpf_cutting_plane(const Graph& g,
                                   long matching_cap = kDefaultMatchingCap);

// Optimum of the odd-cut LP: min z subject to z >= b_e, unit degree sums, and
// b(C) >= 1 for every non-trivial odd cut C. Requires a perfect matching.
// `include_odd_cuts = false` drops the odd-cut rows (used to demonstrate that
// they are binding on non-bipartite inputs).
struct LOfGResult {
    Rational l;
    RationalVector b;
};
LOfGResult l_of_g(const Graph& g, int oddcut_cap = kDefaultOddCutCap,
                  bool include_odd_cuts = true);

// mp_f = 1 / l_of_g, wrapped as a report.
PreclusionReport mpf_odd_cut_lp(const Graph& g, int oddcut_cap = kDefaultOddCutCap);

// Closed-form bipartite pipeline:
//   mp_f = min { e(X,Y) / (|X|+|Y|-|A|) : X ⊆ A, Y ⊆ B, |X|+|Y|-|A| > 0 }
// over the smaller side A. Returns the minimizing pair (lexicographically
// smallest in the exhaustive regime) and the uniform optimal certificate
// spread over E(X,Y). Graphs without a perfect matching yield 0 with a
// Hall-violator witness.
PreclusionReport mpf_bipartite_formula(const Graph& g, const Bipartition& bip);

// Bipartite pipeline via the degree-equality LP (no odd cuts): value is the
// reciprocal of min z s.t. z >= b_e, b(δ(v)) = 1, b >= 0.
PreclusionReport mpf_bipartite_blp(const Graph& g, const Bipartition& bip);

// Cartesian product pipeline for G bipartite with equal sides and H bipartite
// r-regular:
//   mp_f(G□H) = min { (e_G(X,Y) + r·min{|X|,|Y|}) / (|X|+|Y|-|A|) }.
// Also solves the reduced product LP (z >= a_e, z >= h_v, M_G a + r h = 1)
// and records its reciprocal under cross_check["blp2"]; the two must agree.
PreclusionReport mpf_product_regular(const Graph& g, const Bipartition& bip_g,
                                     const Graph& h);

// Checks mp_f(g□h) >= mp_f(g) + floor(mp_f(h)) on the explicitly built
// product. Both factors must be bipartite.
struct ProductBoundReport {
    Rational lhs;   // mp_f(g□h)
    Rational rhs;   // mp_f(g) + floor(mp_f(h))
    bool holds;
    bool equality;
};
ProductBoundReport check_product_bound(const Graph& g, const Graph& h);

// floor(mp_f) from the bipartite formula vs. the largest k with a k-factor
// from the flow module; `agree` must hold.
struct KFactorCrossCheck {
    long floor_mpf;
    int max_k;
    bool agree;
};
KFactorCrossCheck kfactor_crosscheck(const Graph& g, const Bipartition& bip);

// Dispatcher used by the CLI: picks the bipartite formula when the graph is
// bipartite, otherwise the odd-cut LP when n fits the cap, otherwise plain
// enumeration. `run_all` additionally runs every applicable pipeline and
// fills cross_check; disagreement raises verification_error.
PreclusionReport mpf_auto(const Graph& g, bool run_all = false,
                          long matching_cap = kDefaultMatchingCap,
                          int oddcut_cap = kDefaultOddCutCap);

}  // namespace preclude
