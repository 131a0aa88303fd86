// Perfect matching enumeration, the minimum-weight perfect matching oracle,
// the (FMP) separation routine, and perfect-matching partition of regular
// bipartite graphs.
#pragma once

#include "preclude/graph.hpp"
#include "preclude/rational.hpp"

#include <optional>
#include <vector>

namespace preclude {

// The set M(G) of perfect matchings, each a sorted list of edge ids; the list
// itself is sorted lexicographically.
struct MatchingSet {
    Graph graph;
    std::vector<std::vector<int>> matchings;
};

inline constexpr long kDefaultMatchingCap = 100000;

// Backtracking enumeration: repeatedly match the lowest-index unmatched vertex
// to each unmatched neighbor in index order.  Throws precondition_error on odd
// order, cap_exceeded_error when more than cap matchings exist.
MatchingSet enumerate_perfect_matchings(const Graph& g, long cap = kDefaultMatchingCap);

// First perfect matching found by the same backtracking order, or nullopt.
std::optional<std::vector<int>> find_perfect_matching(const Graph& g);

bool pm_exists(const Graph& g);

// Existence in the subgraph with the flagged edges removed.
bool pm_exists_avoiding(const Graph& g, const std::vector<char>& removed_edges);

struct MinWeightPmResult {
    std::vector<int> edges;  // sorted edge ids
    Rational weight;
};

// Pluggable minimum-weight perfect matching oracle.  The desk-scale
// implementation is enumeration-backed; the interface leaves room for a
// blossom-based replacement without touching the separation code.
class MinWeightPmOracle {
public:
    virtual ~MinWeightPmOracle() = default;
    // Minimizer of sum w(e) over perfect matchings, ties broken
    // lexicographically by sorted edge-index sequence; nullopt if none exist.
    virtual std::optional<MinWeightPmResult> min_weight_pm(const RationalVector& w) = 0;
};

class EnumerationPmOracle final : public MinWeightPmOracle {
public:
    explicit EnumerationPmOracle(MatchingSet set) : set_(std::move(set)) {}
    std::optional<MinWeightPmResult> min_weight_pm(const RationalVector& w) override;

private:
    MatchingSet set_;
};

std::optional<MinWeightPmResult> min_weight_perfect_matching(const Graph& g, const RationalVector& w);

// Outcome of the Lemma 2.2 separation procedure for (FMP).
struct SeparationResult {
    bool in_polyhedron = false;
    RationalVector inequality;  // the w vector of a violated inequality w.y >= 1
    std::vector<int> matching;  // populated when the inequality is a matching row
    int unit_edge = -1;         // populated when the inequality is a unit row (y_f < 0)
};

// Exactly the paper's procedure: negative coordinate -> unit inequality;
// otherwise test the minimum-weight perfect matching under weights y.
SeparationResult separate_fmp(const Graph& g, const RationalVector& y, MinWeightPmOracle& oracle);
SeparationResult separate_fmp(const Graph& g, const RationalVector& y);

// Partition of an r-regular bipartite graph into r perfect matchings, by
// repeated extraction.  Throws precondition_error unless g is regular
// bipartite with r >= 1.
std::vector<std::vector<int>> pm_partition_regular_bipartite(const Graph& g, const Bipartition& bip);

} // namespace preclude
