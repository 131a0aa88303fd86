// Simple undirected graphs with stable edge identifiers, plus the structural
// helpers the rest of the library builds on: bipartitions, odd edge cuts,
// Cartesian products, incidence matrices, and edge-list I/O.
#pragma once

#include "preclude/errors.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace preclude {

// Vertices are 0..n-1.  Edges keep the id (= position) they were given at
// construction; endpoints are normalized so that first < second.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;            // neighbors, ascending
    std::vector<std::vector<int>> incident_edges; // edge ids, ascending

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    // Edge id for {u,v}, or -1 if absent.
    int edge_index(int u, int v) const;
};

// Validates and builds a Graph.  Throws invalid_graph_error on out-of-range
// endpoints, self-loops, or duplicate edges.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

struct Bipartition {
    std::vector<int> side_a;  // ascending
    std::vector<int> side_b;  // ascending
    std::vector<int> color;   // per vertex: 0 = side_a, 1 = side_b

    bool in_a(int v) const { return color[v] == 0; }
};

// Two-colors g by BFS.  Deterministic: components are scanned in order of
// their smallest vertex, which is placed on side A.  Empty result if g has an
// odd cycle.
std::optional<Bipartition> try_bipartition(const Graph& g);

// Same, but throws precondition_error when g is not bipartite.
Bipartition bipartition(const Graph& g);

// An edge cut d(X) described by its defining vertex set and its edge ids.
struct EdgeCut {
    std::vector<int> x_side;   // ascending
    std::vector<int> edge_ids; // ascending
};

// All nontrivial odd cuts d(X): |X| odd, 3 <= |X| <= n-3, one representative
// per {X, V\X} pair (the side containing vertex 0).  Ordered by ascending
// bitmask of X.  Requires n <= 20 (throws cap_exceeded_error beyond that).
std::vector<EdgeCut> enumerate_nontrivial_odd_cuts(const Graph& g);

// The edge ids of d(X) for an arbitrary vertex set.
std::vector<int> cut_edges(const Graph& g, const std::vector<int>& x_side);

// Cartesian product G x H.  Vertex (u,v) gets index v*|V(G)| + u.  Edges are
// laid out so the incidence matrix is the block matrix
// [ I_p (x) M_G  |  M_H (x) I_n ]: first the G-layer copies (one per vertex of
// H, in vertex order), then the H-layer copies (one per edge of H, in edge
// order).
struct ProductGraph {
    Graph graph;
    int g_vertices = 0;
    int h_vertices = 0;
    int g_edges = 0;
    int h_edges = 0;

    int vertex_index(int gu, int hv) const { return hv * g_vertices + gu; }
    std::pair<int, int> vertex_pair(int idx) const {
        return {idx % g_vertices, idx / g_vertices};
    }
    // Number of G-layer edges (they occupy edge ids 0 .. g_layer_edges-1).
    int g_layer_edges() const { return h_vertices * g_edges; }
};

ProductGraph cartesian_product(const Graph& g, const Graph& h);

// Dense vertex-by-edge incidence matrix.
std::vector<std::vector<int>> incidence_matrix(const Graph& g);

int min_degree(const Graph& g);
bool is_connected(const Graph& g);

// Degree r if every vertex has degree r; throws precondition_error otherwise.
int regular_degree(const Graph& g);

// Edge-list text format:
//   p <n> <m>
//   e <u> <v>     (m lines)
// Lines starting with 'c' and blank lines are ignored on input.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace preclude
