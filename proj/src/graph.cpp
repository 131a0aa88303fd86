#include "preclude/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace preclude {

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int e : incident_edges[u]) {
        if (edges[e] == std::make_pair(u, v)) return e;
    }
    return -1;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw invalid_graph_error("vertex count must be nonnegative");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    g.incident_edges.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        int u = std::min(a, b), v = std::max(a, b);
        if (u < 0 || v >= n) {
            throw invalid_graph_error("edge endpoint out of range: (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
        }
        if (u == v) throw invalid_graph_error("self-loop at vertex " + std::to_string(u));
        if (!seen.insert({u, v}).second) {
            throw invalid_graph_error("duplicate edge (" + std::to_string(u) + "," +
                                      std::to_string(v) + ")");
        }
        int id = g.edge_count();
        g.edges.emplace_back(u, v);
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
        g.incident_edges[u].push_back(id);
        g.incident_edges[v].push_back(id);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(g.adj[v].begin(), g.adj[v].end());
        std::sort(g.incident_edges[v].begin(), g.incident_edges[v].end(),
                  [&](int e, int f) { return g.edges[e] < g.edges[f]; });
    }
    return g;
}

std::optional<Bipartition> try_bipartition(const Graph& g) {
    Bipartition bp;
    bp.color.assign(g.n, -1);
    for (int start = 0; start < g.n; ++start) {
        if (bp.color[start] != -1) continue;
        bp.color[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.adj[v]) {
                if (bp.color[w] == -1) {
                    bp.color[w] = 1 - bp.color[v];
                    queue.push_back(w);
                } else if (bp.color[w] == bp.color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < g.n; ++v) {
        (bp.color[v] == 0 ? bp.side_a : bp.side_b).push_back(v);
    }
    return bp;
}

Bipartition bipartition(const Graph& g) {
    auto bp = try_bipartition(g);
    if (!bp) throw precondition_error("graph is not bipartite");
    return *bp;
}

std::vector<int> cut_edges(const Graph& g, const std::vector<int>& x_side) {
    std::vector<char> in_x(g.n, 0);
    for (int v : x_side) in_x[v] = 1;
    std::vector<int> ids;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_x[g.edges[e].first] != in_x[g.edges[e].second]) ids.push_back(e);
    }
    return ids;
}

std::vector<EdgeCut> enumerate_nontrivial_odd_cuts(const Graph& g) {
    if (g.n > 20) {
        throw cap_exceeded_error("odd cut enumeration supports at most 20 vertices, got " +
                                 std::to_string(g.n));
    }
    std::vector<EdgeCut> cuts;
    if (g.n < 6) return cuts;
    const unsigned full = (g.n == 20) ? 0xFFFFFu : ((1u << g.n) - 1);
    for (unsigned mask = 1; mask <= full; mask += 2) {  // representative contains vertex 0
        int size = __builtin_popcount(mask);
        if (size % 2 == 0 || size < 3 || size > g.n - 3) continue;
        EdgeCut cut;
        for (int v = 0; v < g.n; ++v) {
            if (mask >> v & 1u) cut.x_side.push_back(v);
        }
        cut.edge_ids = cut_edges(g, cut.x_side);
        cuts.push_back(std::move(cut));
    }
    return cuts;
}

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
    ProductGraph p;
    p.g_vertices = g.n;
    p.h_vertices = h.n;
    p.g_edges = g.edge_count();
    p.h_edges = h.edge_count();
    std::vector<std::pair<int, int>> edges;
    for (int hv = 0; hv < h.n; ++hv) {
        for (const auto& [a, b] : g.edges) {
            edges.emplace_back(p.vertex_index(a, hv), p.vertex_index(b, hv));
        }
    }
    for (const auto& [c, d] : h.edges) {
        for (int gu = 0; gu < g.n; ++gu) {
            edges.emplace_back(p.vertex_index(gu, c), p.vertex_index(gu, d));
        }
    }
    p.graph = build_graph(g.n * h.n, edges);
    return p;
}

std::vector<std::vector<int>> incidence_matrix(const Graph& g) {
    std::vector<std::vector<int>> m(g.n, std::vector<int>(g.edge_count(), 0));
    for (int e = 0; e < g.edge_count(); ++e) {
        m[g.edges[e].first][e] = 1;
        m[g.edges[e].second][e] = 1;
    }
    return m;
}

int min_degree(const Graph& g) {
    if (g.n == 0) throw precondition_error("min_degree of empty graph");
    int d = g.degree(0);
    for (int v = 1; v < g.n; ++v) d = std::min(d, g.degree(v));
    return d;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                queue.push_back(w);
            }
        }
    }
    return count == g.n;
}

int regular_degree(const Graph& g) {
    if (g.n == 0) throw precondition_error("regular_degree of empty graph");
    int r = g.degree(0);
    for (int v = 1; v < g.n; ++v) {
        if (g.degree(v) != r) throw precondition_error("graph is not regular");
    }
    return r;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;  // blank line
        if (tag == "c") continue;    // comment
        if (tag == "p") {
            if (n != -1) throw parse_error("line " + std::to_string(lineno) + ": repeated p line");
            if (!(ss >> n >> m) || n < 0 || m < 0) {
                throw parse_error("line " + std::to_string(lineno) + ": malformed p line");
            }
        } else if (tag == "e") {
            if (n == -1) throw parse_error("line " + std::to_string(lineno) + ": e before p");
            int u, v;
            if (!(ss >> u >> v)) {
                throw parse_error("line " + std::to_string(lineno) + ": malformed e line");
            }
            edges.emplace_back(u, v);
        } else {
            throw parse_error("line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
        }
    }
    if (n == -1) throw parse_error("missing p line");
    if (static_cast<int>(edges.size()) != m) {
        throw parse_error("p line promised " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
    }
    try {
        return build_graph(n, edges);
    } catch (const invalid_graph_error& e) {
        throw parse_error(e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.n << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges) out << "e " << u << " " << v << "\n";
}

} // namespace preclude
