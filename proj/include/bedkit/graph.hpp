#ifndef BEDKIT_GRAPH_HPP
#define BEDKIT_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bedkit {

// Hard cap on vertex count: adjacency rows are single machine words.
inline constexpr int kMaxVertices = 64;

// Immutable simple undirected graph on vertices 0..n-1.
// Editing operations return new graphs; deletions relabel by
// order-preserving compaction.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count out of range");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int n() const { return n_; }

    int edge_count() const;

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[u] >> v) & 1u;
    }

    // Builder-style mutation; used only while constructing a graph value.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
        rows_[u] |= uint64_t{1} << v;
        rows_[v] |= uint64_t{1} << u;
    }

    uint64_t neighbors(int v) const {
        check_vertex(v);
        return rows_[v];
    }

    int degree(int v) const;

    uint64_t vertex_mask() const {
        return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
    }

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

    // --- editing -----------------------------------------------------------

    Graph delete_vertex(int v) const;
    Graph delete_edge(int u, int v) const;
    // Simple-graph contraction: parallel edges merge, no loop is created.
    Graph contract_edge(int u, int v) const;

    Graph induced_subgraph(uint64_t mask) const;
    Graph disjoint_union(const Graph& other) const;
    Graph complement() const;

    // Permuted copy: vertex v of the result is vertex perm[v] of *this.
    Graph relabeled(const std::vector<int>& perm) const;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    }

    int n_ = 0;
    std::vector<uint64_t> rows_;
};

// --- connectivity and blocks -----------------------------------------------

// Component mask of the component containing seed, restricted to `within`.
uint64_t component_of(const Graph& g, int seed, uint64_t within);

// K0 is not connected by convention (it has no components).
bool is_connected(const Graph& g);
bool subset_connected(const Graph& g, uint64_t mask);

std::vector<uint64_t> connected_components(const Graph& g);

// Strict biconnectivity: every two vertices lie on a common cycle (n >= 3).
bool is_biconnected(const Graph& g);

// Connected, no cut vertex, at least one edge. Equals strict biconnectivity
// except that K2 qualifies.
bool is_biconnected_loose(const Graph& g);

// K1, K2, or biconnected: bc(g) = {g}.
bool is_block_graph(const Graph& g);

struct BlockDecomposition {
    std::vector<uint64_t> blocks;  // vertex masks; every edge in exactly one
    uint64_t cut_vertices = 0;
};

// Blocks of g: isolated vertices, bridges, and maximal biconnected
// subgraphs. bc(K0) is empty.
BlockDecomposition blocks(const Graph& g);

// --- formats -----------------------------------------------------------------

// graph6 (bytes offset by 63, column-major upper triangle).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// Text format: first line "n m", then m lines "u v".
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

// --- small named graphs (test and construction helpers) ---------------------

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);

}  // namespace bedkit

#endif
