#include "bedkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace bedkit {

int Graph::edge_count() const {
    int total = 0;
    for (uint64_t row : rows_) total += std::popcount(row);
    return total / 2;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(rows_[v]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if ((rows_[u] >> v) & 1u) out.emplace_back(u, v);
    return out;
}

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    uint64_t keep = vertex_mask() & ~(uint64_t{1} << v);
    return induced_subgraph(keep);
}

Graph Graph::delete_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("delete_edge: not an edge");
    Graph g = *this;
    g.rows_[u] &= ~(uint64_t{1} << v);
    g.rows_[v] &= ~(uint64_t{1} << u);
    return g;
}

Graph Graph::contract_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("contract_edge: not an edge");
    // New vertex replaces min(u,v) in compacted order; adjacency is the
    // union of both neighborhoods minus the endpoints.
    int lo = u < v ? u : v, hi = u < v ? v : u;
    uint64_t merged = (rows_[u] | rows_[v]) & ~(uint64_t{1} << u) & ~(uint64_t{1} << v);
    Graph g(n_ - 1);
    auto newidx = [&](int w) { return w < hi ? w : w - 1; };
    for (int a = 0; a < n_; ++a) {
        if (a == hi || a == lo) continue;
        for (int b = a + 1; b < n_; ++b) {
            if (b == hi || b == lo) continue;
            if ((rows_[a] >> b) & 1u) g.add_edge(newidx(a), newidx(b));
        }
    }
    for (int w = 0; w < n_; ++w)
        if ((merged >> w) & 1u) g.add_edge(newidx(lo), newidx(w));
    return g;
}

Graph Graph::induced_subgraph(uint64_t mask) const {
    mask &= vertex_mask();
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if ((mask >> v) & 1u) keep.push_back(v);
    Graph g(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if ((rows_[keep[i]] >> keep[j]) & 1u) g.add_edge((int)i, (int)j);
    return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
    if (n_ + other.n_ > kMaxVertices)
        throw std::invalid_argument("disjoint_union: vertex cap exceeded");
    Graph g(n_ + other.n_);
    for (auto [u, v] : edges()) g.add_edge(u, v);
    for (auto [u, v] : other.edges()) g.add_edge(u + n_, v + n_);
    return g;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!((rows_[u] >> v) & 1u)) g.add_edge(u, v);
    return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if ((int)perm.size() != n_) throw std::invalid_argument("relabeled: bad permutation");
    Graph g(n_);
    for (auto [u, v] : edges()) {
        // position of u in the new graph is the index i with perm[i] == u
        g.add_edge(perm[u], perm[v]);
    }
    return g;
}

uint64_t component_of(const Graph& g, int seed, uint64_t within) {
    uint64_t comp = uint64_t{1} << seed;
    uint64_t frontier = comp;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v) & within & ~comp;
        }
        comp |= next;
        frontier = next;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return false;
    return component_of(g, 0, g.vertex_mask()) == g.vertex_mask();
}

bool subset_connected(const Graph& g, uint64_t mask) {
    if (mask == 0) return false;
    int seed = std::countr_zero(mask);
    return component_of(g, seed, mask) == mask;
}

std::vector<uint64_t> connected_components(const Graph& g) {
    std::vector<uint64_t> comps;
    uint64_t left = g.vertex_mask();
    while (left) {
        int v = std::countr_zero(left);
        uint64_t c = component_of(g, v, left);
        comps.push_back(c);
        left &= ~c;
    }
    return comps;
}

namespace {

struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low, stack;
    int timer = 0;
    std::vector<uint64_t> blocks;
    uint64_t cuts = 0;

    explicit BlockDfs(const Graph& graph)
        : g(graph), disc(graph.n(), -1), low(graph.n(), -1) {}

    void run(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        uint64_t nb = g.neighbors(u);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (v == parent) continue;
            if (disc[v] == -1) {
                ++children;
                stack.push_back(u);
                stack.push_back(v);
                run(v, u);
                low[u] = std::min(low[u], low[v]);
                if ((parent != -1 && low[v] >= disc[u]) ||
                    (parent == -1 && children > 1))
                    cuts |= uint64_t{1} << u;
                if (low[v] >= disc[u]) pop_block(u, v);
            } else if (disc[v] < disc[u]) {
                stack.push_back(u);
                stack.push_back(v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }

    void pop_block(int u, int v) {
        uint64_t mask = 0;
        while (!stack.empty()) {
            int b = stack.back(); stack.pop_back();
            int a = stack.back(); stack.pop_back();
            mask |= (uint64_t{1} << a) | (uint64_t{1} << b);
            if (a == u && b == v) break;
        }
        blocks.push_back(mask);
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockDecomposition out;
    BlockDfs dfs(g);
    for (int v = 0; v < g.n(); ++v) {
        if (dfs.disc[v] != -1) continue;
        if (g.degree(v) == 0) {
            out.blocks.push_back(uint64_t{1} << v);
            dfs.disc[v] = dfs.timer++;
            continue;
        }
        dfs.run(v, -1);
    }
    out.blocks = std::move(dfs.blocks);
    // isolated vertices were appended before DFS blocks; restore a stable
    // order by smallest contained vertex
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](uint64_t a, uint64_t b) {
                  int va = std::countr_zero(a), vb = std::countr_zero(b);
                  if (va != vb) return va < vb;
                  return a < b;
              });
    out.cut_vertices = dfs.cuts;
    return out;
}

bool is_biconnected_loose(const Graph& g) {
    if (g.n() < 2 || !is_connected(g)) return false;
    return blocks(g).blocks.size() == 1;
}

bool is_biconnected(const Graph& g) {
    return g.n() >= 3 && is_biconnected_loose(g);
}

bool is_block_graph(const Graph& g) {
    if (g.n() == 1) return true;
    return is_biconnected_loose(g);
}

std::string to_graph6(const Graph& g) {
    std::string s;
    int n = g.n();
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else {
        s.push_back(126);
        s.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        s.push_back(static_cast<char>((n & 0x3f) + 63));
    }
    int bits = 0, acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                s.push_back(static_cast<char>(acc + 63));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0) s.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return s;
}

Graph from_graph6(const std::string& s) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    int n;
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126) {
        ++pos;
        n = next();
        n = (n << 6) | next();
        n = (n << 6) | next();
    } else {
        n = next();
    }
    Graph g(n);
    int bits = 0, acc = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits == 0) {
                acc = next();
                bits = 6;
            }
            if ((acc >> (bits - 1)) & 1) g.add_edge(u, v);
            --bits;
        }
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    auto es = g.edges();
    os << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) os << u << ' ' << v << '\n';
    return os.str();
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": " + msg);
    };
    int n = -1, m = -1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (!(ls >> n >> m)) fail("expected \"n m\"");
        break;
    }
    if (n < 0) throw std::invalid_argument("edge list: missing header");
    Graph g(n);
    int seen = 0;
    while (seen < m && std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) fail("expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n) fail("endpoint out of range");
        g.add_edge(u, v);
        ++seen;
    }
    if (seen < m) throw std::invalid_argument("edge list: fewer edges than declared");
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

}  // namespace bedkit
