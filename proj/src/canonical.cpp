#include "bedkit/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace bedkit {

namespace {

using Partition = std::vector<std::vector<int>>;

// Split every cell by neighbor counts into every other cell until stable.
// Sub-cells are ordered by count, which keeps the refinement
// isomorphism-invariant.
void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t si = 0; si < p.size() && !changed; ++si) {
            uint64_t splitter = 0;
            for (int v : p[si]) splitter |= uint64_t{1} << v;
            for (size_t ci = 0; ci < p.size(); ++ci) {
                if (p[ci].size() <= 1) continue;
                std::map<int, std::vector<int>> groups;
                for (int v : p[ci])
                    groups[std::popcount(g.neighbors(v) & splitter)].push_back(v);
                if (groups.size() <= 1) continue;
                Partition next;
                next.reserve(p.size() + groups.size());
                for (size_t k = 0; k < p.size(); ++k) {
                    if (k != ci) {
                        next.push_back(std::move(p[k]));
                    } else {
                        for (auto& [cnt, cell] : groups) next.push_back(std::move(cell));
                    }
                }
                p = std::move(next);
                changed = true;
                break;
            }
        }
    }
}

struct Certificate {
    std::vector<uint64_t> rows;
    bool operator<(const Certificate& o) const { return rows < o.rows; }
    bool operator==(const Certificate& o) const { return rows == o.rows; }
};

struct CanonSearch {
    const Graph& g;
    int n;
    Certificate best;
    bool have_best = false;
    std::vector<int> best_labeling;      // v -> position
    Certificate first;
    bool have_first = false;
    std::vector<int> first_labeling;
    std::vector<std::vector<int>> autos;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n()) {}

    Certificate cert_of(const std::vector<int>& labeling) const {
        Certificate c;
        c.rows.assign(n, 0);
        for (int u = 0; u < n; ++u) {
            uint64_t nb = g.neighbors(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                c.rows[labeling[u]] |= uint64_t{1} << labeling[v];
            }
        }
        return c;
    }

    void leaf(const Partition& p) {
        std::vector<int> labeling(n);
        for (size_t i = 0; i < p.size(); ++i) labeling[p[i][0]] = (int)i;
        Certificate c = cert_of(labeling);
        if (!have_first) {
            have_first = true;
            first = c;
            first_labeling = labeling;
        } else if (c == first) {
            // labeling and first_labeling induce an automorphism
            std::vector<int> inv(n), sigma(n);
            for (int v = 0; v < n; ++v) inv[first_labeling[v]] = v;
            for (int v = 0; v < n; ++v) sigma[v] = inv[labeling[v]];
            bool identity = true;
            for (int v = 0; v < n; ++v)
                if (sigma[v] != v) { identity = false; break; }
            if (!identity && autos.size() < 64) autos.push_back(std::move(sigma));
        }
        if (!have_best || c < best) {
            best = c;
            best_labeling = labeling;
            have_best = true;
        }
    }

    void search(Partition p, std::vector<int>& prefix) {
        refine(g, p);
        size_t target = p.size();
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i].size() > 1) { target = i; break; }
        if (target == p.size()) {
            leaf(p);
            return;
        }
        std::vector<int> cell = p[target];
        std::sort(cell.begin(), cell.end());
        std::vector<int> tried;
        for (int v : cell) {
            bool skip = false;
            for (const auto& a : autos) {
                bool fixes_prefix = true;
                for (int u : prefix)
                    if (a[u] != u) { fixes_prefix = false; break; }
                if (!fixes_prefix) continue;
                if (std::find(tried.begin(), tried.end(), a[v]) != tried.end()) {
                    skip = true;
                    break;
                }
            }
            tried.push_back(v);
            if (skip) continue;
            Partition child;
            child.reserve(p.size() + 1);
            for (size_t i = 0; i < p.size(); ++i) {
                if (i != target) {
                    child.push_back(p[i]);
                } else {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int w : p[i])
                        if (w != v) rest.push_back(w);
                    child.push_back(std::move(rest));
                }
            }
            prefix.push_back(v);
            search(std::move(child), prefix);
            prefix.pop_back();
        }
    }
};

}  // namespace

CanonicalForm canonicalize(const Graph& g) {
    CanonicalForm out;
    if (g.n() == 0) {
        out.graph = g;
        return out;
    }
    CanonSearch s(g);
    Partition start(1);
    start[0].resize(g.n());
    std::iota(start[0].begin(), start[0].end(), 0);
    std::vector<int> prefix;
    s.search(std::move(start), prefix);
    out.labeling = s.best_labeling;
    out.graph = g.relabeled(out.labeling);
    out.automorphisms = std::move(s.autos);
    return out;
}

std::string canonical_key(const Graph& g) {
    return to_graph6(canonicalize(g).graph);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

namespace {

// Closure of the generator set applied to a seed orbit partition.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> full_automorphism_group(const Graph& g) {
    // Explicit group elements via closure of the generators; fine at the
    // sizes we enumerate attachments for.
    auto gens = canonicalize(g).automorphisms;
    int n = g.n();
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> group{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier) {
            for (const auto& gperm : gens) {
                std::vector<int> q(n);
                for (int v = 0; v < n; ++v) q[v] = gperm[p[v]];
                if (group.insert(q).second) next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
        if (group.size() > 200000)
            throw std::runtime_error("automorphism group too large to expand");
    }
    return {group.begin(), group.end()};
}

}  // namespace

std::vector<int> vertex_orbits(const Graph& g) {
    auto gens = canonicalize(g).automorphisms;
    UnionFind uf(g.n());
    for (const auto& a : gens)
        for (int v = 0; v < g.n(); ++v) uf.unite(v, a[v]);
    std::vector<int> orbit(g.n());
    for (int v = 0; v < g.n(); ++v) orbit[v] = uf.find(v);
    return orbit;
}

std::vector<std::pair<int, int>> ordered_pair_orbit_reps(const Graph& g) {
    auto group = full_automorphism_group(g);
    int n = g.n();
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    std::vector<std::pair<int, int>> reps;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b || seen[a][b]) continue;
            reps.emplace_back(a, b);
            for (const auto& p : group) seen[p[a]][p[b]] = true;
        }
    }
    return reps;
}

}  // namespace bedkit
