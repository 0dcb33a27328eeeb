#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "bedkit/bed.hpp"

namespace bedkit {

// ---------------------------------------------------------------------------
// Layout structure helpers
// ---------------------------------------------------------------------------

namespace {

struct ForestIndex {
    int nodes = 0;
    std::vector<int> parent;      // -1 for roots
    std::vector<int> depth;       // nodes on the path to the root, root = 1
    std::vector<uint64_t> desc;   // node -> descendant node mask (incl. self)
    std::vector<bool> is_root, is_leaf;
    bool ok = false;
    std::string error;
};

ForestIndex index_forest(const Graph& forest, const std::vector<int>& roots) {
    ForestIndex fi;
    fi.nodes = forest.n();
    if (fi.nodes > 64) {
        fi.error = "forest too large to index";
        return fi;
    }
    for (uint64_t b : blocks(forest).blocks)
        if (std::popcount(b) > 2) {
            fi.error = "forest contains a cycle";
            return fi;
        }
    fi.parent.assign(fi.nodes, -2);
    fi.depth.assign(fi.nodes, 0);
    fi.is_root.assign(fi.nodes, false);
    fi.is_leaf.assign(fi.nodes, false);
    auto comps = connected_components(forest);
    if (comps.size() != roots.size()) {
        fi.error = "need exactly one root per forest component";
        return fi;
    }
    for (int r : roots) {
        if (r < 0 || r >= fi.nodes || fi.is_root[r]) {
            fi.error = "bad root list";
            return fi;
        }
        fi.is_root[r] = true;
    }
    for (uint64_t c : comps) {
        int root = -1;
        uint64_t m = c;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (fi.is_root[v]) {
                if (root != -1) {
                    fi.error = "two roots in one component";
                    return fi;
                }
                root = v;
            }
        }
        if (root == -1) {
            fi.error = "component without root";
            return fi;
        }
        // BFS down from the root
        fi.parent[root] = -1;
        fi.depth[root] = 1;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int t = queue[qi];
            uint64_t nb = forest.neighbors(t);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (u == fi.parent[t]) continue;
                fi.parent[u] = t;
                fi.depth[u] = fi.depth[t] + 1;
                queue.push_back(u);
            }
        }
    }
    fi.desc.assign(fi.nodes, 0);
    std::vector<int> order(fi.nodes);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fi.depth[a] > fi.depth[b]; });
    for (int t : order) {
        fi.desc[t] |= uint64_t{1} << t;
        if (fi.parent[t] >= 0) fi.desc[fi.parent[t]] |= fi.desc[t];
    }
    for (int t = 0; t < fi.nodes; ++t) {
        int deg = forest.degree(t);
        fi.is_leaf[t] = fi.is_root[t] ? deg == 0 : deg == 1;
    }
    fi.ok = true;
    return fi;
}

}  // namespace

int layout_depth(const BlockTreeLayout& layout) {
    ForestIndex fi = index_forest(layout.forest, layout.roots);
    if (!fi.ok) throw std::invalid_argument("layout_depth: " + fi.error);
    int d = 0;
    for (int t = 0; t < fi.nodes; ++t) d = std::max(d, fi.depth[t]);
    return d;
}

LayoutReport validate_layout(const ClassSpec& spec, const Graph& g,
                             const BlockTreeLayout& layout) {
    LayoutReport rep;
    auto structural = [&](const std::string& msg) {
        rep.structural_ok = false;
        rep.valid = false;
        rep.violations.push_back("structural: " + msg);
    };
    ForestIndex fi = index_forest(layout.forest, layout.roots);
    if (!fi.ok) {
        structural(fi.error);
        return rep;
    }
    if ((int)layout.tau.size() != g.n()) {
        structural("tau must map every graph vertex");
        return rep;
    }
    if (g.n() > 0 && fi.nodes == 0) {
        structural("empty forest for a non-empty graph");
        return rep;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (layout.tau[v].empty()) {
            structural("tau image of vertex " + std::to_string(v) + " is empty");
            return rep;
        }
        for (int t : layout.tau[v])
            if (t < 0 || t >= fi.nodes) {
                structural("tau image of vertex " + std::to_string(v) + " out of range");
                return rep;
            }
    }

    auto violation = [&](const std::string& msg) {
        rep.valid = false;
        rep.violations.push_back(msg);
    };

    // (1) every tau(v) is an antichain
    auto comparable = [&](int a, int b) {
        return (fi.desc[a] >> b) & 1u || (fi.desc[b] >> a) & 1u;
    };
    for (int v = 0; v < g.n(); ++v) {
        const auto& img = layout.tau[v];
        for (size_t i = 0; i < img.size(); ++i)
            for (size_t j = i + 1; j < img.size(); ++j)
                if (comparable(img[i], img[j]))
                    violation("condition 1: tau(" + std::to_string(v) +
                              ") is not an antichain");
    }

    // D_t = vertices mapped into the subtree of t
    std::vector<uint64_t> node_image(fi.nodes, 0);  // tau^{-1}({t})
    for (int v = 0; v < g.n(); ++v)
        for (int t : layout.tau[v]) node_image[t] |= uint64_t{1} << v;
    std::vector<uint64_t> dset(fi.nodes, 0);
    for (int t = 0; t < fi.nodes; ++t) {
        uint64_t m = fi.desc[t];
        while (m) {
            int u = std::countr_zero(m);
            m &= m - 1;
            dset[t] |= node_image[u];
        }
    }

    for (int t = 0; t < fi.nodes; ++t) {
        Graph gt = g.induced_subgraph(dset[t]);
        if (!is_block_graph(gt))
            violation("condition 2: G_t at node " + std::to_string(t) +
                      " is not a block graph");
        if (!fi.is_leaf[t]) {
            if (std::popcount(node_image[t]) != 1)
                violation("condition 3: non-leaf " + std::to_string(t) +
                          " must have exactly one mapped vertex");
            if (spec.contains(gt))
                violation("condition 3: G_t at non-leaf " + std::to_string(t) +
                          " lies in the class");
        } else {
            if (!spec.contains(gt))
                violation("condition 4: G_t at leaf " + std::to_string(t) +
                          " is outside the class");
        }
    }

    // (5) antichains: depth-first over nodes, keeping pairwise incomparability
    std::vector<int> chosen;
    long long steps = 0;
    auto antichains = [&](auto&& self, int from, uint64_t dunion) -> void {
        if (++steps > 50'000'000)
            throw budget_error("validate_layout: antichain enumeration budget exceeded");
        if (chosen.size() >= 2) {
            if (is_biconnected_loose(g.induced_subgraph(dunion)))
                violation("condition 5: antichain {" + [&] {
                    std::string s;
                    for (size_t i = 0; i < chosen.size(); ++i)
                        s += (i ? "," : "") + std::to_string(chosen[i]);
                    return s;
                }() + "} induces a biconnected union");
        }
        for (int t = from; t < fi.nodes; ++t) {
            bool ok = true;
            for (int c : chosen)
                if (comparable(c, t)) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(t);
            self(self, t + 1, dunion | dset[t]);
            chosen.pop_back();
        }
    };
    antichains(antichains, 0, 0);
    return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive layout search over subtree profiles
// ---------------------------------------------------------------------------
//
// A subtree rooted at a node with vertex set D is summarized by its profile:
// the set of vertex-set unions achievable by antichains inside the subtree
// (as a bitset indexed by vertex masks). Subtrees compose: when children are
// attached, every cross-child combination of achievable unions must avoid
// inducing a biconnected graph; this checks condition (5) exactly once for
// every antichain of the final forest. Profiles are pruned to the minimal
// antichain under bitset inclusion, which is sound because a subset profile
// passes every check a superset passes.

namespace {

struct Bits {
    std::vector<uint64_t> w;
    explicit Bits(size_t universe = 0) : w((universe + 63) / 64, 0) {}
    void set(uint64_t i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
    bool subset_of(const Bits& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    void or_with(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            uint64_t m = w[i];
            while (m) {
                int b = std::countr_zero(m);
                m &= m - 1;
                f((uint64_t(i) << 6) | b);
            }
        }
    }
    bool operator==(const Bits& o) const { return w == o.w; }
};

struct LayoutSearch {
    const Graph& g;
    const ClassSpec& spec;
    int n;
    uint64_t full;
    size_t universe;
    std::vector<uint8_t> biconn;       // induced biconnected-loose per mask
    std::vector<uint8_t> block_graph;  // induced block graph per mask
    std::vector<uint8_t> in_class;     // spec membership per mask
    long long steps = 0;
    long long step_budget;

    struct WitnessNode {
        bool leaf;
        uint64_t dmask;
        int owner;                  // valid when !leaf
        std::vector<int> children;  // witness ids
    };
    std::vector<WitnessNode> pool;

    struct Profile {
        Bits unions;
        int witness;
    };
    // profiles per (mask, depth); empty vector = no valid subtree
    std::unordered_map<uint64_t, std::vector<Profile>> memo;

    LayoutSearch(const Graph& graph, const ClassSpec& s, long long budget)
        : g(graph), spec(s), n(graph.n()), full(graph.vertex_mask()),
          universe(uint64_t{1} << n), step_budget(budget) {
        biconn.resize(universe);
        block_graph.resize(universe);
        in_class.resize(universe);
        for (uint64_t m = 0; m < universe; ++m) {
            Graph sub = g.induced_subgraph(m);
            biconn[m] = is_biconnected_loose(sub);
            block_graph[m] = is_block_graph(sub);
            in_class[m] = spec.contains(sub);
        }
    }

    void bump() {
        if (++steps > step_budget)
            throw budget_error("layout search budget exceeded");
    }

    void insert_profile(std::vector<Profile>& list, Bits&& u, int witness) {
        for (const Profile& p : list)
            if (p.unions.subset_of(u)) return;  // dominated
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [&](const Profile& p) { return u.subset_of(p.unions); }),
                   list.end());
        list.push_back(Profile{std::move(u), witness});
    }

    const std::vector<Profile>& profiles(uint64_t dmask, int depth) {
        uint64_t key = dmask * 16 + (uint64_t)depth;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<Profile> list;
        if (depth >= 1 && block_graph[dmask]) {
            if (in_class[dmask]) {
                // leaf
                Bits u(universe);
                u.set(dmask);
                pool.push_back(WitnessNode{true, dmask, -1, {}});
                insert_profile(list, std::move(u), (int)pool.size() - 1);
            }
            if (depth >= 2 && !in_class[dmask]) {
                uint64_t owners = dmask;
                while (owners) {
                    int v = std::countr_zero(owners);
                    owners &= owners - 1;
                    uint64_t target = dmask & ~(uint64_t{1} << v);
                    if (target == 0) continue;  // an internal node needs children
                    std::vector<std::pair<uint64_t, int>> chosen;  // (mask, witness)
                    Bits ones(universe);
                    bool any_one = false;
                    cover(target, target, depth - 1, ones, any_one, chosen,
                          [&](const Bits& acc, const std::vector<std::pair<uint64_t, int>>& kids) {
                              Bits u = acc;
                              u.set(dmask);
                              std::vector<int> kid_ids;
                              for (auto& [m, w] : kids) kid_ids.push_back(w);
                              pool.push_back(WitnessNode{false, dmask, v, kid_ids});
                              insert_profile(list, std::move(u), (int)pool.size() - 1);
                          });
                }
            }
        }
        return memo.emplace(key, std::move(list)).first->second;
    }

    // Enumerate irredundant covers of `uncovered` by child subtrees drawn
    // from submasks of `scope`, threading the accumulated achievable-union
    // bitset and checking every new cross union against biconn.
    template <typename Emit>
    void cover(uint64_t uncovered, uint64_t scope, int child_depth, Bits& ones,
               bool any_one, std::vector<std::pair<uint64_t, int>>& chosen,
               const Emit& emit) {
        bump();
        if (uncovered == 0) {
            emit(ones, chosen);
            return;
        }
        int u = std::countr_zero(uncovered);
        // candidate child sets: submasks of scope containing u
        uint64_t rest = scope & ~(uint64_t{1} << u);
        uint64_t sub = rest;
        while (true) {
            uint64_t cand = sub | (uint64_t{1} << u);
            // copy: recursive profiles() calls may rehash the memo
            std::vector<Profile> plist = profiles(cand, child_depth);
            for (const Profile& p : plist) {
                bump();
                // cross-check p against everything achievable so far
                Bits next = ones;
                bool ok = true;
                if (any_one) {
                    std::vector<uint64_t> fresh;
                    ones.for_each([&](uint64_t a) {
                        if (!ok) return;
                        p.unions.for_each([&](uint64_t b) {
                            if (!ok) return;
                            uint64_t un = a | b;
                            if (biconn[un]) { ok = false; return; }
                            fresh.push_back(un);
                        });
                    });
                    if (ok) {
                        for (uint64_t f : fresh) next.set(f);
                        next.or_with(p.unions);
                    }
                } else {
                    next.or_with(p.unions);
                }
                if (!ok) continue;
                chosen.emplace_back(cand, p.witness);
                cover(uncovered & ~cand, scope, child_depth, next, true, chosen, emit);
                chosen.pop_back();
            }
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
    }

    struct FoundSignal {};

    // Roots: cover the whole vertex set, cross-checking across root subtrees.
    // Returns witness ids of the root subtrees, or nullopt.
    std::optional<std::vector<int>> forest_exists(int depth) {
        std::optional<std::vector<int>> found;
        std::vector<std::pair<uint64_t, int>> chosen;
        Bits ones(universe);
        try {
            cover(full, full, depth, ones, false, chosen,
                  [&](const Bits&, const std::vector<std::pair<uint64_t, int>>& kids) {
                      std::vector<int> ids;
                      for (auto& [m, w] : kids) ids.push_back(w);
                      found = ids;
                      throw FoundSignal{};  // unwind the enumeration at first hit
                  });
        } catch (const FoundSignal&) {
        }
        return found;
    }

    BlockTreeLayout build(const std::vector<int>& root_witnesses) {
        BlockTreeLayout out;
        int node_count = 0;
        std::vector<std::pair<int, int>> forest_edges;  // (parent, child)
        std::vector<std::vector<int>> tau(n);
        auto rec = [&](auto&& self, int wid) -> int {
            const WitnessNode& w = pool[wid];
            int id = node_count++;
            if (w.leaf) {
                uint64_t m = w.dmask;
                while (m) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    tau[v].push_back(id);
                }
            } else {
                tau[w.owner].push_back(id);
                for (int child : w.children) {
                    int cid = self(self, child);
                    forest_edges.emplace_back(id, cid);
                }
            }
            return id;
        };
        std::vector<int> roots;
        for (int wid : root_witnesses) roots.push_back(rec(rec, wid));
        Graph forest(node_count);
        for (auto [a, b] : forest_edges) forest.add_edge(a, b);
        out.forest = std::move(forest);
        out.roots = std::move(roots);
        out.tau = std::move(tau);
        return out;
    }
};

}  // namespace

int min_layout_depth(const ClassSpec& spec, const Graph& g, const LayoutOptions& opts) {
    if (g.n() == 0)
        throw std::invalid_argument("min_layout_depth: empty graph has no layout theory");
    if (g.n() > opts.oracle_cap)
        throw budget_error("min_layout_depth: graph larger than oracle cap " +
                           std::to_string(opts.oracle_cap));
    LayoutSearch ls(g, spec, opts.step_budget);
    for (int d = 1; d <= g.n() + 1; ++d)
        if (ls.forest_exists(d)) return d;
    throw std::logic_error("min_layout_depth: no layout found up to depth n+1");
}

BlockTreeLayout extract_layout(const ClassSpec& spec, const Graph& g,
                               const LayoutOptions& opts) {
    if (g.n() == 0) return BlockTreeLayout{Graph(0), {}, {}};
    if (g.n() > opts.extract_cap)
        throw budget_error("extract_layout: graph larger than cap " +
                           std::to_string(opts.extract_cap));
    int target = bed(spec, g) + 1;
    LayoutSearch ls(g, spec, opts.step_budget);
    auto witness = ls.forest_exists(target);
    if (!witness)
        throw std::logic_error("extract_layout: no layout of depth bed+1 found");
    return ls.build(*witness);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string layout_to_text(const BlockTreeLayout& layout) {
    std::ostringstream os;
    auto es = layout.forest.edges();
    os << "forest " << layout.forest.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) os << u << ' ' << v << '\n';
    os << "roots";
    for (int r : layout.roots) os << ' ' << r;
    os << '\n';
    for (size_t v = 0; v < layout.tau.size(); ++v) {
        os << "tau " << v << ':';
        for (int t : layout.tau[v]) os << ' ' << t;
        os << '\n';
    }
    return os.str();
}

BlockTreeLayout layout_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string word;
    if (!(is >> word) || word != "forest")
        throw std::invalid_argument("layout: expected \"forest\"");
    int nodes, edges;
    if (!(is >> nodes >> edges)) throw std::invalid_argument("layout: bad forest header");
    BlockTreeLayout out;
    out.forest = Graph(nodes);
    for (int i = 0; i < edges; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw std::invalid_argument("layout: bad forest edge");
        out.forest.add_edge(u, v);
    }
    if (!(is >> word) || word != "roots")
        throw std::invalid_argument("layout: expected \"roots\"");
    std::string line;
    std::getline(is, line);
    {
        std::istringstream ls(line);
        int r;
        while (ls >> r) out.roots.push_back(r);
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        int v;
        char colon;
        if (!(ls >> tag >> v >> colon) || tag != "tau" || colon != ':')
            throw std::invalid_argument("layout: bad tau line: " + line);
        if ((int)out.tau.size() <= v) out.tau.resize(v + 1);
        int t;
        while (ls >> t) out.tau[v].push_back(t);
    }
    return out;
}

}  // namespace bedkit
