#include "bedkit/bed.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bedkit/canonical.hpp"

namespace bedkit {

namespace {

// Descending degree, ties by position in the canonical labeling.
std::vector<int> deletion_order(const Graph& g) {
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> canon_pos = canonicalize(g).labeling;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return canon_pos[a] < canon_pos[b];
    });
    return order;
}

}  // namespace

int bed(const ClassSpec& spec, const Graph& g) {
    if (spec.contains(g)) return 0;
    std::string key = canonical_key(g);
    auto& memo = spec.memo();
    {
        std::lock_guard<std::mutex> lock(memo.mutex);
        auto it = memo.bed.find(key);
        if (it != memo.bed.end()) {
            ++memo.hits;
            return it->second;
        }
        ++memo.misses;
    }
    int result;
    if (!is_block_graph(g)) {
        result = 0;
        for (uint64_t b : blocks(g).blocks)
            result = std::max(result, bed(spec, g.induced_subgraph(b)));
    } else {
        result = g.n();  // bed <= n always: deleting everything reaches K0
        for (int v : deletion_order(g))
            result = std::min(result, 1 + bed(spec, g.delete_vertex(v)));
    }
    std::lock_guard<std::mutex> lock(memo.mutex);
    memo.bed.emplace(std::move(key), result);
    return result;
}

bool bed_bounded(const ClassSpec& spec, const Graph& g, int k) {
    if (k < 0) return false;
    if (spec.contains(g)) return true;
    {
        auto& memo = spec.memo();
        std::lock_guard<std::mutex> lock(memo.mutex);
        auto it = memo.bed.find(canonical_key(g));
        if (it != memo.bed.end()) {
            ++memo.hits;
            return it->second <= k;
        }
    }
    if (!is_block_graph(g)) {
        for (uint64_t b : blocks(g).blocks)
            if (!bed_bounded(spec, g.induced_subgraph(b), k)) return false;
        return true;
    }
    if (k == 0) return false;
    for (int v : deletion_order(g))
        if (bed_bounded(spec, g.delete_vertex(v), k - 1)) return true;
    return false;
}

int ed(const ClassSpec& spec, const Graph& g) {
    if (spec.contains(g)) return 0;
    std::string key = canonical_key(g);
    auto& memo = spec.memo();
    {
        std::lock_guard<std::mutex> lock(memo.mutex);
        auto it = memo.ed.find(key);
        if (it != memo.ed.end()) {
            ++memo.hits;
            return it->second;
        }
        ++memo.misses;
    }
    int result;
    if (!is_connected(g)) {
        result = 0;
        for (uint64_t c : connected_components(g))
            result = std::max(result, ed(spec, g.induced_subgraph(c)));
    } else {
        result = g.n();
        for (int v = 0; v < g.n(); ++v)
            result = std::min(result, 1 + ed(spec, g.delete_vertex(v)));
    }
    std::lock_guard<std::mutex> lock(memo.mutex);
    memo.ed.emplace(std::move(key), result);
    return result;
}

int td2(const Graph& g, int cap) {
    if (g.n() == 0) throw std::invalid_argument("td2: empty graph");
    if (g.n() > cap)
        throw budget_error("td2: graph larger than oracle cap " + std::to_string(cap));
    int n = g.n();
    // Constraint sets: a coloring fails iff some edge is monochromatic or
    // some vertex set inducing a biconnected subgraph has no unique color.
    // (A spanning biconnected subgraph on S exists iff G[S] is biconnected,
    // since adding edges preserves biconnectivity.)
    std::vector<uint64_t> constraints;
    for (auto [u, v] : g.edges())
        constraints.push_back((uint64_t{1} << u) | (uint64_t{1} << v));
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) < 3) continue;
        if (is_biconnected(g.induced_subgraph(mask))) constraints.push_back(mask);
    }
    std::vector<int> color(n, 0);
    int best = n;
    auto check = [&]() {
        for (uint64_t s : constraints) {
            int counts[kMaxVertices] = {0};
            uint64_t m = s;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                counts[color[v]]++;
            }
            bool unique = false;
            m = s;
            while (m && !unique) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (counts[color[v]] == 1) unique = true;
            }
            if (!unique) return false;
        }
        return true;
    };
    // Restricted-growth enumeration: one representative per color partition.
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (used >= best) return;
        if (v == n) {
            if (check()) best = used;
            return;
        }
        for (int c = 0; c <= used && c < best; ++c) {
            color[v] = c;
            self(self, v + 1, std::max(used, c + 1));
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace bedkit
