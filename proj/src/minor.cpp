#include "bedkit/minor.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "bedkit/canonical.hpp"

namespace bedkit {

bool validate_model(const Graph& host, const Graph& pattern, const MinorModel& m) {
    if ((int)m.models.size() != pattern.n()) return false;
    uint64_t used = 0;
    for (uint64_t model : m.models) {
        if (model == 0 || (model & used)) return false;
        if (model & ~host.vertex_mask()) return false;
        if (!subset_connected(host, model)) return false;
        used |= model;
    }
    for (auto [p, q] : pattern.edges()) {
        bool joined = false;
        uint64_t a = m.models[p];
        while (a && !joined) {
            int v = std::countr_zero(a);
            a &= a - 1;
            if (host.neighbors(v) & m.models[q]) joined = true;
        }
        if (!joined) return false;
    }
    return true;
}

namespace {

struct MinorSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;            // pattern vertices, decreasing degree
    std::vector<uint64_t> assigned;    // per order position
    int np;

    MinorSearch(const Graph& h, const Graph& p) : host(h), pattern(p), np(p.n()) {
        order.resize(np);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return p.degree(a) > p.degree(b);
        });
        assigned.assign(np, 0);
    }

    bool edges_ok(int pos) {
        int p = order[pos];
        for (int prev = 0; prev < pos; ++prev) {
            int q = order[prev];
            if (!pattern.has_edge(p, q)) continue;
            bool joined = false;
            uint64_t a = assigned[pos];
            while (a && !joined) {
                int v = std::countr_zero(a);
                a &= a - 1;
                if (host.neighbors(v) & assigned[prev]) joined = true;
            }
            if (!joined) return false;
        }
        return true;
    }

    bool degree_ok(int pos) {
        // every pattern edge at p needs its own host edge leaving p's model
        uint64_t model = assigned[pos];
        int out = 0;
        uint64_t m = model;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            out += std::popcount(host.neighbors(v) & ~model);
        }
        return out >= pattern.degree(order[pos]);
    }

    // Grow the model of order[pos]. `avail` holds vertices still allowed to
    // join; each frontier vertex is decided once (join here or stay excluded
    // for the rest of this call), so every connected model is generated
    // exactly once.
    bool grow(int pos, uint64_t used, uint64_t avail, int budget) {
        if (edges_ok(pos) && degree_ok(pos)) {
            if (assign(pos + 1, used)) return true;
        }
        if (budget == 0) return false;
        uint64_t frontier = 0;
        uint64_t m = assigned[pos];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            frontier |= host.neighbors(v);
        }
        frontier &= avail;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            uint64_t bit = uint64_t{1} << v;
            avail &= ~bit;
            assigned[pos] |= bit;
            if (grow(pos, used | bit, avail, budget - 1)) return true;
            assigned[pos] &= ~bit;
        }
        return false;
    }

    bool assign(int pos, uint64_t used) {
        if (pos == np) return true;
        uint64_t free = host.vertex_mask() & ~used;
        int remaining_after = np - pos - 1;
        int budget = std::popcount(free) - remaining_after - 1;
        if (budget < 0) return false;
        uint64_t seeds = free;
        while (seeds) {
            int v = std::countr_zero(seeds);
            seeds &= seeds - 1;
            uint64_t bit = uint64_t{1} << v;
            assigned[pos] = bit;
            // every model is generated from its minimum vertex
            if (grow(pos, used | bit, free & ~bit & ~(bit - 1), budget)) return true;
        }
        assigned[pos] = 0;
        return false;
    }
};

}  // namespace

std::optional<MinorModel> has_minor(const Graph& host, const Graph& pattern) {
    if (pattern.n() == 0) return MinorModel{};  // K0 is a minor of everything
    if (pattern.n() > host.n() || pattern.edge_count() > host.edge_count())
        return std::nullopt;
    MinorSearch s(host, pattern);
    if (!s.assign(0, 0)) return std::nullopt;
    MinorModel m;
    m.models.assign(pattern.n(), 0);
    for (int i = 0; i < pattern.n(); ++i) m.models[s.order[i]] = s.assigned[i];
    return m;
}

bool excludes_all(const Graph& g, const std::vector<Graph>& patterns) {
    for (const Graph& p : patterns)
        if (has_minor(g, p)) return false;
    return true;
}

std::vector<Graph> one_step_minors(const Graph& g) {
    std::vector<Graph> out;
    std::set<std::string> seen;
    auto push = [&](Graph&& h) {
        if (seen.insert(canonical_key(h)).second) out.push_back(std::move(h));
    };
    for (int v = 0; v < g.n(); ++v) push(g.delete_vertex(v));
    for (auto [u, v] : g.edges()) {
        push(g.delete_edge(u, v));
        push(g.contract_edge(u, v));
    }
    return out;
}

bool is_minor_minimal_nonmember(const Graph& g,
                                const std::function<bool(const Graph&)>& membership) {
    if (membership(g)) return false;
    for (const Graph& h : one_step_minors(g))
        if (!membership(h)) return false;
    return true;
}

bool is_antichain(const std::vector<Graph>& gs) {
    for (size_t i = 0; i < gs.size(); ++i)
        for (size_t j = 0; j < gs.size(); ++j)
            if (i != j && has_minor(gs[j], gs[i])) return false;
    return true;
}

}  // namespace bedkit
