#include "bedkit/enumerate.hpp"

#include <deque>
#include <map>
#include <mutex>

#include "bedkit/canonical.hpp"

namespace bedkit {

namespace {

std::mutex g_levels_mutex;
// deque: growth never invalidates references handed out to callers
std::deque<std::vector<Graph>> g_levels;  // g_levels[n] sorted by canonical key

void build_up_to(int n) {
    if ((int)g_levels.size() > n) return;
    if (g_levels.empty()) g_levels.push_back({Graph(0)});
    while ((int)g_levels.size() <= n) {
        int k = (int)g_levels.size();
        std::map<std::string, Graph> classes;
        for (const Graph& parent : g_levels[k - 1]) {
            uint64_t mask_limit = uint64_t{1} << (k - 1);
            for (uint64_t mask = 0; mask < mask_limit; ++mask) {
                Graph child(k);
                for (auto [u, v] : parent.edges()) child.add_edge(u, v);
                for (int v = 0; v < k - 1; ++v)
                    if ((mask >> v) & 1u) child.add_edge(v, k - 1);
                CanonicalForm cf = canonicalize(child);
                classes.emplace(to_graph6(cf.graph), cf.graph);
            }
        }
        std::vector<Graph> level;
        level.reserve(classes.size());
        for (auto& [key, g] : classes) level.push_back(std::move(g));
        g_levels.push_back(std::move(level));
    }
}

}  // namespace

const std::vector<Graph>& graphs_on(int n, const EnumerateOptions& opts) {
    if (n < 0) throw std::invalid_argument("graphs_on: negative n");
    if (n > opts.cap)
        throw budget_error("enumeration cap exceeded: n=" + std::to_string(n) +
                           " > cap=" + std::to_string(opts.cap));
    std::lock_guard<std::mutex> lock(g_levels_mutex);
    build_up_to(n);
    return g_levels[n];
}

std::vector<Graph> enumerate_graphs(int n_max,
                                    const std::function<bool(const Graph&)>& filter,
                                    const EnumerateOptions& opts) {
    std::vector<Graph> out;
    for (int n = 0; n <= n_max; ++n)
        for (const Graph& g : graphs_on(n, opts))
            if (!filter || filter(g)) out.push_back(g);
    return out;
}

}  // namespace bedkit
