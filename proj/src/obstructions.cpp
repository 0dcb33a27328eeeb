#include "bedkit/obstructions.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "bedkit/canonical.hpp"

namespace bedkit {

namespace {

// Deterministic parallel filter: chunks are processed by workers, results
// merged in input order, so worker count never changes the output.
std::vector<Graph> parallel_filter(const std::vector<Graph>& candidates,
                                   const std::function<bool(const Graph&)>& pred,
                                   int workers) {
    if (workers <= 1 || candidates.size() < 16) {
        std::vector<Graph> out;
        for (const Graph& g : candidates)
            if (pred(g)) out.push_back(g);
        return out;
    }
    std::vector<char> keep(candidates.size(), 0);
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= candidates.size()) break;
                keep[i] = pred(candidates[i]) ? 1 : 0;
            }
        });
    }
    for (auto& t : pool) t.join();
    std::vector<Graph> out;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) out.push_back(candidates[i]);
    return out;
}

void sort_members(std::vector<Graph>& members) {
    std::sort(members.begin(), members.end(), [](const Graph& a, const Graph& b) {
        if (a.n() != b.n()) return a.n() < b.n();
        return canonical_key(a) < canonical_key(b);
    });
}

ObstructionSet enumerate_with_membership(const std::string& label, int level, int n_max,
                                         const std::function<bool(const Graph&)>& membership,
                                         const EnumerateOptions& opts, int workers) {
    std::vector<Graph> candidates =
        enumerate_graphs(n_max, [](const Graph& g) { return is_block_graph(g); }, opts);
    ObstructionSet out;
    out.class_label = label;
    out.level = level;
    out.n_max = n_max;
    out.members = parallel_filter(
        candidates,
        [&](const Graph& g) { return is_minor_minimal_nonmember(g, membership); },
        workers);
    sort_members(out.members);
    return out;
}

}  // namespace

ObstructionSet enumerate_obstructions(const ClassSpec& spec, int k, int n_max,
                                      const EnumerateOptions& opts, int workers) {
    auto membership = [&](const Graph& g) { return level_contains(spec, k, g); };
    auto out = enumerate_with_membership(spec.label(), k, n_max, membership, opts, workers);
    return out;
}

StructureReport check_structure(const ObstructionSet& obs) {
    StructureReport rep;
    for (size_t i = 0; i < obs.members.size(); ++i) {
        const Graph& z = obs.members[i];
        std::string tag = "member " + std::to_string(i) + " (" + to_graph6(z) + ")";
        if (!is_biconnected(z)) {
            rep.pass = false;
            rep.violations.push_back(tag + ": not biconnected");
        }
        for (int v = 0; v < z.n(); ++v) {
            if (z.degree(v) != 2) continue;
            uint64_t nb = z.neighbors(v);
            int a = std::countr_zero(nb);
            int b = std::countr_zero(nb & (nb - 1));
            if (!z.has_edge(a, b)) {
                rep.pass = false;
                rep.violations.push_back(tag + ": degree-2 vertex " + std::to_string(v) +
                                         " has non-adjacent neighbors");
            }
        }
    }
    return rep;
}

ObstructionSet block_closure_obstructions(const std::vector<Graph>& Z,
                                          const EnumerateOptions& opts, int workers) {
    if (Z.empty()) throw std::invalid_argument("block_closure_obstructions: empty Z");
    for (const Graph& h : Z)
        if (h.n() <= 1)
            throw std::invalid_argument("block_closure_obstructions: Z must be essential");
    if (!is_antichain(Z))
        throw std::invalid_argument("block_closure_obstructions: Z is not an antichain");
    int s = 0;
    for (const Graph& h : Z) s = std::max(s, h.n());
    int n_max = 2 * s - 1;
    ClassSpec base = ClassSpec::from_obstructions(Z);
    auto membership = [&](const Graph& g) { return block_closure_contains(base, g); };
    ObstructionSet out = enumerate_with_membership("B(" + base.label() + ")", 0, n_max,
                                                   membership, opts, workers);
    out.complete = true;  // size bound 2s-1 covers the whole obstruction set
    return out;
}

namespace {

bool reachable_by_contractions(const Graph& g, const Graph& target, int budget,
                               std::vector<std::pair<int, int>>& trail,
                               std::set<std::string>* seen) {
    if (g.n() == target.n())
        return g.edge_count() == target.edge_count() && are_isomorphic(g, target);
    if (budget == 0 || g.n() < target.n()) return false;
    for (auto [u, v] : g.edges()) {
        Graph h = g.contract_edge(u, v);
        if (seen && !seen->insert(canonical_key(h) + "#" + std::to_string(budget - 1)).second)
            continue;
        trail.emplace_back(u, v);
        if (reachable_by_contractions(h, target, budget - 1, trail, seen)) return true;
        trail.pop_back();
    }
    return false;
}

}  // namespace

TransformationWitness verify_transformation_bound(const Graph& g,
                                                  const std::vector<Graph>& Z) {
    for (size_t hi = 0; hi < Z.size(); ++hi) {
        const Graph& h = Z[hi];
        int bound = (int)blocks(h).blocks.size() - 1;
        int needed_contractions = g.n() - h.n();
        if (needed_contractions < 0 || needed_contractions > bound) continue;
        auto edges = g.edges();
        int m = (int)edges.size();
        TransformationWitness witness;
        bool found = false;
        std::vector<int> pick;
        // deletions first (subgraph step), then contractions
        std::function<void(int, Graph, int)> choose = [&](int from, Graph current,
                                                          int dels_left) {
            if (found) return;
            {
                std::vector<std::pair<int, int>> contractions;
                std::set<std::string> seen;
                if (reachable_by_contractions(current, h, needed_contractions,
                                              contractions, &seen)) {
                    witness.pattern_index = (int)hi;
                    for (int p : pick) witness.deletions.push_back(edges[p]);
                    witness.contractions = std::move(contractions);
                    found = true;
                    return;
                }
            }
            if (dels_left == 0) return;
            for (int e = from; e < m && !found; ++e) {
                auto [u, v] = edges[e];
                if (!current.has_edge(u, v)) continue;
                pick.push_back(e);
                choose(e + 1, current.delete_edge(u, v), dels_left - 1);
                pick.pop_back();
            }
        };
        choose(0, g, bound);
        if (found) return witness;
    }
    throw lemma_violation("verify_transformation_bound: no witness within |bc(H)|-1 bound");
}

std::string catalog_to_text(const ObstructionSet& obs) {
    std::ostringstream os;
    os << "catalog class=" << obs.class_label << " k=" << obs.level
       << " nmax=" << obs.n_max << " complete=" << (obs.complete ? 1 : 0) << "\n";
    for (const Graph& g : obs.members) os << to_graph6(g) << "\n";
    return os.str();
}

ObstructionSet catalog_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line.rfind("catalog ", 0) != 0)
        throw std::invalid_argument("catalog: missing header");
    ObstructionSet out;
    {
        std::istringstream hs(line.substr(8));
        std::string field;
        while (hs >> field) {
            auto eq = field.find('=');
            if (eq == std::string::npos) continue;
            std::string key = field.substr(0, eq), val = field.substr(eq + 1);
            if (key == "class") out.class_label = val;
            else if (key == "k") out.level = std::stoi(val);
            else if (key == "nmax") out.n_max = std::stoi(val);
            else if (key == "complete") out.complete = val == "1";
        }
    }
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        // construction provenance lines ("join ...", "glue ...") are skipped
        if (line.rfind("join ", 0) == 0 || line.rfind("glue ", 0) == 0) continue;
        out.members.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace bedkit
