#ifndef BEDKIT_BED_HPP
#define BEDKIT_BED_HPP

#include <string>
#include <vector>

#include "bedkit/classes.hpp"
#include "bedkit/enumerate.hpp"
#include "bedkit/graph.hpp"

namespace bedkit {

// Exact block elimination distance of g to spec.
//
// The recursion branches on "g is not a block graph" rather than "g is not
// biconnected": block decomposition makes no progress on block graphs (e.g.
// bc(K2) = {K2}), so block graphs outside the class take the vertex-deletion
// branch. bed(K0) = 0 (max over an empty block set).
int bed(const ClassSpec& spec, const Graph& g);

// Equivalent to bed(spec, g) <= k, with budget pruning.
bool bed_bounded(const ClassSpec& spec, const Graph& g, int k);

// Classical elimination distance (component splitting), comparison oracle.
int ed(const ClassSpec& spec, const Graph& g);

// Minimum colors in a biconnected centered coloring: every connected
// subgraph that is a block graph must see some color exactly once.
// Exhaustive over color partitions; tiny graphs only.
int td2(const Graph& g, int cap = 7);

// --- G-block tree layouts ----------------------------------------------------

// The certificate triple (F, R, tau). tau maps each graph vertex to a
// non-empty antichain of forest nodes.
struct BlockTreeLayout {
    Graph forest;
    std::vector<int> roots;
    std::vector<std::vector<int>> tau;  // graph vertex -> forest nodes
};

// Max number of forest nodes on a root-to-leaf path.
int layout_depth(const BlockTreeLayout& layout);

struct LayoutReport {
    bool structural_ok = true;  // well-formedness, distinct from condition violations
    bool valid = true;
    std::vector<std::string> violations;
};

// Checks the five layout conditions against g and spec. Condition (5) is
// evaluated over all non-trivial antichains C of the forest, on the graph
// induced by the union of the subtree vertex sets; "biconnected" there
// includes K2 (connected, >= 2 vertices, no cut vertex), otherwise the
// split of a bridge across two nodes would pass.
LayoutReport validate_layout(const ClassSpec& spec, const Graph& g,
                             const BlockTreeLayout& layout);

struct LayoutOptions {
    int oracle_cap = 7;        // min_layout_depth vertex cap
    int extract_cap = 12;      // extract_layout vertex cap
    long long step_budget = 200'000'000;
};

// Minimum depth over all valid layouts, by exhaustive bounded search.
// Requires a non-empty graph with at most oracle_cap vertices.
int min_layout_depth(const ClassSpec& spec, const Graph& g,
                     const LayoutOptions& opts = {});

// A valid layout of depth bed(spec, g) + 1, found by bounded search at that
// depth. K0 gets the empty layout.
BlockTreeLayout extract_layout(const ClassSpec& spec, const Graph& g,
                               const LayoutOptions& opts = {});

// Text form: "forest <nodes> <edges>", edge lines, "roots ...", "tau v: ..."
// lines; round-trips losslessly.
std::string layout_to_text(const BlockTreeLayout& layout);
BlockTreeLayout layout_from_text(const std::string& text);

}  // namespace bedkit

#endif
