#ifndef BEDKIT_OBSTRUCTIONS_HPP
#define BEDKIT_OBSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "bedkit/classes.hpp"
#include "bedkit/enumerate.hpp"
#include "bedkit/graph.hpp"
#include "bedkit/minor.hpp"

namespace bedkit {

// Raised when a paper-backed guarantee fails to hold on concrete data; tests
// treat it as a failure signal, never as something to swallow.
struct lemma_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ObstructionSet {
    std::string class_label;
    int level = 0;
    int n_max = 0;
    bool complete = false;  // only lemma-backed enumerations may claim this
    std::vector<Graph> members;  // sorted by (n, canonical key)
};

// All minor-minimal non-members of spec^(k) on <= n_max vertices. Candidates
// are restricted to block graphs: every obstruction of a block closure is one
// (for a non-block graph, all blocks are proper minors, so minimality fails).
ObstructionSet enumerate_obstructions(const ClassSpec& spec, int k, int n_max,
                                      const EnumerateOptions& opts = {},
                                      int workers = 1);

struct StructureReport {
    bool pass = true;
    std::vector<std::string> violations;
};

// Asserts each member is biconnected and each degree-2 vertex has adjacent
// neighbors.
StructureReport check_structure(const ObstructionSet& obs);

// obs(B(excl(Z))) for an essential antichain Z, complete by the size bound
// 2*s(Z) - 1.
ObstructionSet block_closure_obstructions(const std::vector<Graph>& Z,
                                          const EnumerateOptions& opts = {},
                                          int workers = 1);

struct TransformationWitness {
    int pattern_index = -1;                         // which H in Z
    std::vector<std::pair<int, int>> deletions;     // edges of g, applied in order
    std::vector<std::pair<int, int>> contractions;  // edges of the intermediate graphs
};

// For g in obs(B(excl(Z))): finds H in Z and a sequence of at most
// |bc(H)|-1 edge deletions followed by at most |bc(H)|-1 contractions
// turning g into a graph isomorphic to H. Throws lemma_violation when no
// witness exists within the bound.
TransformationWitness verify_transformation_bound(const Graph& g,
                                                  const std::vector<Graph>& Z);

// Catalog format: provenance header line, then one graph6 line per member
// (optionally preceded by a construction line written by the generators).
std::string catalog_to_text(const ObstructionSet& obs);
ObstructionSet catalog_from_text(const std::string& text);

}  // namespace bedkit

#endif
