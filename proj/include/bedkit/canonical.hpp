#ifndef BEDKIT_CANONICAL_HPP
#define BEDKIT_CANONICAL_HPP

#include <string>
#include <vector>

#include "bedkit/graph.hpp"

namespace bedkit {

// Exact canonical labeling by iterative refinement over the coarsest stable
// partition plus individualization backtracking. Discovered automorphisms
// prune symmetric branches, which keeps complete graphs and other highly
// regular inputs cheap.
struct CanonicalForm {
    Graph graph;                       // canonically relabeled copy
    std::vector<int> labeling;         // labeling[v] = position of v in graph
    std::vector<std::vector<int>> automorphisms;  // generators, v -> image
};

CanonicalForm canonicalize(const Graph& g);

// graph6 string of the canonical relabeling; equal keys iff isomorphic.
std::string canonical_key(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// Orbits of single vertices under the automorphism group (orbit id per vertex).
std::vector<int> vertex_orbits(const Graph& g);

// One representative per orbit of ordered pairs (a, b), a != b, under the
// automorphism group.
std::vector<std::pair<int, int>> ordered_pair_orbit_reps(const Graph& g);

}  // namespace bedkit

#endif
