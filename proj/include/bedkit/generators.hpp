#ifndef BEDKIT_GENERATORS_HPP
#define BEDKIT_GENERATORS_HPP

#include <string>
#include <vector>

#include "bedkit/classes.hpp"
#include "bedkit/graph.hpp"
#include "bedkit/obstructions.hpp"

namespace bedkit {

// Disjoint union of g1 and g2 plus the edges a1-a2 and b1-b2. Vertices of g2
// are shifted by g1.n(). Attachment vertices within one factor must differ.
Graph parallel_join(const Graph& g1, int a1, int b1, const Graph& g2, int a2, int b2);

// Disjoint union of g1, g2, g3 with b1=a2, b2=a3, b3=a1 identified.
Graph triangular_gluing(const Graph& g1, int a1, int b1,
                        const Graph& g2, int a2, int b2,
                        const Graph& g3, int a3, int b3);

struct GeneratedGraph {
    Graph graph;
    std::string provenance;  // "join <g6> a b <g6> a b" or "glue <g6> a b ..."
};

// All pairwise non-isomorphic parallel joins (2 factors) and triangular
// gluings (3 factors) over members of obs_k, attachment pairs one per
// automorphism orbit. Every output is verified to be an obstruction at level
// k+1; a failure raises lemma_violation. Parallel joins are skipped at k=0
// when the. class is the edgeless one (the join lemma's side condition).
std::vector<GeneratedGraph> generate_next_level(const ClassSpec& spec,
                                                const ObstructionSet& obs_k);

bool is_outerplanar(const Graph& g);

struct WeakDual {
    // Node kinds: one per inner face, one per outer-boundary edge.
    struct Node {
        bool is_face = false;
        std::vector<int> boundary;        // face: boundary vertices in cyclic order
        std::pair<int, int> edge{-1, -1}; // edge node: the host edge
    };
    Graph tree;
    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> internal_edges;  // face-face tree edges
    std::vector<std::pair<int, int>> marginal_edges;  // face-edge tree edges
    std::vector<int> outer_cycle;                     // host outer face order
};

// Weak dual of the unique outerplanar embedding of a biconnected outerplanar
// graph on >= 3 vertices (outer face = the unique Hamiltonian cycle).
WeakDual weak_dual(const Graph& g);

struct OuterplanarDecomposition {
    bool is_join = false;  // otherwise a gluing
    std::vector<Graph> factors;
    std::vector<std::pair<int, int>> attachments;  // (a_i, b_i) per factor
};

// Inverse of the two constructions on outerplanar obstructions of
// spec^(k+1), k >= 1: factors are obstructions of spec^(k). Joins are tried
// before gluings. Throws lemma_violation if no decomposition exists.
OuterplanarDecomposition decompose_outerplanar_obstruction(const Graph& g,
                                                           const ClassSpec& spec,
                                                           int k);

// The 2 x t grid.
Graph ladder(int t);

// Members of the universal family L_{spec,t}: two t-vertex paths with the
// i-th path vertices identified into two distinct vertices of a graph from
// obs(B(spec)); one representative per isomorphism class.
std::vector<Graph> universal_family(const ClassSpec& spec, int t,
                                    const EnumerateOptions& opts = {});

}  // namespace bedkit

#endif
