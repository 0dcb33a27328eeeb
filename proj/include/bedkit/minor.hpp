#ifndef BEDKIT_MINOR_HPP
#define BEDKIT_MINOR_HPP

#include <functional>
#include <optional>
#include <vector>

#include "bedkit/graph.hpp"

namespace bedkit {

// Witness that pattern <= host: models[p] is the host-vertex mask of the
// branch set of pattern vertex p. Branch sets are connected, pairwise
// disjoint, and every pattern edge has a host edge between its models.
struct MinorModel {
    std::vector<uint64_t> models;
};

bool validate_model(const Graph& host, const Graph& pattern, const MinorModel& m);

// Exact minor containment by branch and bound over vertex assignments, with
// vertex-count and degree pruning. Pattern vertices are assigned in
// decreasing degree order.
std::optional<MinorModel> has_minor(const Graph& host, const Graph& pattern);

bool excludes_all(const Graph& g, const std::vector<Graph>& patterns);

// True iff g is a non-member and every single vertex deletion, edge deletion,
// and edge contraction yields a member. The membership predicate must be
// minor-closed on the tested neighborhood.
bool is_minor_minimal_nonmember(const Graph& g,
                                const std::function<bool(const Graph&)>& membership);

// All one-step minors of g (vertex deletions, edge deletions, contractions),
// deduplicated up to isomorphism.
std::vector<Graph> one_step_minors(const Graph& g);

bool is_antichain(const std::vector<Graph>& gs);

}  // namespace bedkit

#endif
