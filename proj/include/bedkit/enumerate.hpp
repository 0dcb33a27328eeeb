#ifndef BEDKIT_ENUMERATE_HPP
#define BEDKIT_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "bedkit/graph.hpp"

namespace bedkit {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerateOptions {
    int cap = 9;  // configured hard cap on n_max
};

// All isomorphism classes on exactly n vertices, sorted by canonical key.
// Built by augmenting the (n-1)-vertex classes with one new vertex.
const std::vector<Graph>& graphs_on(int n, const EnumerateOptions& opts = {});

// One representative per isomorphism class with <= n_max vertices passing
// the filter, in deterministic (n, canonical key) order.
std::vector<Graph> enumerate_graphs(int n_max,
                                    const std::function<bool(const Graph&)>& filter = nullptr,
                                    const EnumerateOptions& opts = {});

}  // namespace bedkit

#endif
