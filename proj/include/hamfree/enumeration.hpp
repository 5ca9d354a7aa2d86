#pragma once

// Isomorph-free generation of all graphs on n vertices under monotone
// constraints, by canonical augmentation: a child is accepted only when
// deleting its canonically-last vertex recovers the parent's isomorphism
// class, so every class appears exactly once without any global seen-set.

#include <functional>
#include <istream>
#include <optional>
#include <stdexcept>

#include "hamfree/graph.hpp"

namespace hamfree {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumConstraints {
    int n = 0;
    std::optional<int> max_clique;  // keep graphs K_{max_clique+1}-free
    std::optional<long long> min_edges;
    std::optional<long long> max_edges;
    bool bipartite_only = false;
};

inline constexpr int kEnumerationBudget = 12;

// Emits exactly one representative per isomorphism class satisfying the
// constraints. With jobs > 1 the generation tree is split into independent
// subtrees at a fixed depth; the emitted sequence is identical for any job
// count. Rejects n beyond the soft budget; pipe externally generated graph6
// catalogs through read_graph6_stream for anything larger.
void enumerate_graphs(const EnumConstraints& constraints,
                      const std::function<void(const Graph&)>& emit, int jobs = 1);

// Parses one graph per line. Throws graph6_error with the line number
// prepended on the first invalid line.
void read_graph6_stream(std::istream& in, const std::function<void(const Graph&)>& emit);

}  // namespace hamfree
