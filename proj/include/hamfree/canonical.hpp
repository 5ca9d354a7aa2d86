#pragma once

// Canonical labeling by equitable refinement plus individualization
// backtracking, with orbit pruning from automorphisms discovered along the
// way. Two graphs get equal canonical forms iff they are isomorphic; the
// exhaustive permutation oracle for n <= 6 lives in the test suite.

#include <compare>
#include <string>
#include <vector>

#include "hamfree/graph.hpp"

namespace hamfree {

// Total-order key for an isomorphism class. The bytes are the graph6 line of
// the canonically relabeled graph, so keys sort, hash and print directly.
struct CanonicalForm {
    std::string bytes;

    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
    std::vector<int> position;  // position[v] = index of v in the canonical order
    CanonicalForm form;
    int last_vertex = -1;  // vertex mapped to the final canonical position
    std::vector<std::vector<int>> automorphisms;  // generators discovered (perm[v] = image)
};

CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

// Convenience: the graph relabeled into its canonical order.
Graph canonical_copy(const Graph& g);

}  // namespace hamfree
