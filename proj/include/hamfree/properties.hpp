#pragma once

// Exact deciders for the six Hamiltonicity-type properties, with witnesses.
// The search core is depth-first extension over neighborhood words with
// connectivity and forced-degree pruning; a no-pruning reference decider for
// differential testing lives in the test suite.
//
// Small-n conventions: graphs on fewer than 3 vertices are not Hamiltonian;
// K_1 and K_2 are traceable; Hamiltonian-connectedness requires n >= 2 with
// every pair joined by a spanning path. "A path lies in a Hamiltonian cycle"
// means all its edges appear consecutively on the cycle.

#include <optional>
#include <vector>

#include "hamfree/graph.hpp"

namespace hamfree {

struct Witness {
    enum class Kind { Cycle, Path, PathBetween, None };
    Kind kind = Kind::None;
    std::vector<int> vertices;
};

std::optional<Witness> find_hamiltonian_cycle(const Graph& g);
std::optional<Witness> find_hamiltonian_path(const Graph& g);
std::optional<Witness> find_hamiltonian_path_between(const Graph& g, int u, int v);

bool is_hamiltonian(const Graph& g);
bool is_traceable(const Graph& g);

// Every ordered pair of distinct vertices joined by a spanning path.
bool is_hamiltonian_connected(const Graph& g);
// The lexicographically first pair with no spanning path, if any.
std::optional<std::pair<int, int>> hamiltonian_connected_failure(const Graph& g);

struct KPathResult {
    bool holds = false;
    std::vector<int> counterexample_path;  // a path on no Hamiltonian cycle
};

// Every path with at most k edges (including single vertices) lies on some
// Hamiltonian cycle; k = 0 coincides with Hamiltonicity. Requires 0<=k<=n-2.
KPathResult is_k_path_hamiltonian(const Graph& g, int k);

struct KHamResult {
    bool holds = false;
    std::vector<int> counterexample_deletion;  // deleting these leaves a non-Hamiltonian graph
};

// G - S is Hamiltonian for every S with |S| <= k. Requires 0 <= k <= n-3.
KHamResult is_k_hamiltonian(const Graph& g, int k);

struct ChordedResult {
    bool holds = false;
    int missing_length = -1;  // a length in 4..n with no chorded cycle
};

// Every length in 4..n admits a cycle with a chord. Requires n >= 4.
ChordedResult is_chorded_pancyclic(const Graph& g);

struct MultipartiteShortcut {
    bool hamiltonian = false;
    bool traceable = false;
};

// Closed-form answers for complete multipartite graphs: Hamiltonian iff the
// largest part has at most n/2 vertices (and n >= 3), traceable iff at most
// (n+1)/2.
MultipartiteShortcut multipartite_shortcuts(const PartSizes& parts);

namespace detail {

// Search primitives restricted to the vertices of `active`; exposed for the
// k-variant deciders and tests.
std::optional<std::vector<int>> ham_cycle_on(const Graph& g, std::uint64_t active);
std::optional<std::vector<int>> ham_path_between_on(const Graph& g, int u, int v,
                                                    std::uint64_t active);
std::optional<std::vector<int>> ham_path_on(const Graph& g, std::uint64_t active);

}  // namespace detail

}  // namespace hamfree
