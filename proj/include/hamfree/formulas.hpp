#pragma once

// Exact closed-form quantities: Turán edge counts, the per-property edge
// bounds with their hypothesis ranges, and t-clique counting. Everything is
// integer arithmetic; equality claims must be exact.

#include <optional>
#include <string>

#include "hamfree/graph.hpp"

namespace hamfree {

enum class PropertyKind {
    Traceable,
    Hamiltonian,
    HamiltonianConnected,
    KPathHamiltonian,
    KHamiltonian,
    ChordedPancyclic,
};

struct Property {
    PropertyKind kind = PropertyKind::Hamiltonian;
    int k = 0;  // parameter for the k-variants, ignored otherwise
};

// Offset ell in the e(T_r(n-1)) + ell + 1 bound pattern: -1 traceable,
// 0 Hamiltonian/chorded, 1 Hamiltonian-connected, k for the k-variants.
int property_offset(const Property& p);

std::string property_name(const Property& p);
std::optional<PropertyKind> property_from_name(const std::string& name);

long long binom2(long long x);

// Edge count of the Turán graph T_r(n), computed from part sizes.
long long turan_edges(int n, int r);

struct EdgeBound {
    long long value = -1;  // the bound; -1 when no theorem covers this (property, r)
    bool in_bound_range = false;
    bool in_characterization_range = false;
    int min_n_bound = -1;  // smallest n the bound is proven for; -1 = none
    int min_n_characterization = -1;
};

// Maximum edge count among non-`property`, K_{r+1}-free graphs on n vertices
// as given by the theorem registry, with the n-ranges in which the bound and
// the extremal characterization are proven. For the k-path variant these two
// ranges genuinely differ and both are reported.
EdgeBound edge_bound(const Property& property, int n, int r);

// Number of t-vertex subsets inducing complete subgraphs, by depth-first
// extension over increasing labels. k_2 equals the edge count.
long long count_cliques(const Graph& g, int t);

// k_t of a complete multipartite graph: the elementary symmetric polynomial
// of the part sizes. Used as an independent oracle in the verifier.
long long multipartite_cliques(const PartSizes& parts, int t);

}  // namespace hamfree
