#pragma once

// Builders and enumerators for the named graphs and families: Turán graphs,
// colex and r-partite colex Turán graphs, the G* attachment graph, and the
// G^ell / H^ell / J^k families, each complete up to isomorphism.

#include <vector>

#include "hamfree/graph.hpp"

namespace hamfree {

// Complete r-partite graph on n vertices with parts as balanced as possible.
Graph turan_graph(int n, int r);

// First m pairs of naturals in colex order: the largest K_p with C(p,2) <= m
// plus, if needed, one vertex adjacent to the first remaining vertices.
// No isolated vertices; m = 0 gives the null graph.
Graph colex_graph(long long m);

// First m colex pairs {i, j} with i != j (mod r): T_r(n) with
// e(T_r(n)) <= m < e(T_r(n+1)) plus one vertex taking the remaining edges,
// its neighbors spread round-robin over the other residue classes.
Graph colex_turan_graph(long long m, int r);

// T_r(n-1) plus a vertex whose neighborhood induces T_{r-1}(ell+1) and is
// disjoint from a smallest part. Isomorphic to
// colex_turan_graph(e(T_r(n-1)) + ell + 1, r).
Graph g_star(int n, int r, int ell);

enum class Family { GEll, HEll, JK };

struct FamilySpec {
    Family family = Family::GEll;
    int n = 0;
    int r = 2;
    int ell = -1;
};

// Per-part neighbor counts of the exceptional vertex over T_r(n-1). Within a
// part the neighbors are its first `count` vertices (any choice is
// isomorphic); counts within equal-size parts are kept sorted so the vector
// is an isomorphism invariant.
struct AttachmentVector {
    std::vector<int> counts;  // per part, parts in nonincreasing size order
};

// All members of the requested family, pairwise non-isomorphic, sorted by
// canonical form. H^ell is empty when n = ell (mod 2); that is not an error.
std::vector<Graph> family_members(const FamilySpec& spec);

// The attachment vectors realizing G^ell_{n,r} (with J^k filtering applied
// for Family::JK), in the order family_members generates members.
std::vector<AttachmentVector> family_attachments(const FamilySpec& spec);

}  // namespace hamfree
