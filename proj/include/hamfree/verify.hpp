#pragma once

// The theorem registry: computes extremal numbers and extremal-graph sets by
// exhaustion, compares them against the registry's predictions, and runs
// witness checks where exhaustion is out of budget. Reports are deterministic
// (canonical forms sorted) regardless of the job count.

#include <optional>
#include <string>
#include <vector>

#include "hamfree/constructions.hpp"
#include "hamfree/enumeration.hpp"
#include "hamfree/formulas.hpp"
#include "hamfree/graph.hpp"

namespace hamfree {

inline constexpr int kVerifyBudget = 10;  // largest n enumerated exhaustively

struct Metric {
    enum class Kind { Edges, Cliques };
    Kind kind = Kind::Edges;
    int t = 2;
};

struct ExtremalReport {
    std::string theorem;
    int n = 0;
    int r = 0;
    std::optional<int> k;
    std::optional<int> t;
    std::string metric = "edges";
    long long computed_max = -1;
    std::vector<std::string> computed_extremal;  // canonical graph6, sorted
    long long predicted_max = -1;
    std::vector<std::string> predicted_extremal;  // canonical graph6, sorted
    bool characterization_complete = false;  // predicted set claimed to be the whole argmax
    std::string verdict;  // match | mismatch | out_of_hypothesis | witness_only
    std::string note;
    long long runtime_ms = 0;
};

// Maximum of the metric over all enumerated n-vertex, K_{r+1}-free graphs
// without the property, with the full argmax set, compared to the registry
// prediction. witness_only skips the exhaustion and only validates that the
// predicted graphs are feasible and attain the predicted value.
ExtremalReport extremal_number(const Property& property, int n, int r, const Metric& metric,
                               bool witness_only = false, int jobs = 1);

struct WitnessCheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct WitnessReport {
    std::string graph_id;
    std::vector<WitnessCheckItem> checks;
    bool pass = false;
};

// Exceptional graphs with their recorded edge counts, clique bounds and
// property failures.
std::vector<std::string> witness_registry_ids();
WitnessReport witness_check(const std::string& graph_id);

struct DegreeTheoremReport {
    int r = 0;
    int ell = 0;
    int n = 0;
    bool in_hypothesis = false;
    long long bound = -1;
    long long graphs_checked = 0;
    long long hypothesis_hits = 0;
    std::vector<std::string> violations;     // graphs exceeding the bound (expect none)
    std::vector<std::string> equality_set;   // canonical graph6, sorted
    std::vector<std::string> predicted_lower;  // must be contained in equality_set
    std::vector<std::string> predicted_upper;  // equality_set must stay within this
    std::string verdict;
    long long runtime_ms = 0;
};

// For every enumerated K_{r+1}-free graph on n vertices satisfying the
// degree hypothesis at offset ell: e <= e(T_r(n-1)) + ell + 1, with the
// equality set sandwiched between the G-family and its permitted H-family
// extension.
DegreeTheoremReport verify_degree_theorem(int r, int ell, int n, int jobs = 1);

struct CliqueBoundReport {
    int t = 2;
    int m_max = 0;
    std::optional<int> r;  // set for the r-partite colex Turán variant
    int vertex_budget = 0;
    long long graphs_checked = 0;
    std::vector<long long> bounds;  // bound per edge count 0..m_max
    bool bounds_attained = false;
    std::string first_violation;  // canonical graph6 of a bound breaker, if any
    std::string verdict;
    long long runtime_ms = 0;
};

// Over all graphs with at most m_max edges inside the vertex budget
// (optionally K_{r+1}-free), confirms k_t <= k_t(colex_graph(m)) resp.
// k_t(colex_turan_graph(m, r)).
CliqueBoundReport verify_clique_bounds(int t, int m_max, std::optional<int> r, int jobs = 1);

struct FamilyCheckReport {
    int n = 0;
    int r = 0;
    int k = 0;
    bool gell_in_hypothesis = false;       // 2 <= r <= n-1, -1 <= k <= n-3
    bool prop36_in_hypothesis = false;     // the n-bound for the J^k characterization
    bool h_in_hypothesis = false;          // n >= k+5 for the H-family lemma
    long long members_checked = 0;
    std::vector<std::string> failures;     // human-readable claim failures
    std::string verdict;
    long long runtime_ms = 0;
};

// Family claims at offset k: every family member fails the claimed property;
// the non-k-path-Hamiltonian members of G^k are exactly J^k when the n-bound
// holds; H^k members failing the property are exactly the complete
// multipartite shape with one part of size (n+1-k)/2.
FamilyCheckReport family_characterization_check(int n, int r, int k);

}  // namespace hamfree
