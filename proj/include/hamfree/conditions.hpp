#pragma once

// Degree-sequence conditions (Chvátal, Berge, Kronk) used as necessary
// conditions for the non-properties, plus the shared degree hypothesis of the
// edge-bound theorems. Indices are 1-based to match d_1 <= ... <= d_n and all
// range boundaries use exact integer comparisons.

#include <optional>
#include <vector>

namespace hamfree {

struct ConditionHit {
    int index = 0;  // 1-based i
    int ell = 0;    // offset used (-1 traceability, 0 Hamiltonicity, l for k-variants)
    int clause = 0; // which theorem part fired
};

enum class ChvatalVariant { Traceable, Hamiltonian, KHamiltonian };

// Least (ell, i) firing the requested part of the Chvátal-type conditions;
// degseq must be nondecreasing. The k parameter matters only for the
// k-Hamiltonian variant.
std::optional<ConditionHit> chvatal_violation(const std::vector<int>& degseq,
                                              ChvatalVariant variant, int k = 0);

// Least i with d_i <= i+1 and d_{n-i-1} <= n-i-1 over 1 <= i <= (n-2)/2.
std::optional<ConditionHit> berge_violation(const std::vector<int>& degseq);

// Least i with d_i <= i+k over 1 <= i <= (n-1-k)/2. Requires 0 <= k <= n-3.
std::optional<ConditionHit> kronk_violation(const std::vector<int>& degseq, int k);

// The stronger Kronk hypothesis: d_i > i+k for all 1 <= i < (n-1-k)/2 and
// d_{(n+1-k)/2} > (n-1+k)/2; when it holds the graph is k-path Hamiltonian.
// A non-integral index (n-k even) is evaluated at its floor, which only
// strengthens the hypothesis. Requires 0 <= k <= n-2.
bool kronk_strong_holds(const std::vector<int>& degseq, int k);

// Least j in 1 <= j <= (n-1-ell)/2 with d_j <= j+ell: the shared hypothesis
// of the K_{r+1}-free edge-bound theorems. Requires ell >= -1.
std::optional<int> degree_hypothesis(const std::vector<int>& degseq, int ell);

}  // namespace hamfree
