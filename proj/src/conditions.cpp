#include "hamfree/conditions.hpp"

#include <stdexcept>

namespace hamfree {

namespace {

int d(const std::vector<int>& seq, int i) {  // 1-based
    return seq[static_cast<size_t>(i - 1)];
}

}  // namespace

std::optional<ConditionHit> chvatal_violation(const std::vector<int>& degseq,
                                              ChvatalVariant variant, int k) {
    int n = static_cast<int>(degseq.size());
    switch (variant) {
        case ChvatalVariant::Traceable:
            for (int i = 1; 2 * i <= n; ++i)
                if (d(degseq, i) <= i - 1 && d(degseq, n - i + 1) <= n - i - 1)
                    return ConditionHit{i, -1, 1};
            return std::nullopt;
        case ChvatalVariant::Hamiltonian:
            for (int i = 1; 2 * i <= n - 1; ++i)
                if (d(degseq, i) <= i && d(degseq, n - i) <= n - i - 1)
                    return ConditionHit{i, 0, 2};
            return std::nullopt;
        case ChvatalVariant::KHamiltonian:
            if (k < 0 || k > n - 3)
                throw std::invalid_argument("chvatal_violation: k outside 0..n-3");
            for (int ell = 0; ell <= k; ++ell)
                for (int i = 1; 2 * i <= n - 1 - ell; ++i)
                    if (d(degseq, i) <= i + ell && d(degseq, n - i - ell) <= n - i - 1)
                        return ConditionHit{i, ell, 3};
            return std::nullopt;
    }
    throw std::logic_error("bad variant");
}

std::optional<ConditionHit> berge_violation(const std::vector<int>& degseq) {
    int n = static_cast<int>(degseq.size());
    for (int i = 1; 2 * i <= n - 2; ++i)
        if (d(degseq, i) <= i + 1 && d(degseq, n - i - 1) <= n - i - 1)
            return ConditionHit{i, 1, 1};
    return std::nullopt;
}

std::optional<ConditionHit> kronk_violation(const std::vector<int>& degseq, int k) {
    int n = static_cast<int>(degseq.size());
    if (k < 0 || k > n - 3) throw std::invalid_argument("kronk_violation: k outside 0..n-3");
    for (int i = 1; 2 * i <= n - 1 - k; ++i)
        if (d(degseq, i) <= i + k) return ConditionHit{i, k, 1};
    return std::nullopt;
}

bool kronk_strong_holds(const std::vector<int>& degseq, int k) {
    int n = static_cast<int>(degseq.size());
    if (k < 0 || k > n - 2) throw std::invalid_argument("kronk_strong_holds: k outside 0..n-2");
    for (int i = 1; 2 * i < n - 1 - k; ++i)
        if (d(degseq, i) <= i + k) return false;
    int j = (n + 1 - k) / 2;
    if (j < 1 || j > n) return false;
    return 2 * d(degseq, j) > n - 1 + k;
}

std::optional<int> degree_hypothesis(const std::vector<int>& degseq, int ell) {
    if (ell < -1) throw std::invalid_argument("degree_hypothesis: ell must be >= -1");
    int n = static_cast<int>(degseq.size());
    for (int j = 1; 2 * j <= n - 1 - ell; ++j)
        if (d(degseq, j) <= j + ell) return j;
    return std::nullopt;
}

}  // namespace hamfree
