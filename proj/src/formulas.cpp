#include "hamfree/formulas.hpp"

#include <bit>
#include <stdexcept>

namespace hamfree {

int property_offset(const Property& p) {
    switch (p.kind) {
        case PropertyKind::Traceable: return -1;
        case PropertyKind::Hamiltonian: return 0;
        case PropertyKind::HamiltonianConnected: return 1;
        case PropertyKind::ChordedPancyclic: return 0;
        case PropertyKind::KPathHamiltonian: return p.k;
        case PropertyKind::KHamiltonian: return p.k;
    }
    throw std::logic_error("bad property kind");
}

std::string property_name(const Property& p) {
    switch (p.kind) {
        case PropertyKind::Traceable: return "trace";
        case PropertyKind::Hamiltonian: return "ham";
        case PropertyKind::HamiltonianConnected: return "hamconn";
        case PropertyKind::KPathHamiltonian: return "kpath";
        case PropertyKind::KHamiltonian: return "kham";
        case PropertyKind::ChordedPancyclic: return "chorded";
    }
    throw std::logic_error("bad property kind");
}

std::optional<PropertyKind> property_from_name(const std::string& name) {
    if (name == "trace") return PropertyKind::Traceable;
    if (name == "ham") return PropertyKind::Hamiltonian;
    if (name == "hamconn") return PropertyKind::HamiltonianConnected;
    if (name == "kpath") return PropertyKind::KPathHamiltonian;
    if (name == "kham") return PropertyKind::KHamiltonian;
    if (name == "chorded") return PropertyKind::ChordedPancyclic;
    return std::nullopt;
}

long long binom2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

long long turan_edges(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("turan_edges requires n >= 0, r >= 1");
    long long q = n / r, s = n % r;
    return binom2(n) - (r - s) * binom2(q) - s * binom2(q + 1);
}

namespace {

// Smallest n for which the bound of the r >= 3 theorems is proven.
int min_n_bound_r3(const Property& p, int r) {
    switch (p.kind) {
        case PropertyKind::Traceable: return r == 3 ? 20 : 1;
        case PropertyKind::Hamiltonian: return r == 3 ? 26 : (r == 4 ? 11 : 1);
        case PropertyKind::HamiltonianConnected: return r == 3 ? 32 : (r == 4 ? 16 : 11);
        case PropertyKind::ChordedPancyclic: return r == 3 ? 26 : (r == 4 ? 11 : 4);
        case PropertyKind::KPathHamiltonian:
            return r == 3 ? 6 * p.k + 26 : (r <= 7 ? 5 * p.k + 11 : 2 * p.k + 9);
        case PropertyKind::KHamiltonian:
            return r == 3 ? 6 * p.k + 26 : (r <= 7 ? 6 * p.k + 11 : 2 * p.k + 9);
    }
    throw std::logic_error("bad property kind");
}

// Smallest n for which the extremal characterization is proven. The k-path
// theorem uses a stronger bound than its companion edge bound; chorded
// pancyclicity states tightness only, so it has no characterization range.
int min_n_char_r3(const Property& p, int r) {
    switch (p.kind) {
        case PropertyKind::ChordedPancyclic: return -1;
        case PropertyKind::KPathHamiltonian:
            return r == 3 ? 6 * p.k + 26 : (r <= 7 ? 6 * p.k + 2 * r + 3 : 2 * p.k + 2 * r);
        default: return min_n_bound_r3(p, r);
    }
}

}  // namespace

EdgeBound edge_bound(const Property& p, int n, int r) {
    if (r < 2) throw std::invalid_argument("edge_bound requires r >= 2");
    EdgeBound out;
    bool k_variant =
        p.kind == PropertyKind::KPathHamiltonian || p.kind == PropertyKind::KHamiltonian;
    if (k_variant && p.k < 0) throw std::invalid_argument("k must be >= 0");

    if (r >= 3) {
        out.min_n_bound = min_n_bound_r3(p, r);
        out.min_n_characterization = min_n_char_r3(p, r);
        out.value = turan_edges(n - 1, r) + property_offset(p) + 1;
        out.in_bound_range = n >= out.min_n_bound && (!k_variant || p.k <= n - 3);
        out.in_characterization_range =
            out.min_n_characterization >= 0 && n >= out.min_n_characterization &&
            (!k_variant || p.k <= n - 3);
        return out;
    }

    // r = 2: unbalanced complete bipartite extremal numbers.
    long long half_lo = n / 2, half_hi = (n + 1) / 2;
    switch (p.kind) {
        case PropertyKind::Traceable:
            out.value = (half_lo - 1) * (half_hi + 1);
            out.min_n_bound = 6;
            break;
        case PropertyKind::Hamiltonian:
        case PropertyKind::KPathHamiltonian:
            out.value = (half_hi - 1) * (half_lo + 1);
            out.min_n_bound = 3;
            break;
        case PropertyKind::HamiltonianConnected:
            out.value = half_lo * half_hi;
            out.min_n_bound = 3;
            break;
        case PropertyKind::KHamiltonian:
            if (n % 2 == 1 || p.k >= 1)
                out.value = half_lo * half_hi;
            else
                out.value = half_lo * half_lo - 1;
            out.min_n_bound = 3;
            break;
        case PropertyKind::ChordedPancyclic:
            // No triangle-free chorded-pancyclicity theorem exists.
            return out;
    }
    out.min_n_characterization = p.kind == PropertyKind::Traceable ? 8 : -1;
    out.in_bound_range = n >= out.min_n_bound && (!k_variant || p.k <= n - 3);
    out.in_characterization_range = out.min_n_characterization >= 0 &&
                                    n >= out.min_n_characterization &&
                                    (!k_variant || p.k <= n - 3);
    return out;
}

namespace {

long long clique_extensions(const Graph& g, std::uint64_t candidates, int depth) {
    if (depth == 0) return 1;
    if (std::popcount(candidates) < depth) return 0;
    long long total = 0;
    while (candidates) {
        int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        total += clique_extensions(g, candidates & g.neighbors(v), depth - 1);
    }
    return total;
}

}  // namespace

long long count_cliques(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("count_cliques requires t >= 1");
    return clique_extensions(g, g.vertex_mask(), t);
}

long long multipartite_cliques(const PartSizes& parts, int t) {
    if (t < 1) throw std::invalid_argument("multipartite_cliques requires t >= 1");
    // Elementary symmetric polynomial e_t over the part sizes.
    std::vector<long long> e(static_cast<size_t>(t) + 1, 0);
    e[0] = 1;
    for (int size : parts.sizes())
        for (int j = t; j >= 1; --j) e[static_cast<size_t>(j)] += e[static_cast<size_t>(j - 1)] * size;
    return e[static_cast<size_t>(t)];
}

}  // namespace hamfree
