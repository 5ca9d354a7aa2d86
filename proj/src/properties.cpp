#include "hamfree/properties.hpp"

#include <bit>
#include <stdexcept>

namespace hamfree {

namespace detail {

namespace {

// Everything reachable from `seed` inside `allowed`.
std::uint64_t reach(const Graph& g, std::uint64_t allowed, std::uint64_t seed) {
    std::uint64_t seen = seed & allowed;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v) & allowed & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen;
}

struct CycleSearch {
    const Graph& g;
    std::uint64_t active;
    int start;
    std::vector<int> path;

    bool feasible(int cur, std::uint64_t used) const {
        std::uint64_t rem = active & ~used;
        if (!rem) return true;
        if (!(g.neighbors(start) & rem)) return false;
        // Each unfinished vertex still needs two cycle neighbors among the
        // unfinished set, the current endpoint and the start.
        std::uint64_t scan = rem;
        std::uint64_t ends = bit(cur) | bit(start);
        while (scan) {
            int w = std::countr_zero(scan);
            scan &= scan - 1;
            if (std::popcount(g.neighbors(w) & ((rem & ~bit(w)) | ends)) < 2) return false;
        }
        return reach(g, rem | bit(cur), bit(cur)) == (rem | bit(cur));
    }

    bool extend(int cur, std::uint64_t used) {
        if (used == active) return g.adjacent(cur, start);
        if (!feasible(cur, used)) return false;
        std::uint64_t cand = g.neighbors(cur) & active & ~used;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(v);
            if (extend(v, used | bit(v))) return true;
            path.pop_back();
        }
        return false;
    }
};

struct PathBetweenSearch {
    const Graph& g;
    std::uint64_t active;
    int target;
    std::vector<int> path;

    bool feasible(int cur, std::uint64_t used) const {
        std::uint64_t rem = active & ~used;  // target stays in rem until the end
        std::uint64_t scan = rem & ~bit(target);
        while (scan) {
            int w = std::countr_zero(scan);
            scan &= scan - 1;
            if (std::popcount(g.neighbors(w) & ((rem & ~bit(w)) | bit(cur))) < 2) return false;
        }
        if (!(g.neighbors(target) & ((rem & ~bit(target)) | bit(cur)))) return false;
        return reach(g, rem | bit(cur), bit(cur)) == (rem | bit(cur));
    }

    bool extend(int cur, std::uint64_t used) {
        std::uint64_t rem = active & ~used;
        if (rem == bit(target)) {
            if (!g.adjacent(cur, target)) return false;
            path.push_back(target);
            return true;
        }
        if (!feasible(cur, used)) return false;
        std::uint64_t cand = g.neighbors(cur) & rem & ~bit(target);
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(v);
            if (extend(v, used | bit(v))) return true;
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> ham_cycle_on(const Graph& g, std::uint64_t active) {
    active &= g.vertex_mask();
    if (std::popcount(active) < 3) return std::nullopt;
    int start = std::countr_zero(active);
    CycleSearch s{g, active, start, {start}};
    if (s.extend(start, bit(start))) return s.path;
    return std::nullopt;
}

std::optional<std::vector<int>> ham_path_between_on(const Graph& g, int u, int v,
                                                    std::uint64_t active) {
    active &= g.vertex_mask();
    if (u == v) throw std::invalid_argument("ham_path_between: endpoints must differ");
    if (!(active & bit(u)) || !(active & bit(v))) return std::nullopt;
    if (active == (bit(u) | bit(v))) {
        if (g.adjacent(u, v)) return std::vector<int>{u, v};
        return std::nullopt;
    }
    PathBetweenSearch s{g, active, v, {u}};
    if (s.extend(u, bit(u))) return s.path;
    return std::nullopt;
}

std::optional<std::vector<int>> ham_path_on(const Graph& g, std::uint64_t active) {
    active &= g.vertex_mask();
    int count = std::popcount(active);
    if (count == 0) return std::nullopt;
    if (count == 1) return std::vector<int>{std::countr_zero(active)};
    if (g.vertex_count() < kMaxVertices) {
        // Traceable iff the join with one universal vertex is Hamiltonian.
        Graph aug = g.with_vertex(active);
        int extra = g.vertex_count();
        auto cycle = ham_cycle_on(aug, active | bit(extra));
        if (!cycle) return std::nullopt;
        std::vector<int> path;
        size_t len = cycle->size();
        size_t at = 0;
        while ((*cycle)[at] != extra) ++at;
        for (size_t i = 1; i < len; ++i) path.push_back((*cycle)[(at + i) % len]);
        return path;
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!(active & bit(u))) continue;
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!(active & bit(v))) continue;
            if (auto p = ham_path_between_on(g, u, v, active)) return p;
        }
    }
    return std::nullopt;
}

}  // namespace detail

std::optional<Witness> find_hamiltonian_cycle(const Graph& g) {
    auto order = detail::ham_cycle_on(g, g.vertex_mask());
    if (!order) return std::nullopt;
    return Witness{Witness::Kind::Cycle, std::move(*order)};
}

std::optional<Witness> find_hamiltonian_path(const Graph& g) {
    auto order = detail::ham_path_on(g, g.vertex_mask());
    if (!order) return std::nullopt;
    return Witness{Witness::Kind::Path, std::move(*order)};
}

std::optional<Witness> find_hamiltonian_path_between(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw std::invalid_argument("vertex out of range");
    auto order = detail::ham_path_between_on(g, u, v, g.vertex_mask());
    if (!order) return std::nullopt;
    return Witness{Witness::Kind::PathBetween, std::move(*order)};
}

bool is_hamiltonian(const Graph& g) { return detail::ham_cycle_on(g, g.vertex_mask()).has_value(); }

bool is_traceable(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return detail::ham_path_on(g, g.vertex_mask()).has_value();
}

std::optional<std::pair<int, int>> hamiltonian_connected_failure(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!detail::ham_path_between_on(g, u, v, g.vertex_mask())) return std::make_pair(u, v);
    return std::nullopt;
}

bool is_hamiltonian_connected(const Graph& g) {
    if (g.vertex_count() < 2) return false;
    return !hamiltonian_connected_failure(g).has_value();
}

namespace {

// Is the given path (as a consecutive segment) on some Hamiltonian cycle?
// Equivalent to a spanning back-path from its last to its first vertex in the
// graph with the path's interior removed.
bool path_on_some_ham_cycle(const Graph& g, const std::vector<int>& path) {
    std::uint64_t interior = 0;
    for (size_t i = 1; i + 1 < path.size(); ++i) interior |= bit(path[i]);
    std::uint64_t allowed = g.vertex_mask() & ~interior;
    return detail::ham_path_between_on(g, path.back(), path.front(), allowed).has_value();
}

struct PathEnumerator {
    const Graph& g;
    int target_len;
    std::vector<int> path;
    std::uint64_t used = 0;

    // Visits every simple path with exactly target_len edges once (the copy
    // with front < back), returning false to abort early.
    template <typename F>
    bool visit(F&& check) {
        for (int s = 0; s < g.vertex_count(); ++s) {
            path.assign(1, s);
            used = bit(s);
            if (!step(std::forward<F>(check))) return false;
        }
        return true;
    }

    template <typename F>
    bool step(F&& check) {
        if (static_cast<int>(path.size()) == target_len + 1) {
            if (path.front() > path.back()) return true;
            return check(path);
        }
        std::uint64_t cand = g.neighbors(path.back()) & ~used;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(v);
            used |= bit(v);
            bool keep = step(std::forward<F>(check));
            used &= ~bit(v);
            path.pop_back();
            if (!keep) return false;
        }
        return true;
    }
};

}  // namespace

KPathResult is_k_path_hamiltonian(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k < 0 || k > n - 2)
        throw std::invalid_argument("is_k_path_hamiltonian requires 0 <= k <= n-2");
    if (!is_hamiltonian(g)) return {false, {0}};
    KPathResult result{true, {}};
    for (int len = 1; len <= k && result.holds; ++len) {
        PathEnumerator en{g, len};
        en.visit([&](const std::vector<int>& p) {
            if (path_on_some_ham_cycle(g, p)) return true;
            result = {false, p};
            return false;
        });
    }
    return result;
}

KHamResult is_k_hamiltonian(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k < 0 || k > n - 3)
        throw std::invalid_argument("is_k_hamiltonian requires 0 <= k <= n-3");
    std::uint64_t full = g.vertex_mask();
    std::vector<int> subset;
    auto rec = [&](auto&& self, int first, int remaining, std::uint64_t mask) -> bool {
        if (remaining == 0) return detail::ham_cycle_on(g, full & ~mask).has_value();
        for (int v = first; v < n; ++v) {
            subset.push_back(v);
            bool ok = self(self, v + 1, remaining - 1, mask | bit(v));
            if (!ok) return false;
            subset.pop_back();
        }
        return true;
    };
    for (int size = 0; size <= k; ++size) {
        subset.clear();
        if (!rec(rec, 0, size, 0)) return {false, subset};
    }
    return {true, {}};
}

namespace {

struct ChordedCycleSearch {
    const Graph& g;
    int length;
    int anchor;
    std::vector<int> path;
    std::uint64_t used = 0;

    bool has_chord() const {
        int c = length;
        for (int i = 0; i < c; ++i)
            for (int j = i + 2; j < c; ++j) {
                if (i == 0 && j == c - 1) continue;  // cycle edge, not a chord
                if (g.adjacent(path[static_cast<size_t>(i)], path[static_cast<size_t>(j)])) return true;
            }
        return false;
    }

    bool extend() {
        int placed = static_cast<int>(path.size());
        if (placed == length) return g.adjacent(path.back(), anchor) && has_chord();
        std::uint64_t cand = g.neighbors(path.back()) & ~used;
        // Anchor is the cycle minimum; reflections deduped via second vertex.
        cand &= ~(bit(anchor + 1) - 1);
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (placed == length - 1 && path.size() >= 2 && v < path[1]) continue;
            path.push_back(v);
            used |= bit(v);
            if (extend()) return true;
            used &= ~bit(v);
            path.pop_back();
        }
        return false;
    }
};

bool exists_chorded_cycle(const Graph& g, int length) {
    for (int a = 0; a + length <= g.vertex_count(); ++a) {
        ChordedCycleSearch s{g, length, a, {a}, bit(a)};
        if (s.extend()) return true;
    }
    return false;
}

}  // namespace

ChordedResult is_chorded_pancyclic(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4) throw std::invalid_argument("is_chorded_pancyclic requires n >= 4");
    for (int length = 4; length <= n; ++length)
        if (!exists_chorded_cycle(g, length)) return {false, length};
    return {true, -1};
}

MultipartiteShortcut multipartite_shortcuts(const PartSizes& parts) {
    int n = parts.total();
    int m = parts.largest();
    MultipartiteShortcut out;
    out.hamiltonian = n >= 3 && 2 * m <= n;
    out.traceable = n <= 1 || 2 * m <= n + 1;
    return out;
}

}  // namespace hamfree
