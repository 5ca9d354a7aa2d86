#include "hamfree/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "hamfree/graph6.hpp"

namespace hamfree {

namespace {

// Ordered partition of the vertex set as a list of cell masks. Refinement and
// the target-cell rule depend only on structure and cell order, never on
// vertex labels, so isomorphic graphs are processed in lockstep.
using Cells = std::vector<std::uint64_t>;

void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t si = 0; si < cells.size() && !changed; ++si) {
            const std::uint64_t splitter = cells[si];
            for (size_t ti = 0; ti < cells.size(); ++ti) {
                std::uint64_t cell = cells[ti];
                if (std::popcount(cell) < 2) continue;
                std::array<std::uint64_t, kMaxVertices + 1> buckets{};
                int maxc = 0;
                std::uint64_t rest = cell;
                while (rest) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    int c = std::popcount(g.neighbors(v) & splitter);
                    buckets[static_cast<size_t>(c)] |= bit(v);
                    maxc = std::max(maxc, c);
                }
                int nonempty = 0;
                for (int c = 0; c <= maxc; ++c)
                    if (buckets[static_cast<size_t>(c)]) ++nonempty;
                if (nonempty < 2) continue;
                Cells pieces;
                pieces.reserve(static_cast<size_t>(nonempty));
                for (int c = 0; c <= maxc; ++c)
                    if (buckets[static_cast<size_t>(c)]) pieces.push_back(buckets[static_cast<size_t>(c)]);
                cells[ti] = pieces[0];
                cells.insert(cells.begin() + static_cast<long>(ti) + 1, pieces.begin() + 1, pieces.end());
                changed = true;
                break;
            }
        }
    }
}

struct Searcher {
    const Graph& g;
    int n;
    std::vector<std::uint64_t> best_key;
    std::vector<int> best_pos;
    std::vector<std::vector<int>> gens;
    std::vector<int> prefix;

    explicit Searcher(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    std::vector<std::uint64_t> leaf_key(const std::vector<int>& vert_at) const {
        std::vector<std::uint64_t> key(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            std::uint64_t row = 0;
            for (int j = 0; j < n; ++j)
                if (g.adjacent(vert_at[static_cast<size_t>(i)], vert_at[static_cast<size_t>(j)]))
                    row |= bit(j);
            key[static_cast<size_t>(i)] = row;
        }
        return key;
    }

    void leaf(const Cells& cells) {
        std::vector<int> vert_at(static_cast<size_t>(n));
        std::vector<int> pos(static_cast<size_t>(n));
        for (size_t i = 0; i < cells.size(); ++i) {
            int v = std::countr_zero(cells[i]);
            vert_at[i] = v;
            pos[static_cast<size_t>(v)] = static_cast<int>(i);
        }
        auto key = leaf_key(vert_at);
        if (best_key.empty() || key < best_key) {
            best_key = std::move(key);
            best_pos = std::move(pos);
        } else if (key == best_key) {
            // Two labelings of the same labeled image compose to an automorphism.
            std::vector<int> best_vert(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) best_vert[static_cast<size_t>(best_pos[static_cast<size_t>(v)])] = v;
            std::vector<int> phi(static_cast<size_t>(n));
            bool identity = true;
            for (int v = 0; v < n; ++v) {
                phi[static_cast<size_t>(v)] = best_vert[static_cast<size_t>(pos[static_cast<size_t>(v)])];
                if (phi[static_cast<size_t>(v)] != v) identity = false;
            }
            if (!identity && gens.size() < 256) gens.push_back(std::move(phi));
        }
    }

    // Union-find orbits under the generators that fix the current prefix
    // pointwise; skipping a cell vertex equivalent to one already tried is
    // sound because the pruned subtree is the image of an explored one.
    bool equivalent_to_tried(int v, const std::vector<int>& tried) {
        if (tried.empty() || gens.empty()) return false;
        std::array<int, kMaxVertices> parent;
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[static_cast<size_t>(a)] = b;
        };
        for (const auto& phi : gens) {
            bool fixes_prefix = true;
            for (int p : prefix)
                if (phi[static_cast<size_t>(p)] != p) {
                    fixes_prefix = false;
                    break;
                }
            if (!fixes_prefix) continue;
            for (int u = 0; u < n; ++u) unite(u, phi[static_cast<size_t>(u)]);
        }
        int rv = find(v);
        for (int w : tried)
            if (find(w) == rv) return true;
        return false;
    }

    void search(Cells cells) {
        refine(g, cells);
        int target = -1;
        int target_size = kMaxVertices + 1;
        for (size_t i = 0; i < cells.size(); ++i) {
            int sz = std::popcount(cells[i]);
            if (sz >= 2 && sz < target_size) {
                target = static_cast<int>(i);
                target_size = sz;
            }
        }
        if (target < 0) {
            leaf(cells);
            return;
        }
        std::uint64_t cell = cells[static_cast<size_t>(target)];
        std::vector<int> tried;
        std::uint64_t rest = cell;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (equivalent_to_tried(v, tried)) continue;
            Cells child = cells;
            child[static_cast<size_t>(target)] = bit(v);
            child.insert(child.begin() + target + 1, cell & ~bit(v));
            prefix.push_back(v);
            search(std::move(child));
            prefix.pop_back();
            tried.push_back(v);
        }
    }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
    CanonicalLabeling result;
    int n = g.vertex_count();
    if (n == 0) {
        result.form.bytes = to_graph6(g);
        return result;
    }
    Searcher s(g);
    s.search(Cells{g.vertex_mask()});
    result.position = s.best_pos;
    result.form.bytes = to_graph6(g.relabeled(s.best_pos));
    for (int v = 0; v < n; ++v)
        if (s.best_pos[static_cast<size_t>(v)] == n - 1) result.last_vertex = v;
    result.automorphisms = std::move(s.gens);
    return result;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_copy(const Graph& g) {
    if (g.vertex_count() == 0) return g;
    return g.relabeled(canonical_labeling(g).position);
}

}  // namespace hamfree
