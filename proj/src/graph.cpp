#include "hamfree/graph.hpp"

#include <algorithm>
#include <bit>

namespace hamfree {

int Graph::degree(int v) const { return std::popcount(adj_[static_cast<size_t>(v)]); }

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[static_cast<size_t>(v)]);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    Graph g = *this;
    g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::with_vertex(std::uint64_t nbrs) const {
    if (n_ >= kMaxVertices) throw capacity_error("with_vertex: already at 64 vertices");
    if (nbrs & ~vertex_mask()) throw std::invalid_argument("with_vertex: neighbor out of range");
    Graph g;
    g.n_ = n_ + 1;
    g.adj_ = adj_;
    g.adj_.push_back(nbrs);
    while (nbrs) {
        int v = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        g.adj_[static_cast<size_t>(v)] |= bit(n_);
    }
    return g;
}

Graph Graph::without_vertices(std::uint64_t victims) const {
    victims &= vertex_mask();
    std::vector<int> keep;
    keep.reserve(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v)
        if (!(victims & bit(v))) keep.push_back(v);
    Graph g(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) g.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::relabeled(const std::vector<int>& position) const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
        std::uint64_t row = 0;
        std::uint64_t nb = adj_[static_cast<size_t>(u)];
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            row |= bit(position[static_cast<size_t>(v)]);
        }
        g.adj_[static_cast<size_t>(position[static_cast<size_t>(u)])] = row;
    }
    return g;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) d[static_cast<size_t>(v)] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

PartSizes::PartSizes(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    for (int s : sizes_) {
        if (s < 1) throw std::invalid_argument("part sizes must be positive");
        total_ += s;
    }
    std::sort(sizes_.begin(), sizes_.end(), std::greater<int>());
}

Graph complete_multipartite(const PartSizes& parts) {
    int n = parts.total();
    if (n > kMaxVertices) throw capacity_error("complete multipartite graph exceeds 64 vertices");
    Graph g(n);
    int start = 0;
    std::uint64_t all = g.vertex_mask();
    std::vector<std::uint64_t> rows(static_cast<size_t>(n));
    for (int size : parts.sizes()) {
        std::uint64_t block = ((size == 64 ? ~std::uint64_t{0} : (bit(size) - 1)) << start) & all;
        for (int v = start; v < start + size; ++v) rows[static_cast<size_t>(v)] = all & ~block;
        start += size;
    }
    std::vector<std::pair<int, int>> edge_list;
    for (int u = 0; u < n; ++u) {
        std::uint64_t higher = rows[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            edge_list.emplace_back(u, v);
        }
    }
    return Graph(n, edge_list);
}

namespace {

bool clique_search(const Graph& g, std::uint64_t candidates, int need) {
    if (need == 0) return true;
    if (std::popcount(candidates) < need) return false;
    while (candidates) {
        int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        if (clique_search(g, candidates & g.neighbors(v), need - 1)) return true;
    }
    return false;
}

}  // namespace

bool has_clique_in(const Graph& g, std::uint64_t allowed, int r) {
    return clique_search(g, allowed & g.vertex_mask(), r);
}

bool clique_number_at_most(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("clique bound r must be >= 1");
    return !has_clique_in(g, g.vertex_mask(), r + 1);
}

bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            std::uint64_t nb = g.neighbors(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[static_cast<size_t>(v)] == -1) {
                    color[static_cast<size_t>(v)] = color[static_cast<size_t>(u)] ^ 1;
                    stack.push_back(v);
                } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace hamfree
