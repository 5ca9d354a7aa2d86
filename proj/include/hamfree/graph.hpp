#pragma once

// Compact undirected simple graphs on up to 64 vertices. One 64-bit word per
// vertex holds the neighborhood, so adjacency tests, neighborhood
// intersections and degree counts are single machine-word operations.
// Graphs are immutable after construction; every mutator is builder-style
// and returns a new value, which makes sharing across threads safe.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamfree {

inline constexpr int kMaxVertices = 64;

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(check_count(n)), adj_(static_cast<size_t>(n), 0) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
        for (auto [u, v] : edge_list) add_edge_unchecked(u, v);
    }

    int vertex_count() const { return n_; }

    std::uint64_t vertex_mask() const {
        return n_ == kMaxVertices ? ~std::uint64_t{0} : bit(n_) - 1;
    }

    bool adjacent(int u, int v) const { return (adj_[static_cast<size_t>(u)] >> v) & 1; }

    std::uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

    int degree(int v) const;

    long long edge_count() const;

    std::vector<std::pair<int, int>> edges() const;

    // Builders.
    Graph with_edge(int u, int v) const;
    Graph with_vertex(std::uint64_t nbrs) const;          // appends vertex n_
    Graph without_vertices(std::uint64_t victims) const;  // compacts labels
    Graph relabeled(const std::vector<int>& position) const;  // position[v] = new label

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static int check_count(int n) {
        if (n < 0 || n > kMaxVertices)
            throw capacity_error("vertex count " + std::to_string(n) + " outside 0.." +
                                 std::to_string(kMaxVertices));
        return n;
    }

    void add_edge_unchecked(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
        adj_[static_cast<size_t>(u)] |= bit(v);
        adj_[static_cast<size_t>(v)] |= bit(u);
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Degrees sorted nondecreasing, matching the d_1 <= ... <= d_n convention.
std::vector<int> degree_sequence(const Graph& g);

// Ordered multiset of part sizes for a complete multipartite graph. Kept
// sorted nonincreasing; part blocks are contiguous in this order.
class PartSizes {
public:
    explicit PartSizes(std::vector<int> sizes);

    const std::vector<int>& sizes() const { return sizes_; }
    int total() const { return total_; }
    int largest() const { return sizes_.empty() ? 0 : sizes_.front(); }
    int count() const { return static_cast<int>(sizes_.size()); }

private:
    std::vector<int> sizes_;
    int total_ = 0;
};

// Vertices 0..n-1 in contiguous blocks per part; edge iff different blocks.
Graph complete_multipartite(const PartSizes& parts);

// True iff g has no clique on r+1 vertices.
bool clique_number_at_most(const Graph& g, int r);

// True iff some r-subset of `allowed` induces a complete subgraph.
bool has_clique_in(const Graph& g, std::uint64_t allowed, int r);

bool is_bipartite(const Graph& g);

}  // namespace hamfree
