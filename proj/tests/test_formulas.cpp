#include <doctest.h>

#include "hamfree/constructions.hpp"
#include "hamfree/formulas.hpp"
#include "oracles.hpp"

using namespace hamfree;

TEST_CASE("turan_edges known values") {
    CHECK(turan_edges(10, 4) == 37);
    CHECK(turan_edges(16, 8) == 112);
    CHECK(turan_edges(6, 5) == 14);
    CHECK(turan_edges(8, 5) == 25);
    CHECK(turan_edges(8, 8) == 28);
    CHECK(turan_edges(5, 1) == 0);
    CHECK(turan_edges(7, 7) == 21);
    CHECK(turan_edges(5, 4) == 9);
}

TEST_CASE("turan_edges equals the balanced multipartite edge count") {
    for (int r = 1; r <= 10; ++r)
        for (int n = 0; n <= 40; ++n) {
            if (n > 40) continue;
            CHECK(turan_edges(n, r) == turan_graph(n, r).edge_count());
        }
}

TEST_CASE("turan_edges floor identity holds for r <= 7 and breaks at r = 8") {
    for (int r = 1; r <= 7; ++r)
        for (int n = 0; n <= 40; ++n)
            CHECK(turan_edges(n, r) == (r - 1) * 1LL * n * n / (2 * r));
    // The identity genuinely fails beyond r = 7.
    bool counterexample = false;
    for (int n = 0; n <= 40; ++n)
        if (turan_edges(n, 8) != 7LL * n * n / 16) counterexample = true;
    CHECK(counterexample);
    CHECK(turan_edges(12, 8) == 62);
    CHECK(7 * 12 * 12 / 16 == 63);
}

TEST_CASE("turan_edges sandwich bounds") {
    for (int r = 1; r <= 10; ++r)
        for (int n = 0; n <= 40; ++n) {
            // (r-1)/(2r) n^2 - r/8 <= e <= (r-1)/(2r) n^2, scaled by 8r.
            long long e = turan_edges(n, r);
            long long scaled = 8LL * r * e;
            long long upper = 4LL * (r - 1) * n * n;
            CHECK(scaled <= upper);
            CHECK(scaled >= upper - r * 1LL * r);
        }
}

TEST_CASE("edge_bound examples") {
    CHECK(edge_bound({PropertyKind::Hamiltonian, 0}, 7, 5).value == 15);
    CHECK(edge_bound({PropertyKind::Hamiltonian, 0}, 7, 5).in_bound_range);
    CHECK(edge_bound({PropertyKind::Hamiltonian, 0}, 8, 2).value == 15);
    CHECK(edge_bound({PropertyKind::Traceable, 0}, 6, 4).value == 9);
    CHECK(edge_bound({PropertyKind::Hamiltonian, 0}, 9, 5).value == 26);
}

TEST_CASE("edge_bound hypothesis ranges") {
    EdgeBound hb = edge_bound({PropertyKind::Hamiltonian, 0}, 10, 4);
    CHECK_FALSE(hb.in_bound_range);
    CHECK(hb.min_n_bound == 11);
    CHECK(edge_bound({PropertyKind::Hamiltonian, 0}, 11, 4).in_bound_range);
    CHECK(edge_bound({PropertyKind::Hamiltonian, 0}, 25, 3).min_n_bound == 26);
    CHECK(edge_bound({PropertyKind::HamiltonianConnected, 0}, 31, 3).min_n_bound == 32);

    // The k-path theorem records both the bound range and the stricter
    // characterization range.
    EdgeBound kp = edge_bound({PropertyKind::KPathHamiltonian, 1}, 17, 5);
    CHECK(kp.min_n_bound == 16);
    CHECK(kp.min_n_characterization == 19);
    CHECK(kp.in_bound_range);
    CHECK_FALSE(kp.in_characterization_range);
    EdgeBound kp8 = edge_bound({PropertyKind::KPathHamiltonian, 2}, 14, 8);
    CHECK(kp8.min_n_bound == 13);
    CHECK(kp8.min_n_characterization == 20);

    // Chorded pancyclicity is tightness-only.
    EdgeBound ch = edge_bound({PropertyKind::ChordedPancyclic, 0}, 12, 5);
    CHECK(ch.in_bound_range);
    CHECK_FALSE(ch.in_characterization_range);
    CHECK(ch.min_n_characterization == -1);

    // No triangle-free chorded theorem exists.
    CHECK(edge_bound({PropertyKind::ChordedPancyclic, 0}, 12, 2).min_n_bound == -1);
}

TEST_CASE("edge_bound r=2 values") {
    // Non-traceable: e(K_{n/2-1, n/2+1}) variants.
    CHECK(edge_bound({PropertyKind::Traceable, 0}, 8, 2).value == 15);
    CHECK(edge_bound({PropertyKind::Traceable, 0}, 9, 2).value == 18);
    CHECK(edge_bound({PropertyKind::Traceable, 0}, 7, 2).value == 10);
    // Non-Hamiltonian: for odd n the balanced bipartite graph itself.
    CHECK(edge_bound({PropertyKind::Hamiltonian, 0}, 9, 2).value == 20);
    CHECK(edge_bound({PropertyKind::HamiltonianConnected, 0}, 8, 2).value == 16);
    CHECK(edge_bound({PropertyKind::KHamiltonian, 1}, 8, 2).value == 16);
    CHECK(edge_bound({PropertyKind::KHamiltonian, 0}, 8, 2).value == 15);
    CHECK(edge_bound({PropertyKind::KHamiltonian, 1}, 9, 2).value == 20);
    CHECK(edge_bound({PropertyKind::Traceable, 0}, 8, 2).in_characterization_range);
    CHECK_FALSE(edge_bound({PropertyKind::Traceable, 0}, 7, 2).in_characterization_range);
}

TEST_CASE("count_cliques examples") {
    Graph k5 = complete_multipartite(PartSizes({1, 1, 1, 1, 1}));
    CHECK(count_cliques(k5, 3) == 10);
    CHECK(count_cliques(complete_multipartite(PartSizes({4, 1, 1, 1})), 3) == 13);
    CHECK(count_cliques(turan_graph(6, 5), 3) == 16);
    CHECK(count_cliques(k5, 2) == k5.edge_count());
    CHECK(count_cliques(Graph(4), 1) == 4);
}

TEST_CASE("count_cliques agrees with the subset-scan oracle") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(n, 0.5, rng);
        for (int t = 1; t <= n; ++t)
            CHECK(count_cliques(g, t) == oracle::count_cliques_ref(g, t));
    }
}

TEST_CASE("multipartite clique oracle") {
    CHECK(multipartite_cliques(PartSizes({4, 1, 1, 1}), 3) == 13);
    CHECK(multipartite_cliques(PartSizes({2, 1, 1, 1, 1}), 3) == 16);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> parts;
        int budget = 1 + static_cast<int>(rng() % 10);
        while (budget > 0) {
            int s = 1 + static_cast<int>(rng() % static_cast<unsigned>(budget));
            parts.push_back(s);
            budget -= s;
        }
        PartSizes ps(parts);
        Graph g = complete_multipartite(ps);
        for (int t = 1; t <= 4; ++t)
            CHECK(multipartite_cliques(ps, t) == oracle::count_cliques_ref(g, t));
    }
}
