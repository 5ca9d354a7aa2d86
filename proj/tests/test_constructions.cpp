#include <doctest.h>

#include <set>

#include "hamfree/canonical.hpp"
#include "hamfree/constructions.hpp"
#include "hamfree/formulas.hpp"
#include "oracles.hpp"

using namespace hamfree;

TEST_CASE("turan_graph part profiles and edge counts") {
    Graph t = turan_graph(6, 5);
    CHECK(t.vertex_count() == 6);
    CHECK(t.edge_count() == 14);
    CHECK(degree_sequence(t) == std::vector<int>{4, 4, 5, 5, 5, 5});
    CHECK(turan_graph(8, 5).edge_count() == 25);
    CHECK(turan_graph(4, 4) == complete_multipartite(PartSizes({1, 1, 1, 1})));
    CHECK(turan_graph(0, 3).vertex_count() == 0);
}

TEST_CASE("colex_graph small cases") {
    CHECK(canonical_form(colex_graph(3)) ==
          canonical_form(complete_multipartite(PartSizes({1, 1, 1}))));
    // m = 4: K_3 plus a pendant at its first vertex.
    Graph c4 = colex_graph(4);
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(degree_sequence(c4) == std::vector<int>{1, 2, 2, 3});
    CHECK(colex_graph(0).vertex_count() == 0);
    CHECK(colex_graph(1).vertex_count() == 2);
    // m = C(n-1,2)+1 is K_{n-1} plus a pendant edge.
    for (int n = 4; n <= 9; ++n) {
        Graph g = colex_graph(binom2(n - 1) + 1);
        CHECK(g.vertex_count() == n);
        auto deg = degree_sequence(g);
        CHECK(deg.front() == 1);
        CHECK(deg.back() == n - 2 + 1);
    }
}

TEST_CASE("colex_graph has no isolated vertices and exactly m edges") {
    for (long long m = 0; m <= 60; ++m) {
        Graph g = colex_graph(m);
        CHECK(g.edge_count() == m);
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) > 0);
    }
}

TEST_CASE("colex_turan_graph boundary and monotone nesting") {
    // At m = e(T_r(n)) the construction is the Turan graph itself (n >= 2;
    // m = 0 is the null graph since the vertex set is the union of the edges).
    for (int r = 2; r <= 8; ++r)
        for (int n = 2; n <= 9; ++n) {
            Graph g = colex_turan_graph(turan_edges(n, r), r);
            CHECK(canonical_form(g) == canonical_form(turan_graph(n, r)));
        }
    CHECK(colex_turan_graph(0, 3).vertex_count() == 0);
    CHECK(colex_turan_graph(1, 2).edge_count() == 1);
    CHECK(colex_turan_graph(1, 2).vertex_count() == 2);
}

TEST_CASE("colex_turan_graph is K_{r+1}-free with m edges") {
    for (int r = 2; r <= 8; ++r)
        for (long long m = 0; m <= 300; ++m) {
            Graph g = colex_turan_graph(m, r);
            CHECK(g.edge_count() == m);
            CHECK(clique_number_at_most(g, r));
            for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) > 0);
        }
}

TEST_CASE("colex_turan_graph(38, 4) is a G^0 member on 11 vertices") {
    Graph g = colex_turan_graph(38, 4);
    CHECK(g.vertex_count() == 11);
    auto members = family_members({Family::GEll, 11, 4, 0});
    std::set<std::string> forms;
    for (const auto& mem : members) forms.insert(canonical_form(mem).bytes);
    CHECK(forms.count(canonical_form(g).bytes) == 1);
}

TEST_CASE("g_star matches the colex Turan construction") {
    // For ell = -1 the colex Turan graph has no isolated vertex, so G* is the
    // colex graph padded back to n vertices.
    for (int r = 2; r <= 6; ++r)
        for (int n = std::max(r, 4); n <= 12; ++n)
            for (int ell = -1; ell <= 3; ++ell) {
                if (ell + 1 > n - 2) continue;
                long long m = turan_edges(n - 1, r) + ell + 1;
                Graph direct;
                try {
                    direct = g_star(n, r, ell);
                } catch (const std::invalid_argument&) {
                    continue;  // attachment does not fit at tiny n
                }
                Graph ct = colex_turan_graph(m, r);
                while (ct.vertex_count() < n) ct = ct.with_vertex(0);
                CHECK(canonical_form(direct) == canonical_form(ct));
            }
}

TEST_CASE("G family: known member counts") {
    CHECK(family_members({Family::GEll, 7, 5, 0}).size() == 2);
    CHECK(family_members({Family::GEll, 9, 5, 0}).size() == 2);
    CHECK(family_members({Family::GEll, 6, 4, -1}).size() == 1);
    CHECK(family_members({Family::GEll, 11, 4, -1}).size() == 1);
    // T_r(n-1) plus isolated vertex is the unique ell = -1 member.
    auto iso = family_members({Family::GEll, 8, 3, -1});
    REQUIRE(iso.size() == 1);
    CHECK(degree_sequence(iso[0]).front() == 0);
}

TEST_CASE("G family members have the right edge count and degree") {
    for (int r = 3; r <= 5; ++r)
        for (int n = r + 2; n <= 12; ++n)
            for (int ell = -1; ell <= 3; ++ell) {
                if (ell > n - 3) continue;
                auto members = family_members({Family::GEll, n, r, ell});
                for (const auto& g : members) {
                    CHECK(g.vertex_count() == n);
                    CHECK(g.edge_count() == turan_edges(n - 1, r) + ell + 1);
                    CHECK(clique_number_at_most(g, r));
                    auto deg = degree_sequence(g);
                    if (ell + 1 < deg[1]) CHECK(deg.front() == ell + 1);
                }
            }
}

TEST_CASE("G family is complete against subset brute force") {
    // Every K_{r+1}-free way to attach a degree-(ell+1) vertex to T_r(n-1),
    // deduped by isomorphism, must match the attachment-vector enumeration.
    for (int r = 2; r <= 4; ++r)
        for (int n = r + 1; n <= 9; ++n)
            for (int ell = -1; ell <= 3; ++ell) {
                if (ell > n - 3) continue;
                Graph host = turan_graph(n - 1, r);
                std::set<std::uint64_t> brute;
                std::uint64_t full = host.vertex_mask();
                for (std::uint64_t mask = 0;; ++mask) {
                    if (std::popcount(mask & full) == ell + 1) {
                        Graph g = host.with_vertex(mask & full);
                        if (clique_number_at_most(g, r)) brute.insert(oracle::brute_canonical_code(g));
                    }
                    if (mask >= full) break;
                }
                auto members = family_members({Family::GEll, n, r, ell});
                std::set<std::uint64_t> ours;
                for (const auto& g : members) ours.insert(oracle::brute_canonical_code(g));
                CHECK(ours == brute);
            }
}

TEST_CASE("J family: attachment parts capped at (k+2)/2") {
    auto g1 = family_members({Family::GEll, 16, 5, 1});
    auto j1 = family_members({Family::JK, 16, 5, 1});
    CHECK(j1.size() <= g1.size());
    for (const auto& spec_att : family_attachments({Family::JK, 16, 5, 1}))
        for (int c : spec_att.counts) CHECK(2 * c <= 3);
    // For k = 0 the two families coincide: a degree-1 neighborhood is traceable.
    CHECK(family_members({Family::JK, 12, 4, 0}).size() ==
          family_members({Family::GEll, 12, 4, 0}).size());
}

TEST_CASE("H family: membership and structure") {
    auto h = family_members({Family::HEll, 9, 5, 0});
    CHECK(h.size() == 5);
    Graph k51111 = complete_multipartite(PartSizes({5, 1, 1, 1, 1}));
    std::set<std::string> forms;
    for (const auto& g : h) forms.insert(canonical_form(g).bytes);
    CHECK(forms.count(canonical_form(k51111).bytes) == 1);
    // Empty on parity mismatch.
    CHECK(family_members({Family::HEll, 9, 5, 1}).empty());
    // K_{4,1,1,1} is an H^0 member at (7,5): host K_4 plus three added vertices.
    auto h75 = family_members({Family::HEll, 7, 5, 0});
    Graph k4111 = complete_multipartite(PartSizes({4, 1, 1, 1}));
    std::set<std::string> forms75;
    for (const auto& g : h75) forms75.insert(canonical_form(g).bytes);
    CHECK(forms75.count(canonical_form(k4111).bytes) == 1);
    // K_{6,2,2,1} is an H^0 member at (11,4).
    auto h114 = family_members({Family::HEll, 11, 4, 0});
    Graph k6221 = complete_multipartite(PartSizes({6, 2, 2, 1}));
    bool found = false;
    for (const auto& g : h114)
        if (canonical_form(g) == canonical_form(k6221)) found = true;
    CHECK(found);
}

TEST_CASE("H family members decompose as claimed") {
    for (auto [n, r, ell] : std::vector<std::tuple<int, int, int>>{
             {9, 5, 0}, {6, 4, -1}, {8, 4, -1}, {11, 4, 0}, {8, 5, 1}}) {
        int host_n = (n + 1 + ell) / 2;
        int j_count = (n - 1 - ell) / 2;
        auto members = family_members({Family::HEll, n, r, ell});
        for (const auto& g : members) {
            CHECK(g.vertex_count() == n);
            CHECK(clique_number_at_most(g, r));
            // Exactly j_count vertices of degree (n-1+ell)/2 forming an
            // independent set, and the rest inducing T_r(host_n).
            std::uint64_t low = 0;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == (n - 1 + ell) / 2) low |= bit(v);
            CHECK(std::popcount(low) >= j_count);
            // The added block is recoverable: the last j_count vertices.
            std::uint64_t added = 0;
            for (int v = host_n; v < n; ++v) added |= bit(v);
            for (int u = host_n; u < n; ++u)
                for (int v = u + 1; v < n; ++v) CHECK_FALSE(g.adjacent(u, v));
            Graph host = g.without_vertices(added);
            CHECK(canonical_form(host) == canonical_form(turan_graph(host_n, r)));
        }
    }
}

TEST_CASE("family lists are sorted by canonical form and duplicate-free") {
    for (auto family : {Family::GEll, Family::JK, Family::HEll}) {
        auto members = family_members({family, 10, 4, 1});
        std::vector<std::string> forms;
        for (const auto& g : members) forms.push_back(canonical_form(g).bytes);
        auto sorted = forms;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        CHECK(forms == sorted);
    }
}
