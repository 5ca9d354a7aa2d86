#include "hamfree/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hamfree/canonical.hpp"
#include "hamfree/formulas.hpp"

namespace hamfree {

namespace {

std::vector<int> balanced_parts(int n, int r) {
    std::vector<int> sizes;
    int q = n / r, s = n % r;
    for (int i = 0; i < s; ++i) sizes.push_back(q + 1);
    for (int i = s; i < r && q > 0; ++i) sizes.push_back(q);
    return sizes;
}

}  // namespace

Graph turan_graph(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("turan_graph requires n >= 0, r >= 1");
    if (n == 0) return Graph(0);
    return complete_multipartite(PartSizes(balanced_parts(n, r)));
}

Graph colex_graph(long long m) {
    if (m < 0) throw std::invalid_argument("colex_graph requires m >= 0");
    if (m == 0) return Graph(0);
    int p = 2;
    while (binom2(p + 1) <= m) ++p;
    long long rem = m - binom2(p);
    int n = p + (rem > 0 ? 1 : 0);
    if (n > kMaxVertices) throw capacity_error("colex graph exceeds 64 vertices");
    Graph g(n);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) g = g.with_edge(i, j);
    for (int i = 0; i < rem; ++i) g = g.with_edge(i, p);
    return g;
}

Graph colex_turan_graph(long long m, int r) {
    if (m < 0 || r < 2) throw std::invalid_argument("colex_turan_graph requires m >= 0, r >= 2");
    if (m == 0) return Graph(0);
    int n = 1;
    while (n < kMaxVertices && turan_edges(n + 1, r) <= m) ++n;
    long long rem = m - turan_edges(n, r);
    if (rem > 0 && n >= kMaxVertices)
        throw capacity_error("colex Turan graph exceeds 64 vertices");
    // Host T_r(n) under the residue labeling: vertex v sits in class v mod r.
    Graph g(n + (rem > 0 ? 1 : 0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u % r != v % r) g = g.with_edge(u, v);
    for (int v = 0; rem > 0; ++v) {
        if (v % r == n % r) continue;
        g = g.with_edge(v, n);
        --rem;
    }
    return g;
}

Graph g_star(int n, int r, int ell) {
    if (r < 2 || n < 2 || ell < -1)
        throw std::invalid_argument("g_star requires r >= 2, n >= 2, ell >= -1");
    std::vector<int> parts = balanced_parts(n - 1, r);
    int host_parts = static_cast<int>(parts.size());
    int d = ell + 1;
    // The avoided smallest part is an empty residue class when the host has
    // fewer than r nonempty parts, so all host parts stay usable then.
    int usable = host_parts < r ? host_parts : std::max(host_parts - 1, 0);
    std::vector<int> counts(parts.size(), 0);
    if (d > 0) {
        if (usable == 0) throw std::invalid_argument("g_star: no parts to attach to");
        for (int i = 0; i < usable; ++i) counts[static_cast<size_t>(i)] = d / usable + (i < d % usable ? 1 : 0);
        for (int i = 0; i < usable; ++i)
            if (counts[static_cast<size_t>(i)] > parts[static_cast<size_t>(i)])
                throw std::invalid_argument("g_star: neighborhood does not fit the host parts");
    }
    Graph host = complete_multipartite(PartSizes(parts));
    std::uint64_t nbrs = 0;
    int start = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < counts[i]; ++j) nbrs |= bit(start + j);
        start += parts[i];
    }
    return host.with_vertex(nbrs);
}

namespace {

// Attachment count vectors for G^ell_{n,r}: per-part neighbor counts with at
// least one untouched part (that is exactly K_{r+1}-freeness over a Turan
// host) and counts within equal-size parts nonincreasing.
std::vector<AttachmentVector> g_attachments(int n, int r, int ell) {
    std::vector<int> parts = balanced_parts(n - 1, r);
    int d = ell + 1;
    std::vector<AttachmentVector> out;
    std::vector<int> counts(parts.size(), 0);
    auto rec = [&](auto&& self, size_t i, int remaining) -> void {
        if (i == parts.size()) {
            if (remaining != 0) return;
            bool touches_all = true;
            for (size_t j = 0; j < parts.size(); ++j)
                if (counts[j] == 0) touches_all = false;
            // Untouched empty "parts" of T_r(m) with m < r count as misses.
            if (static_cast<int>(parts.size()) < r) touches_all = false;
            if (touches_all) return;
            out.push_back(AttachmentVector{counts});
            return;
        }
        int cap = std::min(parts[i], remaining);
        // Keep counts sorted within runs of equal part size.
        if (i > 0 && parts[i] == parts[i - 1]) cap = std::min(cap, counts[i - 1]);
        for (int c = cap; c >= 0; --c) {
            counts[i] = c;
            self(self, i + 1, remaining - c);
        }
        counts[i] = 0;
    };
    if (d >= 0 && n - 1 >= 0) rec(rec, 0, d);
    return out;
}

Graph attach(const std::vector<int>& parts, const AttachmentVector& att) {
    Graph host = complete_multipartite(PartSizes(parts));
    std::uint64_t nbrs = 0;
    int start = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < att.counts[i]; ++j) nbrs |= bit(start + j);
        start += parts[i];
    }
    return host.with_vertex(nbrs);
}

// J^k restriction: the neighborhood of the exceptional vertex is traceable,
// i.e. each part holds at most (k+2)/2 of its neighbors.
bool jk_admissible(const AttachmentVector& att, int k) {
    for (int c : att.counts)
        if (2 * c > k + 2) return false;
    return true;
}

std::vector<Graph> h_family(int n, int r, int ell) {
    std::vector<Graph> out;
    if (((n % 2) + 2) % 2 == ((ell % 2) + 2) % 2) return out;  // empty when n = ell (mod 2)
    int host_n = (n + 1 + ell) / 2;
    int j_count = (n - 1 - ell) / 2;
    if (host_n < 1 || j_count < 0 || host_n + j_count != n) return out;
    if (n > kMaxVertices) throw capacity_error("H family exceeds 64 vertices");
    std::vector<int> parts = balanced_parts(host_n, r);
    // Each added vertex has exactly one non-neighbor in the host, and that
    // non-neighbor must sit in a part of size 1 or a K_{r+1} appears. When the
    // host has fewer than r nonempty parts every part is a singleton anyway.
    std::vector<int> singleton_vertices;
    int start = 0;
    for (int size : parts) {
        if (size == 1) singleton_vertices.push_back(start);
        start += size;
    }
    if (singleton_vertices.empty()) return out;
    int slots = static_cast<int>(singleton_vertices.size());
    // Multiplicity profiles: how many added vertices avoid each singleton,
    // nonincreasing over the interchangeable singletons.
    std::vector<int> mult(static_cast<size_t>(slots), 0);
    Graph host = complete_multipartite(PartSizes(parts));
    auto emit = [&]() {
        Graph g = host;
        std::uint64_t host_mask = host.vertex_mask();
        int slot = 0, used = 0;
        for (int jv = 0; jv < j_count; ++jv) {
            while (slot < slots && used == mult[static_cast<size_t>(slot)]) {
                ++slot;
                used = 0;
            }
            std::uint64_t nbrs = host_mask & ~bit(singleton_vertices[static_cast<size_t>(slot)]);
            g = g.with_vertex(nbrs);
            ++used;
        }
        out.push_back(std::move(g));
    };
    auto rec = [&](auto&& self, int i, int remaining, int cap) -> void {
        if (i == slots) {
            if (remaining == 0) emit();
            return;
        }
        for (int c = std::min(cap, remaining); c >= 0; --c) {
            mult[static_cast<size_t>(i)] = c;
            self(self, i + 1, remaining - c, c);
        }
        mult[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, j_count, j_count);
    return out;
}

}  // namespace

std::vector<AttachmentVector> family_attachments(const FamilySpec& spec) {
    if (spec.family == Family::HEll)
        throw std::invalid_argument("H family has no attachment-vector form");
    if (spec.n < 2 || spec.r < 2 || spec.ell < -1 || spec.ell + 1 > spec.n - 1) return {};
    if (spec.n > kMaxVertices) throw capacity_error("family exceeds 64 vertices");
    auto atts = g_attachments(spec.n, spec.r, spec.ell);
    if (spec.family == Family::JK) {
        std::vector<AttachmentVector> filtered;
        for (auto& a : atts)
            if (jk_admissible(a, spec.ell)) filtered.push_back(a);
        return filtered;
    }
    return atts;
}

std::vector<Graph> family_members(const FamilySpec& spec) {
    std::vector<Graph> members;
    if (spec.family == Family::HEll) {
        if (spec.n < 1 || spec.r < 2) return {};
        members = h_family(spec.n, spec.r, spec.ell);
    } else {
        auto atts = family_attachments(spec);
        std::vector<int> parts = balanced_parts(spec.n - 1, spec.r);
        members.reserve(atts.size());
        for (const auto& a : atts) members.push_back(attach(parts, a));
    }
    // Dedup and stabilize by canonical form.
    std::map<CanonicalForm, Graph> by_form;
    for (auto& g : members) by_form.emplace(canonical_form(g), std::move(g));
    std::vector<Graph> out;
    out.reserve(by_form.size());
    for (auto& [form, g] : by_form) out.push_back(std::move(g));
    return out;
}

}  // namespace hamfree
