#include "hamfree/enumeration.hpp"

#include <atomic>
#include <bit>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "hamfree/canonical.hpp"
#include "hamfree/graph6.hpp"

namespace hamfree {

namespace {

struct Gen {
    const EnumConstraints& c;
    const std::function<void(const Graph&)>& emit;

    bool final_filter(const Graph& g) const {
        long long e = g.edge_count();
        if (c.min_edges && e < *c.min_edges) return false;
        if (c.max_edges && e > *c.max_edges) return false;
        return true;
    }

    // Children of `parent` that survive the hereditary constraints and the
    // canonical-augmentation acceptance test, deduped within the parent.
    template <typename F>
    void children(const Graph& parent, const std::string& parent_form, F&& child_cb) const {
        int k = parent.vertex_count();
        long long parent_edges = parent.edge_count();
        int rem_after = c.n - (k + 1);
        std::unordered_set<std::string> seen;
        std::uint64_t subsets = 0;
        std::uint64_t full = parent.vertex_mask();
        // Iterate all neighbor subsets of the new vertex.
        while (true) {
            std::uint64_t mask = subsets;
            bool ok = true;
            long long child_edges = parent_edges + std::popcount(mask);
            if (c.max_edges && child_edges > *c.max_edges) ok = false;
            if (ok && c.min_edges) {
                long long potential =
                    child_edges + static_cast<long long>(rem_after) * (k + 1) + binom2_ll(rem_after);
                if (potential < *c.min_edges) ok = false;
            }
            if (ok && c.max_clique && has_clique_in(parent, mask, *c.max_clique)) ok = false;
            if (ok) {
                Graph child = parent.with_vertex(mask);
                if (!c.bipartite_only || is_bipartite(child)) {
                    CanonicalLabeling cl = canonical_labeling(child);
                    if (seen.insert(cl.form.bytes).second && accept(child, cl, parent_form))
                        child_cb(child, cl.form.bytes);
                }
            }
            if (subsets == full) break;
            subsets = (subsets - full) & full;  // next subset of full, wrapping from 0
        }
    }

    static long long binom2_ll(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

    // Canonical augmentation test: the new vertex is the last one, so the
    // child is kept iff deleting the canonically-last vertex lands back in
    // the parent's class.
    static bool accept(const Graph& child, const CanonicalLabeling& cl,
                       const std::string& parent_form) {
        int added = child.vertex_count() - 1;
        if (cl.last_vertex == added) return true;
        Graph reduced = child.without_vertices(bit(cl.last_vertex));
        return canonical_form(reduced).bytes == parent_form;
    }

    void expand(const Graph& g, const std::string& form) const {
        if (g.vertex_count() == c.n) {
            if (final_filter(g)) emit(g);
            return;
        }
        children(g, form, [&](const Graph& child, const std::string& child_form) {
            expand(child, child_form);
        });
    }

    void collect_units(const Graph& g, const std::string& form, int depth,
                       std::vector<std::pair<Graph, std::string>>& units) const {
        if (g.vertex_count() == depth) {
            units.emplace_back(g, form);
            return;
        }
        children(g, form, [&](const Graph& child, const std::string& child_form) {
            collect_units(child, child_form, depth, units);
        });
    }
};

}  // namespace

void enumerate_graphs(const EnumConstraints& c, const std::function<void(const Graph&)>& emit,
                      int jobs) {
    if (c.n < 0) throw std::invalid_argument("enumerate: n must be >= 0");
    if (c.n > kEnumerationBudget)
        throw budget_error("enumeration beyond n = " + std::to_string(kEnumerationBudget) +
                           " is out of budget; stream an external graph6 catalog instead");
    if (c.min_edges && c.max_edges && *c.min_edges > *c.max_edges) return;
    if (c.max_clique && *c.max_clique < 1) throw std::invalid_argument("max_clique must be >= 1");
    Gen gen{c, emit};
    if (c.n == 0) {
        Graph empty(0);
        if (gen.final_filter(empty)) emit(empty);
        return;
    }
    Graph seed(1);
    std::string seed_form = canonical_form(seed).bytes;
    if (jobs <= 1 || c.n <= 4) {
        gen.expand(seed, seed_form);
        return;
    }

    // Split the tree at a fixed level; workers own whole subtrees and buffer
    // their output, which is then flushed in unit order so the emitted
    // sequence never depends on the job count.
    int split = std::max(1, std::min(c.n - 2, 7));
    std::vector<std::pair<Graph, std::string>> units;
    gen.collect_units(seed, seed_form, split, units);
    std::vector<std::vector<Graph>> buffers(units.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < units.size(); i = next.fetch_add(1)) {
            std::function<void(const Graph&)> sink = [&buffers, i](const Graph& g) {
                buffers[i].push_back(g);
            };
            Gen local{c, sink};
            local.expand(units[i].first, units[i].second);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<size_t>(static_cast<size_t>(jobs), units.size());
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& buf : buffers)
        for (const Graph& g : buf) emit(g);
}

void read_graph6_stream(std::istream& in, const std::function<void(const Graph&)>& emit) {
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            emit(from_graph6(line));
        } catch (const graph6_error& e) {
            throw graph6_error("line " + std::to_string(line_no) + ": " + e.what(), e.byte_offset);
        }
    }
}

}  // namespace hamfree
