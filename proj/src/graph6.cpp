#include "hamfree/graph6.hpp"

namespace hamfree {

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 63 <= n <= 258047 uses '~' plus three bytes, big-endian 6-bit groups.
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(std::string_view line) {
    size_t pos = 0;
    auto need = [&](size_t count) {
        if (line.size() < pos + count) throw graph6_error("truncated graph6 line", line.size());
    };
    auto sixbits = [&]() -> int {
        need(1);
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126) throw graph6_error("byte outside graph6 alphabet", pos);
        ++pos;
        return c - 63;
    };

    need(1);
    long long n;
    if (line[0] == '~') {
        ++pos;
        if (pos < line.size() && line[pos] == '~')
            throw graph6_error("graph6 8-byte vertex counts not supported", pos);
        long long a = sixbits(), b = sixbits(), c = sixbits();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = sixbits();
    }
    if (n > kMaxVertices)
        throw capacity_error("graph6 line encodes " + std::to_string(n) + " vertices, capacity is 64");

    std::vector<std::pair<int, int>> edge_list;
    long long nbits = n * (n - 1) / 2;
    int acc = 0, have = 0;
    int i = 0, j = 1;
    for (long long b = 0; b < nbits; ++b) {
        if (have == 0) {
            acc = sixbits();
            have = 6;
        }
        int bitval = (acc >> (have - 1)) & 1;
        --have;
        if (bitval) edge_list.emplace_back(i, j);
        if (++i == j) {
            i = 0;
            ++j;
        }
    }
    if (have > 0 && (acc & ((1 << have) - 1)) != 0)
        throw graph6_error("nonzero padding bits", pos - 1);
    if (pos != line.size()) throw graph6_error("trailing bytes after graph6 payload", pos);
    return Graph(static_cast<int>(n), edge_list);
}

}  // namespace hamfree
