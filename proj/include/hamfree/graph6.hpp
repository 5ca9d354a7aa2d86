#pragma once

// graph6 text interchange, bit-exact with the de-facto standard used by the
// common generation tools: header encodes n, then the upper triangle of the
// adjacency matrix column by column, packed into 6-bit groups offset by 63.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hamfree/graph.hpp"

namespace hamfree {

struct graph6_error : std::runtime_error {
    graph6_error(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), byte_offset(offset) {}
    size_t byte_offset;
};

std::string to_graph6(const Graph& g);

Graph from_graph6(std::string_view line);

}  // namespace hamfree
