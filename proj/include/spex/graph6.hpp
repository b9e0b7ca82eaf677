#pragma once

#include <string>

#include "spex/graph.hpp"

namespace spex {

/// Decodes one graph6 line (no trailing newline). Throws std::invalid_argument
/// on malformed input: bad header, short/long payload, nonzero padding bits,
/// or bytes outside [63,126].
Graph graph6_decode(const std::string& line);

/// Shortest-header graph6 encoding; decode(encode(g)) == g.
std::string graph6_encode(const Graph& g);

}  // namespace spex
