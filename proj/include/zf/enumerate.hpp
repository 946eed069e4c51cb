#pragma once

#include "zf/graph.hpp"

#include <cstdint>
#include <vector>

namespace zf {

/// Minimum adjacency bitstring over all vertex orderings, packed MSB-first
/// in column-major upper-triangle order (the graph6 bit order). Limited to
/// n <= 11 so the string fits in 64 bits.
std::uint64_t canonical_bits(const Graph& g);

/// The graph relabeled so that its adjacency bitstring is canonical_bits.
Graph canonical_form(const Graph& g);

/// All graphs on n vertices up to isomorphism, in canonical labeling,
/// ordered by canonical bitstring. Results are memoized per (n, flag).
const std::vector<Graph>& enumerate_graphs(int n, bool connected_only);

} // namespace zf
