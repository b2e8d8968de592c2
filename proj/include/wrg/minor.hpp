#pragma once

#include "wrg/graph.hpp"

#include <cstdint>

namespace wrg {

struct MinorOptions
{
	/// Maximum number of search states visited before giving up.
	std::uint64_t node_budget = 10'000'000;
};

/// Whether h is a (not necessarily induced) subgraph of g under some
/// injective vertex map. Both graphs must have order <= 64.
bool contains_subgraph(const Graph& g, const Graph& h);

/**
 * Whether h is a minor of g (obtainable by vertex deletions, edge
 * deletions and edge contractions). h may be disconnected.
 *
 * Every minor is a subgraph of a contraction of g, so the search walks
 * contraction states of g, memoised by canonical code, and tests subgraph
 * containment at each. Forced reductions: leaves are trimmed when h has
 * minimum degree >= 2, and degree-2 vertices are suppressed when h has
 * minimum degree >= 3. Throws ResourceError past the node budget.
 */
bool has_minor(const Graph& g, const Graph& h, const MinorOptions& options = {});

/// Exact K4-minor test by series-parallel reduction.
bool has_k4_minor(const Graph& g);

/// Planarity (Boyer-Myrvold).
bool is_planar(const Graph& g);

} // namespace wrg
