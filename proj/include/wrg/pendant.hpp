#pragma once

#include "wrg/graph.hpp"

#include <vector>

namespace wrg {

/// One pendant appearance: the vertex set W (sorted) and its single
/// outgoing edge, written (root of W, outside endpoint).
struct PendantAppearance
{
	std::vector<int> vertices;
	Edge root_edge;
};

/**
 * Pendant appearances of h in g: sets W with |W| = v(h) such that the
 * increasing bijection from h's vertices onto W is an isomorphism onto
 * g[W], and exactly one edge leaves W, incident to min(W).
 *
 * The increasing bijection sends h's least vertex to min(W), so a root
 * other than vertex 0 is first moved to position 0 (other vertices keep
 * their relative order). Such a W is a whole component of g minus a
 * bridge, which is how candidates are found.
 */
std::vector<PendantAppearance> find_pendant_appearances(const Graph& g, const RootedGraph& h);

/// f_H(g). Zero when v(h) >= v(g).
int pendant_appearances(const Graph& g, const RootedGraph& h);

/// Appearances sharing a vertex or their root edge with another appearance.
int overlapping_pendant_appearances(const Graph& g, const RootedGraph& h);

/// h relabelled so its root is vertex 0.
Graph root_first(const RootedGraph& h);

} // namespace wrg
