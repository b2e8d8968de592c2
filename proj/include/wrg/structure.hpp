#pragma once

#include "wrg/graph.hpp"

#include <vector>

namespace wrg {

/// Number of connected components; zero for the empty graph.
int component_count(const Graph& g);

/// Vertex sets of the components, each sorted, ordered by least vertex.
std::vector<std::vector<int>> components(const Graph& g);

/// True iff g has exactly one component (the empty graph is not connected).
bool is_connected(const Graph& g);

/// Whether u and v lie in the same component.
bool connected_pair(const Graph& g, int u, int v);

int min_degree(const Graph& g);

/// e - n + kappa; non-increasing under taking minors.
int cyclomatic_number(const Graph& g);

struct BridgePartition
{
	int bridges = 0;
	int non_bridges = 0;
	bool operator==(const BridgePartition&) const = default;
};

BridgePartition bridge_partition(const Graph& g);
std::vector<Edge> bridges(const Graph& g);

/// Subgraph induced on `vertices`, relabelled in increasing order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Vertex-disjoint union; h's vertices are shifted past g's.
Graph disjoint_union(const Graph& g, const Graph& h);
/// k vertex-disjoint copies of h.
Graph repeat_union(const Graph& h, int k);

struct CoreResult
{
	Graph core;
	std::vector<int> vertex_map; // original label of each core vertex
};

/// Unique maximal subgraph of minimum degree >= 2, by repeated leaf
/// trimming. Empty iff g is a forest.
CoreResult two_core(const Graph& g);
/// Order of the 2-core without materialising it.
int core_order(const Graph& g);

struct BigFrag
{
	Graph big;
	std::vector<int> big_vertices;
	Graph frag;
	std::vector<int> frag_vertices;
};

/// Splits off the largest component; among components of maximum order
/// the one with the lexicographically least sorted label sequence wins.
/// Throws std::invalid_argument on the empty graph.
BigFrag big_frag_split(const Graph& g);
/// Number of vertices outside the big component (0 for the empty graph).
int frag_order(const Graph& g);

} // namespace wrg
