#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wrg {

using Edge = std::pair<int, int>;

/// Index of the pair {u,v}, u < v, in the edge-bitmask layout. Pairs are
/// ordered by larger endpoint, so masks on n vertices are a prefix of
/// masks on n+1 vertices.
constexpr int edge_index(int u, int v) noexcept
{
	if (u > v) std::swap(u, v);
	return v * (v - 1) / 2 + u;
}

constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }

/// Largest order whose edge set fits a 64-bit mask.
inline constexpr int kMaxMaskOrder = 11;

/**
 * Labelled simple graph on the vertex set {0, ..., n-1}.
 *
 * Adjacency is stored as one bit row per vertex (ceil(n/64) words each),
 * so the graphs used by the enumerators (n <= 11) live in a single word
 * per row while larger sampled graphs remain representable. Text formats
 * are 1-indexed; everything in memory is 0-indexed.
 */
class Graph
{
public:
	Graph() = default;
	explicit Graph(int order);

	static Graph from_edges(int order, std::span<const Edge> edges);
	static Graph from_edge_mask(int order, std::uint64_t mask);

	int order() const noexcept { return n_; }
	int size() const noexcept { return m_; }
	bool empty() const noexcept { return n_ == 0; }
	int words() const noexcept { return words_; }

	bool adjacent(int u, int v) const;
	void add_edge(int u, int v);
	void remove_edge(int u, int v);
	void clear_edges();

	int degree(int v) const;
	std::vector<int> neighbors(int v) const;
	std::span<const std::uint64_t> row(int v) const
	{
		return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
	}
	/// Neighbourhood bitmask; only valid for order <= 64.
	std::uint64_t row_mask(int v) const { return bits_[static_cast<std::size_t>(v) * words_]; }

	std::vector<Edge> edges() const;
	/// Edge set as a bitmask in edge_index layout; order must be <= 11.
	std::uint64_t edge_mask() const;

	bool operator==(const Graph& other) const = default;

private:
	void check_vertex(int v) const;

	int n_ = 0;
	int words_ = 0;
	int m_ = 0;
	std::vector<std::uint64_t> bits_;
};

/// Connected graph with a distinguished root vertex.
struct RootedGraph
{
	Graph graph;
	int root = 0;

	/// Validates connectivity and the root index.
	static RootedGraph make(Graph graph, int root);
};

// Named small graphs.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);

/// Parses the text format: a first line holding n, then either "u v"
/// lines (1-indexed) or a single "0x<hex>" edge-mask line.
Graph parse_graph(const std::string& text);
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);
std::string format_graph_hex(const Graph& g);

} // namespace wrg
