#include "wrg/graph.hpp"

#include "wrg/structure.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wrg {

Graph::Graph(int order)
	: n_(order)
	, words_((order + 63) / 64)
{
	if (order < 0) throw std::invalid_argument("negative graph order");
	bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int order, std::span<const Edge> edges)
{
	Graph g(order);
	for (auto [u, v] : edges) {
		if (u == v) throw std::invalid_argument("self-loop in edge list");
		if (g.adjacent(u, v)) throw std::invalid_argument("parallel edge in edge list");
		g.add_edge(u, v);
	}
	return g;
}

Graph Graph::from_edge_mask(int order, std::uint64_t mask)
{
	if (order > kMaxMaskOrder) throw std::invalid_argument("edge mask supports order <= 11");
	if (pair_count(order) < 64 && (mask >> pair_count(order)) != 0)
		throw std::invalid_argument("edge mask has bits beyond the vertex range");
	Graph g(order);
	for (int v = 1; v < order; ++v)
		for (int u = 0; u < v; ++u)
			if ((mask >> edge_index(u, v)) & 1U) g.add_edge(u, v);
	return g;
}

void Graph::check_vertex(int v) const
{
	if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " + std::to_string(n_));
}

bool Graph::adjacent(int u, int v) const
{
	check_vertex(u);
	check_vertex(v);
	return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
}

void Graph::add_edge(int u, int v)
{
	if (u == v) throw std::invalid_argument("self-loop");
	if (adjacent(u, v)) return;
	bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
	bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
	++m_;
}

void Graph::remove_edge(int u, int v)
{
	if (!adjacent(u, v)) return;
	bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
	bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
	--m_;
}

void Graph::clear_edges()
{
	std::fill(bits_.begin(), bits_.end(), 0);
	m_ = 0;
}

int Graph::degree(int v) const
{
	check_vertex(v);
	int d = 0;
	for (auto w : row(v)) d += std::popcount(w);
	return d;
}

std::vector<int> Graph::neighbors(int v) const
{
	check_vertex(v);
	std::vector<int> out;
	auto r = row(v);
	for (int w = 0; w < words_; ++w) {
		auto bits = r[w];
		while (bits) {
			out.push_back(w * 64 + std::countr_zero(bits));
			bits &= bits - 1;
		}
	}
	return out;
}

std::vector<Edge> Graph::edges() const
{
	std::vector<Edge> out;
	out.reserve(m_);
	for (int u = 0; u < n_; ++u)
		for (int v : neighbors(u))
			if (u < v) out.emplace_back(u, v);
	return out;
}

std::uint64_t Graph::edge_mask() const
{
	if (n_ > kMaxMaskOrder) throw std::invalid_argument("edge mask supports order <= 11");
	std::uint64_t mask = 0;
	for (auto [u, v] : edges()) mask |= std::uint64_t{1} << edge_index(u, v);
	return mask;
}

RootedGraph RootedGraph::make(Graph graph, int root)
{
	if (graph.order() == 0) throw std::invalid_argument("rooted graph must be non-empty");
	if (root < 0 || root >= graph.order()) throw std::invalid_argument("root outside vertex range");
	if (!is_connected(graph)) throw std::invalid_argument("rooted graph must be connected");
	return RootedGraph{std::move(graph), root};
}

Graph complete_graph(int n)
{
	Graph g(n);
	for (int v = 1; v < n; ++v)
		for (int u = 0; u < v; ++u) g.add_edge(u, v);
	return g;
}

Graph cycle_graph(int n)
{
	if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
	Graph g(n);
	for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
	return g;
}

Graph path_graph(int n)
{
	Graph g(n);
	for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
	return g;
}

Graph star_graph(int leaves)
{
	Graph g(leaves + 1);
	for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
	return g;
}

Graph complete_bipartite(int a, int b)
{
	Graph g(a + b);
	for (int u = 0; u < a; ++u)
		for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
	return g;
}

Graph empty_graph(int n) { return Graph(n); }

namespace {

std::string strip(const std::string& line)
{
	auto hash = line.find('#');
	std::string s = hash == std::string::npos ? line : line.substr(0, hash);
	auto b = s.find_first_not_of(" \t\r");
	if (b == std::string::npos) return {};
	auto e = s.find_last_not_of(" \t\r");
	return s.substr(b, e - b + 1);
}

} // namespace

Graph read_graph(std::istream& in)
{
	std::string line;
	int n = -1;
	while (std::getline(in, line)) {
		auto s = strip(line);
		if (s.empty()) continue;
		std::istringstream ls(s);
		if (!(ls >> n) || n < 0) throw std::invalid_argument("graph text: bad vertex count line '" + s + "'");
		break;
	}
	if (n < 0) throw std::invalid_argument("graph text: missing vertex count");
	Graph g(n);
	while (std::getline(in, line)) {
		auto s = strip(line);
		if (s.empty()) continue;
		if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) {
			std::uint64_t mask = std::stoull(s.substr(2), nullptr, 16);
			auto masked = Graph::from_edge_mask(n, mask);
			for (auto [u, v] : masked.edges()) g.add_edge(u, v);
			continue;
		}
		std::istringstream ls(s);
		int u = 0, v = 0;
		if (!(ls >> u >> v)) throw std::invalid_argument("graph text: bad edge line '" + s + "'");
		if (u < 1 || v < 1 || u > n || v > n) throw std::invalid_argument("graph text: vertex out of range in '" + s + "'");
		if (u == v) throw std::invalid_argument("graph text: self-loop in '" + s + "'");
		if (g.adjacent(u - 1, v - 1)) throw std::invalid_argument("graph text: parallel edge in '" + s + "'");
		g.add_edge(u - 1, v - 1);
	}
	return g;
}

Graph parse_graph(const std::string& text)
{
	std::istringstream in(text);
	return read_graph(in);
}

Graph read_graph_file(const std::string& path)
{
	std::ifstream in(path);
	if (!in) throw std::invalid_argument("cannot open graph file: " + path);
	return read_graph(in);
}

std::string format_graph(const Graph& g)
{
	std::ostringstream out;
	out << g.order() << '\n';
	for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
	return out.str();
}

std::string format_graph_hex(const Graph& g)
{
	std::ostringstream out;
	out << g.order() << '\n' << "0x" << std::hex << g.edge_mask() << '\n';
	return out.str();
}

} // namespace wrg
