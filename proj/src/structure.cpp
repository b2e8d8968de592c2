#include "wrg/structure.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wrg {

namespace {

using Bits = std::vector<std::uint64_t>;

inline bool test(const Bits& b, int v) { return (b[v / 64] >> (v % 64)) & 1U; }
inline void set(Bits& b, int v) { b[v / 64] |= std::uint64_t{1} << (v % 64); }

// Component labels by flood fill; returns the number of components.
int label_components(const Graph& g, std::vector<int>& label)
{
	const int n = g.order();
	label.assign(n, -1);
	std::vector<int> stack;
	int count = 0;
	for (int s = 0; s < n; ++s) {
		if (label[s] >= 0) continue;
		label[s] = count;
		stack.push_back(s);
		while (!stack.empty()) {
			int v = stack.back();
			stack.pop_back();
			auto r = g.row(v);
			for (int w = 0; w < g.words(); ++w) {
				auto bits = r[w];
				while (bits) {
					int u = w * 64 + std::countr_zero(bits);
					bits &= bits - 1;
					if (label[u] < 0) {
						label[u] = count;
						stack.push_back(u);
					}
				}
			}
		}
		++count;
	}
	return count;
}

int small_component_count(const Graph& g)
{
	const int n = g.order();
	std::uint64_t unseen = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
	int count = 0;
	while (unseen) {
		std::uint64_t comp = unseen & (~unseen + 1);
		std::uint64_t frontier = comp;
		while (frontier) {
			int v = std::countr_zero(frontier);
			frontier &= frontier - 1;
			std::uint64_t fresh = g.row_mask(v) & ~comp;
			comp |= fresh;
			frontier |= fresh;
		}
		unseen &= ~comp;
		++count;
	}
	return count;
}

// reachability of `target` from `source` in rows with the edge source-target hidden
bool reachable_without_edge(const Graph& g, int source, int target)
{
	std::uint64_t seen = std::uint64_t{1} << source;
	std::uint64_t frontier = seen;
	while (frontier) {
		int v = std::countr_zero(frontier);
		frontier &= frontier - 1;
		std::uint64_t next = g.row_mask(v);
		if (v == source) next &= ~(std::uint64_t{1} << target);
		if (v == target) next &= ~(std::uint64_t{1} << source);
		next &= ~seen;
		if ((next >> target) & 1U) return true;
		seen |= next;
		frontier |= next;
	}
	return false;
}

std::uint64_t component_of(const Graph& g, int v)
{
	std::uint64_t comp = std::uint64_t{1} << v;
	std::uint64_t frontier = comp;
	while (frontier) {
		int x = std::countr_zero(frontier);
		frontier &= frontier - 1;
		std::uint64_t fresh = g.row_mask(x) & ~comp;
		comp |= fresh;
		frontier |= fresh;
	}
	return comp;
}

} // namespace

int component_count(const Graph& g)
{
	if (g.order() <= 64) return small_component_count(g);
	std::vector<int> label;
	return label_components(g, label);
}

std::vector<std::vector<int>> components(const Graph& g)
{
	std::vector<int> label;
	int count = label_components(g, label);
	std::vector<std::vector<int>> out(count);
	for (int v = 0; v < g.order(); ++v) out[label[v]].push_back(v);
	return out;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool connected_pair(const Graph& g, int u, int v)
{
	if (u == v) return true;
	Bits seen(g.words(), 0);
	std::vector<int> stack{u};
	set(seen, u);
	while (!stack.empty()) {
		int x = stack.back();
		stack.pop_back();
		auto r = g.row(x);
		for (int w = 0; w < g.words(); ++w) {
			auto bits = r[w] & ~seen[w];
			while (bits) {
				int y = w * 64 + std::countr_zero(bits);
				bits &= bits - 1;
				if (y == v) return true;
				set(seen, y);
				stack.push_back(y);
			}
		}
	}
	return false;
}

int min_degree(const Graph& g)
{
	if (g.order() == 0) return 0;
	int best = g.order();
	for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
	return best;
}

int cyclomatic_number(const Graph& g) { return g.size() - g.order() + component_count(g); }

std::vector<Edge> bridges(const Graph& g)
{
	if (g.order() <= 64) {
		std::vector<Edge> out;
		for (int v = 1; v < g.order(); ++v) {
			auto lower = g.row_mask(v) & ((std::uint64_t{1} << v) - 1);
			while (lower) {
				int u = std::countr_zero(lower);
				lower &= lower - 1;
				if (!reachable_without_edge(g, u, v)) out.emplace_back(u, v);
			}
		}
		std::sort(out.begin(), out.end());
		return out;
	}
	// Iterative Tarjan low-link.
	const int n = g.order();
	std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
	std::vector<std::vector<int>> adj(n);
	for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
	std::vector<std::size_t> next(n, 0);
	std::vector<Edge> out;
	int timer = 0;
	std::vector<int> stack;
	for (int s = 0; s < n; ++s) {
		if (disc[s] >= 0) continue;
		disc[s] = low[s] = timer++;
		stack.push_back(s);
		while (!stack.empty()) {
			int v = stack.back();
			if (next[v] < adj[v].size()) {
				int u = adj[v][next[v]++];
				if (disc[u] < 0) {
					parent[u] = v;
					disc[u] = low[u] = timer++;
					stack.push_back(u);
				} else if (u != parent[v]) {
					low[v] = std::min(low[v], disc[u]);
				}
			} else {
				stack.pop_back();
				int p = parent[v];
				if (p >= 0) {
					low[p] = std::min(low[p], low[v]);
					if (low[v] > disc[p]) out.emplace_back(std::min(p, v), std::max(p, v));
				}
			}
		}
	}
	std::sort(out.begin(), out.end());
	return out;
}

BridgePartition bridge_partition(const Graph& g)
{
	int b = static_cast<int>(bridges(g).size());
	return {b, g.size() - b};
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices)
{
	std::vector<int> sorted(vertices.begin(), vertices.end());
	std::sort(sorted.begin(), sorted.end());
	if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
		throw std::invalid_argument("induced_subgraph: repeated vertex");
	Graph out(static_cast<int>(sorted.size()));
	for (std::size_t i = 0; i < sorted.size(); ++i)
		for (std::size_t j = i + 1; j < sorted.size(); ++j)
			if (g.adjacent(sorted[i], sorted[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
	return out;
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
	Graph out(g.order() + h.order());
	for (auto [u, v] : g.edges()) out.add_edge(u, v);
	for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
	return out;
}

Graph repeat_union(const Graph& h, int k)
{
	if (k < 0) throw std::invalid_argument("negative multiplicity");
	Graph out;
	for (int i = 0; i < k; ++i) out = disjoint_union(out, h);
	return out;
}

namespace {

std::vector<char> core_membership(const Graph& g)
{
	const int n = g.order();
	std::vector<int> deg(n);
	std::vector<char> alive(n, 1);
	std::vector<int> queue;
	for (int v = 0; v < n; ++v) {
		deg[v] = g.degree(v);
		if (deg[v] < 2) queue.push_back(v);
	}
	while (!queue.empty()) {
		int v = queue.back();
		queue.pop_back();
		if (!alive[v]) continue;
		alive[v] = 0;
		for (int u : g.neighbors(v)) {
			if (alive[u] && --deg[u] < 2) queue.push_back(u);
		}
	}
	return alive;
}

} // namespace

CoreResult two_core(const Graph& g)
{
	auto alive = core_membership(g);
	CoreResult out;
	for (int v = 0; v < g.order(); ++v)
		if (alive[v]) out.vertex_map.push_back(v);
	out.core = induced_subgraph(g, out.vertex_map);
	return out;
}

int core_order(const Graph& g)
{
	if (g.order() <= 64) {
		// peel leaves on bitmasks
		std::uint64_t alive = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
		bool changed = true;
		while (changed) {
			changed = false;
			std::uint64_t rest = alive;
			while (rest) {
				int v = std::countr_zero(rest);
				rest &= rest - 1;
				if (std::popcount(g.row_mask(v) & alive) < 2) {
					alive &= ~(std::uint64_t{1} << v);
					changed = true;
				}
			}
		}
		return std::popcount(alive);
	}
	auto alive = core_membership(g);
	return static_cast<int>(std::count(alive.begin(), alive.end(), 1));
}

BigFrag big_frag_split(const Graph& g)
{
	if (g.order() == 0) throw std::invalid_argument("big_frag_split: empty graph");
	auto comps = components(g);
	// components are ordered by least vertex, which for disjoint sorted sets
	// is the lexicographic order of their label sequences
	std::size_t best = 0;
	for (std::size_t i = 1; i < comps.size(); ++i)
		if (comps[i].size() > comps[best].size()) best = i;
	BigFrag out;
	out.big_vertices = comps[best];
	for (std::size_t i = 0; i < comps.size(); ++i)
		if (i != best) out.frag_vertices.insert(out.frag_vertices.end(), comps[i].begin(), comps[i].end());
	std::sort(out.frag_vertices.begin(), out.frag_vertices.end());
	out.big = induced_subgraph(g, out.big_vertices);
	out.frag = induced_subgraph(g, out.frag_vertices);
	return out;
}

int frag_order(const Graph& g)
{
	if (g.order() == 0) return 0;
	if (g.order() <= 64) {
		std::uint64_t unseen = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
		int big = 0;
		while (unseen) {
			auto comp = component_of(g, std::countr_zero(unseen));
			big = std::max(big, std::popcount(comp));
			unseen &= ~comp;
		}
		return g.order() - big;
	}
	std::size_t big = 0;
	for (const auto& c : components(g)) big = std::max(big, c.size());
	return g.order() - static_cast<int>(big);
}

} // namespace wrg
