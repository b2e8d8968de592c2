#pragma once

// Seeded generators and brute-force oracles shared by the unit tests. The
// oracles are deliberately naive and share no code with the library.

#include "wrg/graph.hpp"
#include "wrg/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace testing {

using wrg::Graph;

inline Graph random_graph(std::mt19937_64& rng, int n, double p)
{
	std::bernoulli_distribution coin(p);
	Graph g(n);
	for (int v = 1; v < n; ++v)
		for (int u = 0; u < v; ++u)
			if (coin(rng)) g.add_edge(u, v);
	return g;
}

/// Random order in [lo, hi] and random density; covers sparse and dense graphs.
inline Graph any_graph(std::mt19937_64& rng, int lo, int hi)
{
	int n = std::uniform_int_distribution<int>(lo, hi)(rng);
	double p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
	return random_graph(rng, n, p);
}

inline Graph random_forest(std::mt19937_64& rng, int n)
{
	Graph g(n);
	for (int v = 1; v < n; ++v) {
		int u = std::uniform_int_distribution<int>(-1, v - 1)(rng);
		if (u >= 0) g.add_edge(u, v);
	}
	return g;
}

inline Graph random_tree(std::mt19937_64& rng, int n)
{
	Graph g(n);
	for (int v = 1; v < n; ++v) g.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
	return g;
}

/// g with vertex v sent to perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm)
{
	Graph h(g.order());
	for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
	return h;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n)
{
	std::vector<int> p(n);
	std::iota(p.begin(), p.end(), 0);
	std::shuffle(p.begin(), p.end(), rng);
	return p;
}

inline bool adjacent_raw(const Graph& g, int u, int v) { return u != v && g.adjacent(u, v); }

/// Components by union-find.
inline int components_oracle(const Graph& g)
{
	std::vector<int> parent(g.order());
	std::iota(parent.begin(), parent.end(), 0);
	std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
	int count = g.order();
	for (auto [u, v] : g.edges()) {
		int a = find(u), b = find(v);
		if (a != b) {
			parent[a] = b;
			--count;
		}
	}
	return count;
}

inline int bridges_oracle(const Graph& g)
{
	int k = components_oracle(g), count = 0;
	for (auto [u, v] : g.edges()) {
		Graph h = g;
		h.remove_edge(u, v);
		if (components_oracle(h) > k) ++count;
	}
	return count;
}

/// Vertex set of the 2-core: the largest vertex subset whose induced
/// subgraph has minimum degree >= 2 (such sets are closed under union).
inline std::uint32_t core_set_oracle(const Graph& g)
{
	const int n = g.order();
	std::uint32_t best = 0;
	for (std::uint32_t s = 1; s < (1u << n); ++s) {
		bool ok = true;
		for (int v = 0; v < n && ok; ++v) {
			if (!(s >> v & 1)) continue;
			int d = 0;
			for (int u = 0; u < n; ++u)
				if ((s >> u & 1) && adjacent_raw(g, u, v)) ++d;
			ok = d >= 2;
		}
		if (ok) best |= s;
	}
	return best;
}

/// Isomorphism by trying every permutation.
inline bool isomorphic_oracle(const Graph& g, const Graph& h)
{
	if (g.order() != h.order() || g.size() != h.size()) return false;
	std::vector<int> p(g.order());
	std::iota(p.begin(), p.end(), 0);
	do {
		bool ok = true;
		for (auto [u, v] : g.edges())
			if (!h.adjacent(p[u], p[v])) {
				ok = false;
				break;
			}
		if (ok) return true;
	} while (std::next_permutation(p.begin(), p.end()));
	return false;
}

inline std::uint64_t automorphisms_oracle(const Graph& g)
{
	std::vector<int> p(g.order());
	std::iota(p.begin(), p.end(), 0);
	std::uint64_t count = 0;
	do {
		bool ok = true;
		for (auto [u, v] : g.edges())
			if (!g.adjacent(p[u], p[v])) {
				ok = false;
				break;
			}
		if (ok) ++count;
	} while (std::next_permutation(p.begin(), p.end()));
	return count;
}

/// h is a minor of g iff g has disjoint connected branch sets, one per
/// vertex of h, with an edge between the sets of every edge of h. Tries
/// every assignment of g's vertices to a branch set or to none.
inline bool minor_oracle(const Graph& g, const Graph& h)
{
	const int n = g.order(), k = h.order();
	if (k == 0) return true;
	if (k > n) return false;
	std::vector<int> assign(n, 0); // 0 = unused, i+1 = branch set i
	auto connected_set = [&](int i) {
		std::vector<int> members;
		for (int v = 0; v < n; ++v)
			if (assign[v] == i + 1) members.push_back(v);
		if (members.empty()) return false;
		std::vector<bool> seen(n, false);
		std::vector<int> stack{members.front()};
		seen[members.front()] = true;
		std::size_t reached = 0;
		while (!stack.empty()) {
			int v = stack.back();
			stack.pop_back();
			++reached;
			for (int u = 0; u < n; ++u)
				if (!seen[u] && assign[u] == i + 1 && g.adjacent(u, v)) {
					seen[u] = true;
					stack.push_back(u);
				}
		}
		return reached == members.size();
	};
	for (;;) {
		bool ok = true;
		for (int i = 0; i < k && ok; ++i) ok = connected_set(i);
		for (auto [a, b] : h.edges()) {
			if (!ok) break;
			bool found = false;
			for (int u = 0; u < n && !found; ++u)
				for (int v = 0; v < n && !found; ++v)
					found = assign[u] == a + 1 && assign[v] == b + 1 && g.adjacent(u, v);
			ok = found;
		}
		if (ok) return true;
		int i = 0;
		while (i < n && assign[i] == k) assign[i++] = 0;
		if (i == n) return false;
		++assign[i];
	}
}

/// Pendant appearances by scanning every vertex set W of the right size.
inline int pendant_oracle(const Graph& g, const Graph& h_root_first)
{
	const int n = g.order(), k = h_root_first.order();
	if (k >= n) return 0;
	int count = 0;
	std::vector<bool> pick(n, false);
	std::fill(pick.begin(), pick.begin() + k, true);
	std::sort(pick.begin(), pick.end());
	do {
		std::vector<int> w;
		for (int v = 0; v < n; ++v)
			if (pick[v]) w.push_back(v);
		bool ok = true;
		for (int i = 0; i < k && ok; ++i)
			for (int j = i + 1; j < k && ok; ++j) ok = g.adjacent(w[i], w[j]) == h_root_first.adjacent(i, j);
		int leaving = 0;
		bool at_root = true;
		for (int i = 0; i < k && ok; ++i)
			for (int u = 0; u < n; ++u)
				if (!pick[u] && g.adjacent(w[i], u)) {
					++leaving;
					at_root = at_root && i == 0;
				}
		if (ok && leaving == 1 && at_root) ++count;
	} while (std::next_permutation(pick.begin(), pick.end()));
	return count;
}

inline wrg::Rational q(long p, long r = 1) { return wrg::fraction(wrg::Integer(p), wrg::Integer(r)); }

} // namespace testing
