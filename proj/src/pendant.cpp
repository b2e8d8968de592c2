#include "wrg/pendant.hpp"

#include "wrg/structure.hpp"

#include <algorithm>

namespace wrg {

Graph root_first(const RootedGraph& h)
{
	const int n = h.graph.order();
	const int r = h.root;
	auto relabel = [r](int v) { return v == r ? 0 : (v < r ? v + 1 : v); };
	Graph out(n);
	for (auto [u, v] : h.graph.edges()) out.add_edge(relabel(u), relabel(v));
	return out;
}

namespace {

// Vertices reachable from `start` without crossing the edge start-blocked;
// empty if more than `limit` vertices are reachable.
std::vector<int> side_of_bridge(const Graph& g, int start, int blocked, int limit)
{
	std::vector<char> seen(g.order(), 0);
	std::vector<int> out{start};
	seen[start] = 1;
	for (std::size_t i = 0; i < out.size(); ++i) {
		int v = out[i];
		for (int u : g.neighbors(v)) {
			if (seen[u] || (v == start && u == blocked)) continue;
			seen[u] = 1;
			out.push_back(u);
			if (static_cast<int>(out.size()) > limit) return {};
		}
	}
	std::sort(out.begin(), out.end());
	return out;
}

bool matches_increasing(const Graph& g, const std::vector<int>& w, const Graph& h)
{
	for (int i = 0; i < h.order(); ++i)
		for (int j = i + 1; j < h.order(); ++j)
			if (g.adjacent(w[i], w[j]) != h.adjacent(i, j)) return false;
	return true;
}

} // namespace

std::vector<PendantAppearance> find_pendant_appearances(const Graph& g, const RootedGraph& rooted)
{
	std::vector<PendantAppearance> out;
	const Graph h = root_first(rooted);
	const int k = h.order();
	if (k >= g.order()) return out;
	for (auto [a, b] : bridges(g)) {
		for (auto [inside, outside] : {Edge{a, b}, Edge{b, a}}) {
			auto w = side_of_bridge(g, inside, outside, k);
			if (static_cast<int>(w.size()) != k || w.front() != inside) continue;
			if (!matches_increasing(g, w, h)) continue;
			out.push_back({std::move(w), Edge{inside, outside}});
		}
	}
	std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.vertices < y.vertices; });
	return out;
}

int pendant_appearances(const Graph& g, const RootedGraph& h)
{
	return static_cast<int>(find_pendant_appearances(g, h).size());
}

int overlapping_pendant_appearances(const Graph& g, const RootedGraph& h)
{
	auto apps = find_pendant_appearances(g, h);
	auto same_edge = [](Edge x, Edge y) {
		return std::minmax(x.first, x.second) == std::minmax(y.first, y.second);
	};
	int count = 0;
	for (std::size_t i = 0; i < apps.size(); ++i) {
		for (std::size_t j = 0; j < apps.size(); ++j) {
			if (i == j) continue;
			std::vector<int> common;
			std::set_intersection(apps[i].vertices.begin(), apps[i].vertices.end(), apps[j].vertices.begin(),
				apps[j].vertices.end(), std::back_inserter(common));
			if (!common.empty() || same_edge(apps[i].root_edge, apps[j].root_edge)) {
				++count;
				break;
			}
		}
	}
	return count;
}

} // namespace wrg
