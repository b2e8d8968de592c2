#include "wrg/minor.hpp"

#include "wrg/canonical.hpp"
#include "wrg/errors.hpp"
#include "wrg/structure.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace wrg {

namespace {

void require_small(const Graph& g, const char* what)
{
	if (g.order() > 64) throw std::invalid_argument(std::string(what) + ": order above 64 not supported");
}

// Compact working graph: bit rows, vertices 0..n-1.
struct Rows
{
	int n = 0;
	std::vector<std::uint64_t> adj;

	explicit Rows(const Graph& g)
		: n(g.order())
		, adj(g.order())
	{
		for (int v = 0; v < n; ++v) adj[v] = g.row_mask(v);
	}

	int edges() const
	{
		int total = 0;
		for (int v = 0; v < n; ++v) total += std::popcount(adj[v]);
		return total / 2;
	}

	int components() const
	{
		std::uint64_t unseen = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
		int count = 0;
		while (unseen) {
			std::uint64_t comp = unseen & (~unseen + 1);
			std::uint64_t frontier = comp;
			while (frontier) {
				int v = std::countr_zero(frontier);
				frontier &= frontier - 1;
				std::uint64_t fresh = adj[v] & ~comp;
				comp |= fresh;
				frontier |= fresh;
			}
			unseen &= ~comp;
			++count;
		}
		return count;
	}

	void remove_vertex(int v)
	{
		std::uint64_t low = (std::uint64_t{1} << v) - 1;
		for (int u = 0; u < n; ++u) {
			auto r = adj[u];
			adj[u] = (r & low) | ((r >> 1) & ~low);
		}
		adj.erase(adj.begin() + v);
		--n;
	}

	// merges v into u and deletes v
	void contract(int u, int v)
	{
		adj[u] |= adj[v];
		adj[u] &= ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
		for (int w = 0; w < n; ++w) {
			if ((adj[v] >> w) & 1U) {
				adj[w] |= std::uint64_t{1} << u;
			}
		}
		adj[u] &= ~(std::uint64_t{1} << u);
		remove_vertex(v);
	}

	Graph to_graph() const
	{
		Graph g(n);
		for (int v = 0; v < n; ++v) {
			auto bits = adj[v] & ~((std::uint64_t{2} << v) - 1);
			while (bits) {
				int u = std::countr_zero(bits);
				bits &= bits - 1;
				g.add_edge(v, u);
			}
		}
		return g;
	}
};

// Forced reductions that preserve "h is a minor" given h's minimum degree.
void reduce(Rows& s, int h_min_degree)
{
	if (h_min_degree < 2) return;
	bool changed = true;
	while (changed) {
		changed = false;
		for (int v = 0; v < s.n; ++v) {
			int d = std::popcount(s.adj[v]);
			if (d <= 1) {
				s.remove_vertex(v);
				changed = true;
				break;
			}
			if (d == 2 && h_min_degree >= 3) {
				int a = std::countr_zero(s.adj[v]);
				s.contract(a, v);
				changed = true;
				break;
			}
		}
	}
}

class MinorSearch
{
public:
	MinorSearch(const Graph& h, const MinorOptions& options)
		: h_(h)
		, options_(options)
		, h_edges_(h.size())
		, h_cyclomatic_(cyclomatic_number(h))
		, h_min_degree_(min_degree(h))
	{
	}

	bool search(Rows s)
	{
		reduce(s, h_min_degree_);
		if (s.n < h_.order()) return false;
		int e = s.edges();
		if (e < h_edges_) return false;
		if (e - s.n + s.components() < h_cyclomatic_) return false;
		Graph state = s.to_graph();
		if (!seen_.insert(canonicalize(state, 64)).second) return false;
		if (++nodes_ > options_.node_budget)
			throw ResourceError("has_minor: search budget of " + std::to_string(options_.node_budget) + " states exceeded");
		if (contains_subgraph(state, h_)) return true;
		if (s.n == h_.order()) return false;
		for (int u = 0; u < s.n; ++u) {
			auto bits = s.adj[u] & ~((std::uint64_t{2} << u) - 1);
			while (bits) {
				int v = std::countr_zero(bits);
				bits &= bits - 1;
				Rows child = s;
				child.contract(u, v);
				if (search(std::move(child))) return true;
			}
		}
		return false;
	}

private:
	const Graph& h_;
	const MinorOptions& options_;
	int h_edges_;
	int h_cyclomatic_;
	int h_min_degree_;
	std::uint64_t nodes_ = 0;
	std::unordered_set<CanonicalCode, CanonicalCodeHash> seen_;
};

} // namespace

bool contains_subgraph(const Graph& g, const Graph& h)
{
	require_small(g, "contains_subgraph");
	require_small(h, "contains_subgraph");
	const int hn = h.order();
	const int gn = g.order();
	if (hn == 0) return true;
	if (hn > gn || h.size() > g.size()) return false;

	// order h's vertices so each one has many earlier neighbours
	std::vector<int> order;
	std::uint64_t placed = 0;
	for (int step = 0; step < hn; ++step) {
		int best = -1, best_links = -1, best_deg = -1;
		for (int v = 0; v < hn; ++v) {
			if ((placed >> v) & 1U) continue;
			int links = std::popcount(h.row_mask(v) & placed);
			int deg = std::popcount(h.row_mask(v));
			if (links > best_links || (links == best_links && deg > best_deg)) {
				best = v;
				best_links = links;
				best_deg = deg;
			}
		}
		order.push_back(best);
		placed |= std::uint64_t{1} << best;
	}
	std::vector<int> g_degree(gn);
	for (int v = 0; v < gn; ++v) g_degree[v] = std::popcount(g.row_mask(v));
	std::vector<int> image(hn, -1);

	auto extend = [&](auto&& self, int i, std::uint64_t used) -> bool {
		if (i == hn) return true;
		int v = order[i];
		std::uint64_t cand = (gn == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << gn) - 1) & ~used;
		auto hv = h.row_mask(v);
		for (int j = 0; j < i; ++j)
			if ((hv >> order[j]) & 1U) cand &= g.row_mask(image[order[j]]);
		int need = std::popcount(hv);
		while (cand) {
			int w = std::countr_zero(cand);
			cand &= cand - 1;
			if (g_degree[w] < need) continue;
			image[v] = w;
			if (self(self, i + 1, used | (std::uint64_t{1} << w))) return true;
		}
		return false;
	};
	return extend(extend, 0, 0);
}

bool has_minor(const Graph& g, const Graph& h, const MinorOptions& options)
{
	require_small(g, "has_minor");
	require_small(h, "has_minor");
	if (h.order() == 0) return true;
	if (h.order() > g.order() || h.size() > g.size()) return false;
	if (cyclomatic_number(g) < cyclomatic_number(h)) return false;

	MinorSearch search(h, options);
	if (is_connected(h)) {
		// a connected minor lives inside a single component
		for (const auto& comp : components(g)) {
			if (static_cast<int>(comp.size()) < h.order()) continue;
			if (search.search(Rows(induced_subgraph(g, comp)))) return true;
		}
		return false;
	}
	return search.search(Rows(g));
}

bool has_k4_minor(const Graph& g)
{
	require_small(g, "has_k4_minor");
	Rows s(g);
	reduce(s, 3);
	return s.n > 0;
}

bool is_planar(const Graph& g)
{
	if (g.order() < 5 || g.size() < 9) return true;
	if (g.size() > 3 * g.order() - 6) return false;
	using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
	BoostGraph bg(g.order());
	for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
	return boost::boyer_myrvold_planarity_test(bg);
}

} // namespace wrg
