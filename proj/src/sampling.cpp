#include "wrg/sampling.hpp"

#include "wrg/asymptotics.hpp"
#include "wrg/errors.hpp"
#include "wrg/parallel.hpp"
#include "wrg/pendant.hpp"
#include "wrg/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace wrg {

namespace {

// Fill out[i] = make(i) for i < count, one Philox stream per index.
template <class T, class Make>
std::vector<T> per_draw(std::size_t count, int threads, Make make)
{
	std::vector<T> out(count);
	parallel_chunks(count, threads, [&](std::uint64_t begin, std::uint64_t end, int) {
		for (std::uint64_t i = begin; i < end; ++i) out[i] = make(i);
	});
	return out;
}

} // namespace

ExactSampler::ExactSampler(const GraphFamily& family, const Weighting& w, int n, const EnumerationOptions& options)
	: n_(n)
	, w_(w)
	, total_(0)
{
	if (n < 0 || n > std::min(options.max_order, kHardEnumerationCap))
		throw ResourceError("exact sampling needs n <= " + std::to_string(std::min(options.max_order, kHardEnumerationCap)));
	const std::uint64_t total = std::uint64_t{1} << pair_count(n);
	std::vector<std::vector<std::uint64_t>> partial(chunk_count(total, options.threads));
	parallel_chunks(total, options.threads, [&](std::uint64_t begin, std::uint64_t end, int chunk) {
		for (std::uint64_t mask = begin; mask < end; ++mask)
			if (family.member(Graph::from_edge_mask(n, mask))) partial[chunk].push_back(mask);
	});
	for (auto& p : partial) masks_.insert(masks_.end(), p.begin(), p.end());
	if (masks_.empty()) throw std::invalid_argument("family " + family.name() + " has no members on " + std::to_string(n) + " vertices");

	std::map<std::tuple<int, int, int>, Rational> cache;
	std::vector<const Rational*> weights;
	weights.reserve(masks_.size());
	for (auto mask : masks_) {
		auto g = Graph::from_edge_mask(n, mask);
		int b = static_cast<int>(bridges(g).size());
		std::tuple<int, int, int> key{b, g.size() - b, component_count(g)};
		auto it = cache.find(key);
		if (it == cache.end()) it = cache.emplace(key, w.evaluate(b, g.size() - b, std::get<2>(key))).first;
		weights.push_back(&it->second);
		total_ += it->second;
	}
	cumulative_.reserve(masks_.size());
	double running = 0;
	for (const auto* wt : weights) {
		running += Rational(*wt / total_).get_d();
		cumulative_.push_back(running);
	}
	for (auto& c : cumulative_) c /= running;
	cumulative_.back() = 1;
}

Rational ExactSampler::probability(std::size_t i) const
{
	return weight(Graph::from_edge_mask(n_, masks_.at(i)), w_) / total_;
}

Graph ExactSampler::draw(Philox& rng) const
{
	double u = uniform01(rng);
	auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
	std::size_t i = std::min<std::size_t>(it - cumulative_.begin(), masks_.size() - 1);
	return Graph::from_edge_mask(n_, masks_[i]);
}

std::vector<Graph> ExactSampler::sample(std::uint64_t seed, std::size_t draws, int threads) const
{
	return per_draw<Graph>(draws, threads, [&](std::uint64_t i) {
		Philox rng(seed, i);
		return draw(rng);
	});
}

std::vector<Graph> exact_sample(const GraphFamily& family, const Weighting& w, int n, std::uint64_t seed,
	std::size_t draws, int threads)
{
	return ExactSampler(family, w, n, {kHardEnumerationCap, threads}).sample(seed, draws, threads);
}

BoltzmannConfig make_boltzmann_config(const UnlabelledCensus& census, double rho, const Weighting& w)
{
	if (!(rho > 0)) throw std::invalid_argument("rho must be positive");
	BoltzmannConfig cfg;
	cfg.rho = rho;
	cfg.weighting = w;
	cfg.census = &census;
	auto series = census_series_eval(census, rho, w);
	cfg.truncated_mass = series.c.tail_bound;
	if (!cfg.truncated_mass) cfg.note = "mass beyond the census is unknown";
	return cfg;
}

std::vector<std::vector<std::uint64_t>> boltzmann_poisson_sample(const BoltzmannConfig& cfg, std::uint64_t seed,
	std::size_t draws, int threads)
{
	if (!cfg.census || cfg.census->entries.empty()) throw std::invalid_argument("Boltzmann sampling needs a non-empty census");
	std::vector<double> means;
	for (const auto& e : cfg.census->entries) means.push_back(mu(e, cfg.rho, cfg.weighting));
	return per_draw<std::vector<std::uint64_t>>(draws, threads, [&](std::uint64_t i) {
		Philox rng(seed, i);
		std::vector<std::uint64_t> counts(means.size());
		for (std::size_t j = 0; j < means.size(); ++j) counts[j] = poisson(rng, means[j]);
		return counts;
	});
}

Graph boltzmann_graph(const UnlabelledCensus& census, std::span<const std::uint64_t> counts)
{
	if (counts.size() != census.entries.size()) throw std::invalid_argument("one count per census entry expected");
	Graph out;
	for (std::size_t j = 0; j < counts.size(); ++j)
		if (counts[j] > 0) out = disjoint_union(out, repeat_union(census.entries[j].representative, static_cast<int>(counts[j])));
	return out;
}

Rational metropolis_ratio(const Graph& from, const Graph& to, const Weighting& w) { return weight(to, w) / weight(from, w); }

std::vector<Graph> mcmc_sample(const GraphFamily& family, const Weighting& w, int n, std::uint64_t steps,
	std::uint64_t burn_in, std::uint64_t thin, std::uint64_t seed)
{
	if (family.connected_only()) throw std::invalid_argument("MCMC needs a family closed under edge deletion");
	if (n < 1) throw std::invalid_argument("MCMC needs n >= 1");
	if (thin == 0) throw std::invalid_argument("thin must be positive");
	std::vector<Edge> pairs;
	for (int v = 1; v < n; ++v)
		for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);

	Graph g(n);
	std::vector<Graph> out;
	if (pairs.empty()) {
		out.assign(steps / thin, g);
		return out;
	}
	Philox rng(seed, 0);
	const bool diagonal = w.is_diagonal();
	const double lambda = w.lambda0().get_d();
	const double nu = w.nu_d();

	auto step = [&] {
		auto [u, v] = pairs[uniform_below(rng, pairs.size())];
		double ratio;
		bool removing = g.adjacent(u, v);
		if (removing) {
			double before = diagonal ? 0 : weight_d(g, w);
			g.remove_edge(u, v);
			if (diagonal)
				ratio = (connected_pair(g, u, v) ? 1.0 : nu) / lambda;
			else
				ratio = weight_d(g, w) / before;
		} else {
			double before = diagonal ? 0 : weight_d(g, w);
			bool joins = !connected_pair(g, u, v);
			g.add_edge(u, v);
			if (!family.member(g)) {
				g.remove_edge(u, v);
				return;
			}
			if (diagonal)
				ratio = lambda / (joins ? nu : 1.0);
			else
				ratio = weight_d(g, w) / before;
		}
		if (ratio >= 1 || uniform01(rng) < ratio) return;
		if (removing)
			g.add_edge(u, v);
		else
			g.remove_edge(u, v);
	};

	for (std::uint64_t t = 0; t < burn_in; ++t) step();
	out.reserve(steps / thin);
	for (std::uint64_t t = 1; t <= steps; ++t) {
		step();
		if (t % thin == 0) out.push_back(g);
	}
	return out;
}

bool TransitionMatrix::stationary_exact() const
{
	const std::size_t m = states.size();
	for (std::size_t i = 0; i < m; ++i) {
		Rational row = 0;
		for (std::size_t j = 0; j < m; ++j) row += p[i][j];
		if (row != 1) return false;
	}
	for (std::size_t j = 0; j < m; ++j) {
		Rational flow = 0;
		for (std::size_t i = 0; i < m; ++i) flow += stationary[i] * p[i][j];
		if (flow != stationary[j]) return false;
	}
	return true;
}

TransitionMatrix mcmc_transition_matrix(const GraphFamily& family, const Weighting& w, int n)
{
	if (n < 2 || n > 5) throw ResourceError("transition matrices are built for 2 <= n <= 5");
	if (family.connected_only()) throw std::invalid_argument("MCMC needs a family closed under edge deletion");
	TransitionMatrix tm;
	const int pairs = pair_count(n);
	std::unordered_map<std::uint64_t, std::size_t> index;
	std::vector<Rational> tau;
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
		auto g = Graph::from_edge_mask(n, mask);
		if (!family.member(g)) continue;
		index[mask] = tm.states.size();
		tm.states.push_back(mask);
		tau.push_back(weight(g, w));
	}
	Rational total = 0;
	for (const auto& t : tau) total += t;
	for (const auto& t : tau) tm.stationary.push_back(t / total);

	const std::size_t m = tm.states.size();
	const Rational proposal(1, pairs);
	tm.p.assign(m, std::vector<Rational>(m, Rational(0)));
	for (std::size_t i = 0; i < m; ++i) {
		for (int bit = 0; bit < pairs; ++bit) {
			auto it = index.find(tm.states[i] ^ (std::uint64_t{1} << bit));
			if (it == index.end()) {
				tm.p[i][i] += proposal;
				continue;
			}
			std::size_t j = it->second;
			Rational ratio = metropolis_ratio(Graph::from_edge_mask(n, tm.states[i]), Graph::from_edge_mask(n, tm.states[j]), w);
			Rational accept = ratio < 1 ? ratio : Rational(1);
			tm.p[i][j] += proposal * accept;
			tm.p[i][i] += proposal * (1 - accept);
		}
	}
	return tm;
}

Graph random_tree(int n, Philox& rng)
{
	if (n < 1) throw std::invalid_argument("random_tree: n must be positive");
	Graph g(n);
	if (n == 1) return g;
	if (n == 2) {
		g.add_edge(0, 1);
		return g;
	}
	std::vector<int> code(n - 2);
	std::vector<int> degree(n, 1);
	for (auto& x : code) {
		x = static_cast<int>(uniform_below(rng, n));
		++degree[x];
	}
	int ptr = 0;
	while (degree[ptr] != 1) ++ptr;
	int leaf = ptr;
	for (int x : code) {
		g.add_edge(std::min(leaf, x), std::max(leaf, x));
		degree[leaf] = 0;
		if (--degree[x] == 1 && x < ptr) {
			leaf = x;
		} else {
			++ptr;
			while (degree[ptr] != 1) ++ptr;
			leaf = ptr;
		}
	}
	g.add_edge(std::min(leaf, n - 1), std::max(leaf, n - 1));
	return g;
}

std::vector<Graph> random_tree_sample(int n, std::uint64_t seed, std::size_t draws, int threads)
{
	if (n < 1) throw std::invalid_argument("random_tree_sample: n must be positive");
	return per_draw<Graph>(draws, threads, [&](std::uint64_t i) {
		Philox rng(seed, i);
		return random_tree(n, rng);
	});
}

SampleStats collect_stats(std::span<const Graph> samples, std::span<const RootedGraph> rooted, const UnlabelledCensus* census)
{
	SampleStats s;
	s.draws = samples.size();
	s.pendant_density.assign(rooted.size(), 0);
	std::unordered_map<CanonicalCode, std::size_t, CanonicalCodeHash> tracked;
	std::vector<CanonicalCode> codes;
	if (census) {
		for (const auto& e : census->entries) {
			tracked.emplace(e.code, codes.size());
			codes.push_back(e.code);
		}
	}
	const int max_component = census ? census->max_order : kDefaultCanonicalCap;
	std::vector<std::map<int, std::uint64_t>> hist(codes.size());
	std::uint64_t connected = 0;
	double core_frac = 0;

	for (const auto& g : samples) {
		const int n = g.order();
		int kappa = component_count(g);
		++s.kappa_hist[kappa];
		++s.frag_hist[n == 0 ? 0 : frag_order(g)];
		int core = core_order(g);
		++s.core_hist[core];
		if (n > 0) core_frac += static_cast<double>(core) / n;
		if (kappa == 1) ++connected;
		++s.edges_kappa_hist[{g.size(), kappa}];

		std::vector<int> counts(codes.size(), 0);
		for (const auto& comp : components(g)) {
			if (static_cast<int>(comp.size()) > max_component) continue;
			auto code = canonicalize(induced_subgraph(g, comp), std::max(max_component, 1));
			auto it = tracked.find(code);
			if (it == tracked.end()) {
				if (census) continue;
				it = tracked.emplace(code, codes.size()).first;
				codes.push_back(code);
				counts.push_back(0);
				hist.emplace_back();
			}
			++counts[it->second];
		}
		for (std::size_t j = 0; j < codes.size(); ++j)
			if (counts[j] > 0) ++hist[j][counts[j]];

		for (std::size_t r = 0; r < rooted.size(); ++r)
			if (rooted[r].graph.order() < n) s.pendant_density[r] += static_cast<double>(pendant_appearances(g, rooted[r])) / n;
	}
	for (std::size_t j = 0; j < codes.size(); ++j) {
		std::uint64_t nonzero = 0;
		for (const auto& [k, c] : hist[j]) nonzero += c;
		if (s.draws > nonzero) hist[j][0] = s.draws - nonzero;
		s.comp_counts[codes[j]] = std::move(hist[j]);
	}
	if (s.draws > 0) {
		s.conn_freq = static_cast<double>(connected) / static_cast<double>(s.draws);
		s.core_frac_mean = core_frac / static_cast<double>(s.draws);
		for (auto& d : s.pendant_density) d /= static_cast<double>(s.draws);
	}
	return s;
}

} // namespace wrg
