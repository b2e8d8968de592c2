#include "support.hpp"

#include "wrg/asymptotics.hpp"
#include "wrg/pendant.hpp"
#include "wrg/rng.hpp"
#include "wrg/sampling.hpp"
#include "wrg/stats.hpp"
#include "wrg/structure.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

using namespace wrg;
using testing::q;

TEST_CASE("Philox known answers")
{
	auto zero = Philox::encrypt({0, 0, 0, 0}, {0, 0});
	CHECK(zero == Philox::Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
	auto ones = Philox::encrypt({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff});
	CHECK(ones == Philox::Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
	auto pi = Philox::encrypt({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0});
	CHECK(pi == Philox::Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("Philox streams")
{
	Philox a(42, 0), b(42, 0), c(42, 1), d(43, 0);
	std::vector<std::uint64_t> xa, xb, xc, xd;
	for (int i = 0; i < 10; ++i) {
		xa.push_back(a());
		xb.push_back(b());
		xc.push_back(c());
		xd.push_back(d());
	}
	CHECK(xa == xb);
	CHECK(xa != xc);
	CHECK(xa != xd);
	// works with standard distributions
	Philox e(1);
	std::uniform_int_distribution<int> die(1, 6);
	int x = die(e);
	CHECK(x >= 1);
	CHECK(x <= 6);
}

TEST_CASE("uniform draws")
{
	Philox rng(9);
	const int n = 200000;
	double sum = 0;
	std::vector<std::uint64_t> counts(7);
	for (int i = 0; i < n; ++i) {
		double u = uniform01(rng);
		CHECK(u >= 0);
		CHECK(u < 1);
		sum += u;
		++counts[uniform_below(rng, 7)];
	}
	CHECK(std::abs(sum / n - 0.5) < 4 * std::sqrt(1.0 / 12 / n));
	for (auto c : counts) CHECK(std::abs(static_cast<double>(c) - n / 7.0) < 4 * std::sqrt(n / 7.0));
	CHECK(uniform_below(rng, 1) == 0);
}

TEST_CASE("Poisson variates")
{
	for (double mean : {0.0, 0.37, 4.0, 30.0, 1200.0}) {
		Philox rng(77, static_cast<std::uint64_t>(mean * 100));
		std::vector<std::uint64_t> xs(20000);
		for (auto& x : xs) x = poisson(rng, mean);
		double m = 0;
		for (auto x : xs) m += static_cast<double>(x);
		m /= static_cast<double>(xs.size());
		CHECK(std::abs(m - mean) <= 4 * std::sqrt(std::max(mean, 1e-9) / static_cast<double>(xs.size())) + 1e-12);
		if (mean > 0 && mean < 100) CHECK(chi_square_poisson(xs, mean).p_value > 1e-4);
	}
	Philox rng(1);
	CHECK_THROWS(poisson(rng, -1));
}

TEST_CASE("exact sampler law")
{
	auto forests = GraphFamily::forests();
	auto w = Weighting::diagonal(1, 1);
	ExactSampler one(forests, w, 1);
	CHECK(one.members().size() == 1);
	for (const auto& g : one.sample(3, 10)) CHECK(g.order() == 1);

	ExactSampler three(forests, w, 3);
	CHECK(three.members().size() == 7);
	for (std::size_t i = 0; i < three.members().size(); ++i) CHECK(three.probability(i) == q(1, 7));
	CHECK(three.total_weight() == 7);

	ExactSampler trees(GraphFamily::trees(), Weighting::diagonal(q(5), q(2)), 3);
	REQUIRE(trees.members().size() == 3);
	for (std::size_t i = 0; i < 3; ++i) CHECK(trees.probability(i) == q(1, 3));

	// every member of the 5-vertex slice within 4 sigma of its probability
	auto w2 = Weighting::diagonal(q(2), q(3, 2));
	ExactSampler five(GraphFamily::series_parallel(), w2, 5);
	const std::size_t draws = 1000000;
	std::map<std::uint64_t, std::uint64_t> freq;
	for (const auto& g : five.sample(2024, draws, 4)) ++freq[g.edge_mask()];
	int bad = 0;
	for (std::size_t i = 0; i < five.members().size(); ++i) {
		double p = five.probability(i).get_d();
		double sigma = std::sqrt(p * (1 - p) / draws);
		double got = static_cast<double>(freq[five.members()[i]]) / draws;
		if (std::abs(got - p) > 4 * sigma) ++bad;
		CHECK(p == doctest::Approx(weight_d(Graph::from_edge_mask(5, five.members()[i]), w2) / five.total_weight().get_d()));
	}
	// 4 sigma on ~900 cells: an occasional single excursion is possible, two are not plausible
	CHECK(bad <= 1);
}

TEST_CASE("samples do not depend on the thread count")
{
	auto fam = GraphFamily::planar();
	auto w = Weighting::diagonal(q(1, 2), q(1));
	auto a = exact_sample(fam, w, 5, 8, 500, 1);
	auto b = exact_sample(fam, w, 5, 8, 500, 3);
	CHECK(a == b);
	CHECK(random_tree_sample(20, 4, 50, 1) == random_tree_sample(20, 4, 50, 4));
	auto census = build_census(GraphFamily::forests(), 5);
	auto cfg = make_boltzmann_config(census, 0.3, Weighting::diagonal(1, 1));
	CHECK(boltzmann_poisson_sample(cfg, 5, 300, 1) == boltzmann_poisson_sample(cfg, 5, 300, 4));
}

TEST_CASE("exact connectivity frequency")
{
	auto w = Weighting::diagonal(1, 1);
	auto table = forest_table(w, 6);
	auto samples = exact_sample(GraphFamily::forests(), w, 6, 99, 100000, 4);
	auto s = collect_stats(samples);
	double p = Rational(table.c[6] / table.a[6]).get_d();
	CHECK(std::abs(s.conn_freq - p) <= 3 * std::sqrt(p * (1 - p) / 100000));
	CHECK(s.conn_freq == doctest::Approx(static_cast<double>(s.kappa_hist[1]) / s.draws));
}

TEST_CASE("Boltzmann sampler")
{
	auto census = build_census(GraphFamily::forests(), 6);
	auto w = Weighting::diagonal(1, 1);
	auto tiny = make_boltzmann_config(census, 1e-9, w);
	for (const auto& counts : boltzmann_poisson_sample(tiny, 1, 200))
		for (auto c : counts) CHECK(c == 0);

	auto cfg = make_boltzmann_config(census, 1 / std::exp(1.0), w);
	CHECK(cfg.truncated_mass);
	const std::size_t draws = 50000;
	auto sample = boltzmann_poisson_sample(cfg, 3, draws, 4);
	std::vector<double> mean(census.entries.size());
	std::uint64_t empty = 0;
	for (const auto& counts : sample) {
		bool none = true;
		for (std::size_t i = 0; i < counts.size(); ++i) {
			mean[i] += static_cast<double>(counts[i]) / draws;
			none = none && counts[i] == 0;
		}
		empty += none;
	}
	for (std::size_t i = 0; i < census.entries.size(); ++i) {
		double m = mu(census.entries[i], cfg.rho, w);
		CHECK(std::abs(mean[i] - m) <= 3.5 * std::sqrt(m / draws));
	}
	double c = census_series_eval(census, cfg.rho, w).c.value;
	double p_empty = std::exp(-c);
	CHECK(std::abs(static_cast<double>(empty) / draws - p_empty) <= 4 * std::sqrt(p_empty * (1 - p_empty) / draws));

	// graphs assembled from counts carry those components
	auto g = boltzmann_graph(census, sample[7]);
	std::uint64_t total = 0;
	for (auto k : sample[7]) total += k;
	CHECK(static_cast<std::uint64_t>(component_count(g)) == total);
	auto stats = collect_stats(std::vector<Graph>{g}, {}, &census);
	for (std::size_t i = 0; i < census.entries.size(); ++i) {
		const auto& hist = stats.comp_counts.at(census.entries[i].code);
		CHECK(hist.begin()->first == static_cast<int>(sample[7][i]));
	}
}

TEST_CASE("Metropolis ratio and chain")
{
	auto w = Weighting::diagonal(q(3), q(1, 2));
	Graph a(3);
	Graph b = Graph::from_edges(3, std::vector<Edge>{{0, 1}});
	CHECK(metropolis_ratio(a, b, w) == 6); // lambda / nu
	CHECK(metropolis_ratio(b, a, w) == q(1, 6));

	// G(n, p) with p = lambda / (1 + lambda) when nu = 1
	auto w2 = Weighting::diagonal(q(2), q(1));
	auto chain = mcmc_sample(GraphFamily::all_graphs(), w2, 8, 400000, 20000, 10, 5);
	CHECK(chain.size() == 40000);
	double edges = 0;
	for (const auto& g : chain) edges += g.size();
	double density = edges / chain.size() / pair_count(8);
	CHECK(density == doctest::Approx(2.0 / 3).epsilon(0.02));

	auto uniform = mcmc_sample(GraphFamily::all_graphs(), Weighting::diagonal(1, 1), 6, 200000, 10000, 10, 6);
	double mean_edges = 0;
	for (const auto& g : uniform) mean_edges += g.size();
	CHECK(mean_edges / uniform.size() == doctest::Approx(7.5).epsilon(0.02));

	CHECK_THROWS(mcmc_sample(GraphFamily::trees(), w, 5, 10, 10, 1, 1));
	for (const auto& g : mcmc_sample(GraphFamily::series_parallel(), w, 7, 20000, 1000, 50, 2))
		CHECK(GraphFamily::series_parallel().member(g));
}

TEST_CASE("exact transition matrices are stationary")
{
	for (int n = 2; n <= 4; ++n)
		for (auto w : {Weighting::diagonal(q(1), q(1)), Weighting::diagonal(q(3), q(1, 2)), Weighting::extended(q(2), q(1, 3), q(5))}) {
			auto forests = mcmc_transition_matrix(GraphFamily::forests(), w, n);
			CHECK(forests.stationary_exact());
			auto all = mcmc_transition_matrix(GraphFamily::all_graphs(), w, n);
			CHECK(all.stationary_exact());
			CHECK(all.states.size() == (1u << pair_count(n)));
		}
	auto t = mcmc_transition_matrix(GraphFamily::forests(), Weighting::diagonal(1, 1), 3);
	CHECK(t.states.size() == 7);
	// a non-stationary vector is caught
	t.stationary[0] += q(1, 100);
	t.stationary[1] -= q(1, 100);
	CHECK_FALSE(t.stationary_exact());
}

TEST_CASE("random trees")
{
	Philox rng(3);
	for (int i = 0; i < 10; ++i) CHECK(random_tree(2, rng) == path_graph(2));
	CHECK(random_tree(1, rng).order() == 1);

	std::map<std::uint64_t, std::uint64_t> freq;
	const std::size_t draws = 100000;
	for (const auto& t : random_tree_sample(3, 12, draws, 4)) ++freq[t.edge_mask()];
	CHECK(freq.size() == 3);
	for (auto [m, c] : freq) CHECK(std::abs(static_cast<double>(c) / draws - 1.0 / 3) <= 3 * std::sqrt(2.0 / 9 / draws));

	// all 125 labelled trees on 5 vertices appear, roughly evenly
	std::map<std::uint64_t, std::uint64_t> five;
	for (const auto& t : random_tree_sample(5, 13, 125000, 4)) {
		CHECK(is_connected(t));
		CHECK(t.size() == 4);
		++five[t.edge_mask()];
	}
	CHECK(five.size() == 125);
	std::vector<std::uint64_t> counts;
	for (auto [m, c] : five) counts.push_back(c);
	double chi = 0;
	for (auto c : counts) chi += (c - 1000.0) * (c - 1000.0) / 1000.0;
	CHECK(chi < 200); // 124 degrees of freedom: the 0.9999 quantile is about 190

	auto k1 = RootedGraph::make(Graph(1), 0);
	auto trees = random_tree_sample(300, 21, 1000, 4);
	auto stats = collect_stats(trees, std::vector<RootedGraph>{k1});
	double exact = std::pow(1 - 1.0 / 300, 299);
	CHECK(std::abs(stats.pendant_density[0] - exact) <= 0.005);
	CHECK(std::abs(stats.pendant_density[0] - std::exp(-1.0)) <= 0.01);
}

TEST_CASE("sample statistics")
{
	std::vector<Graph> connected{path_graph(3), cycle_graph(4), complete_graph(3)};
	auto s = collect_stats(connected);
	CHECK(s.draws == 3);
	CHECK(s.conn_freq == 1);
	CHECK(s.frag_hist.size() == 1);
	CHECK(s.frag_hist.at(0) == 3);
	CHECK(s.core_hist.at(0) == 1);
	CHECK(s.core_hist.at(3) == 1);
	CHECK(s.core_hist.at(4) == 1);
	CHECK(s.core_frac_mean == doctest::Approx((0 + 1 + 1) / 3.0));

	std::vector<Graph> mixed{Graph(3), disjoint_union(path_graph(2), Graph(1))};
	auto m = collect_stats(mixed);
	std::uint64_t mass = 0;
	for (auto [k, c] : m.kappa_hist) mass += c;
	CHECK(mass == m.draws);
	CHECK(m.edges_kappa_hist.at({0, 3}) == 1);
	CHECK(m.edges_kappa_hist.at({1, 2}) == 1);
	// isolated vertices: 3 in the first draw, 1 in the second
	const auto& iso = m.comp_counts.at(canonicalize(Graph(1)));
	CHECK(iso.at(3) == 1);
	CHECK(iso.at(1) == 1);
	// a type missing from one draw is recorded as zero there
	const auto& edge = m.comp_counts.at(canonicalize(path_graph(2)));
	CHECK(edge.at(0) == 1);
	CHECK(edge.at(1) == 1);
}

TEST_CASE("fragment law of exact forest samples")
{
	auto census = build_census(GraphFamily::forests(), 7);
	auto law = frag_size_distribution(census, 1 / std::exp(1.0), Weighting::diagonal(1, 1), std::exp(0.5));
	double previous = 1;
	for (int n = 4; n <= 7; ++n) {
		auto hist = shape_histogram(GraphFamily::forests(), n);
		auto exact = frag_distribution(hist, Weighting::diagonal(1, 1));
		double drift = 0;
		for (std::size_t k = 0; k < exact.size() && k < law.probabilities.size(); ++k)
			drift = std::max(drift, std::abs(exact[k].get_d() - law.probabilities[k]));
		CHECK(drift < previous);
		previous = drift;
	}
}
