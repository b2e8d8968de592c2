#include "support.hpp"

#include "wrg/asymptotics.hpp"
#include "wrg/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace wrg;
using testing::q;

namespace {

const double e = std::exp(1.0);

} // namespace

TEST_CASE("beta")
{
	CHECK_FALSE(solve_beta(e, 1));
	CHECK_FALSE(solve_beta(2.0, 1));
	auto planar = solve_beta(27.226878, 1);
	REQUIRE(planar);
	CHECK(*planar == doctest::Approx(26.207554).epsilon(1e-7));
	auto two = solve_beta(2 * std::exp(0.5), 1);
	REQUIRE(two);
	CHECK(*two == doctest::Approx(2.0).epsilon(1e-10));
	auto scaled = solve_beta(3 * 2 * std::exp(0.5), 3);
	REQUIRE(scaled);
	CHECK(*scaled == doctest::Approx(6.0).epsilon(1e-10));
	CHECK_THROWS_AS(solve_beta(1e9, 1), ConvergenceError);
}

TEST_CASE("alpha")
{
	CHECK(solve_alpha(e, 1) == 0);
	CHECK(solve_alpha(1.0, 1) == 0);
	CHECK(solve_alpha(27.226878, 1) == doctest::Approx(0.961843).epsilon(1e-6));
	CHECK(solve_alpha(2 * std::exp(0.5), 1) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("roots: forward-backward and mutual consistency")
{
	std::mt19937_64 rng(31);
	std::uniform_real_distribution<double> lambda_dist(0.1, 5), excess(1.0001, 300);
	for (int i = 0; i < 300; ++i) {
		double lambda = lambda_dist(rng), gamma = lambda * e * excess(rng);
		auto k = solve_constants(gamma, Weighting::diagonal(parse_rational(std::to_string(lambda)), 1));
		auto beta = solve_beta(gamma, lambda);
		REQUIRE(beta);
		CHECK(*beta > lambda);
		double alpha = solve_alpha(gamma, lambda);
		CHECK(alpha > 0);
		CHECK(alpha < 1);
		CHECK(std::abs(beta_residual(*beta, gamma, lambda)) <= 1e-12 * gamma);
		CHECK(std::abs(alpha_residual(alpha, gamma, lambda)) <= 1e-12);
		CHECK(std::abs(alpha - (1 - lambda / *beta)) <= 10 * kDefaultRootTolerance * std::max(1.0, gamma));
		CHECK(k.rho * k.gamma == doctest::Approx(1.0));
	}
}

TEST_CASE("mu")
{
	auto census = build_census(GraphFamily::planar(), 3);
	const auto& k1 = census.entries[0];
	const auto& k2 = census.entries[1];
	const auto& c3 = census.entries[3];
	CHECK(mu(k1, 1 / e, Weighting::diagonal(1, 1)) == doctest::Approx(0.367879).epsilon(1e-6));
	CHECK(mu(k2, 1 / e, Weighting::diagonal(2, 3)) == doctest::Approx(3 * std::exp(-2.0)).epsilon(1e-12));
	double rho0 = 1 / 27.226878;
	CHECK(mu(c3, rho0, Weighting::diagonal(1, 1)) == doctest::Approx(std::pow(rho0, 3) / 6));
	CHECK(mu(c3, rho0, Weighting::diagonal(1, 1)) == doctest::Approx(8.3e-6).epsilon(0.01));
}

TEST_CASE("tree series")
{
	auto w = Weighting::diagonal(1, 1);
	auto s = tree_series_eval(1 / e, w, 10000);
	REQUIRE(s.t.tail_bound);
	CHECK(std::abs(s.t.value - 0.5) <= 1e-5);
	CHECK(0.5 - s.t.value <= *s.t.tail_bound);
	CHECK(s.t.value < 0.5);
	CHECK(s.t.terms_used == 10000);

	auto rooted = tree_series_eval(1 / e, w, 1000000).t_rooted;
	REQUIRE(rooted.tail_bound);
	CHECK(std::abs(rooted.value - 1) <= 1e-3);
	CHECK(1 - rooted.value <= *rooted.tail_bound);

	auto w23 = Weighting::diagonal(2, 3);
	auto s23 = tree_series_eval(1 / (2 * e), w23, 20000);
	CHECK(std::abs(s23.t.value - 0.75) <= *s23.t.tail_bound);
	CHECK(std::abs(s23.t_rooted.value - 1.5) <= *s23.t_rooted.tail_bound);

	// below the radius the rooted series solves R = lambda x e^R
	auto inside = tree_series_eval(0.15, w23, 2000);
	CHECK_THROWS(tree_series_eval(0.2, w23, 10));
	CHECK(inside.u_check < 1e-12);
}

TEST_CASE("tree series tail bounds hold under doubling")
{
	for (long n : {100L, 1000L, 10000L}) {
		auto a = tree_series_eval(1 / e, Weighting::diagonal(1, 1), n);
		auto b = tree_series_eval(1 / e, Weighting::diagonal(1, 1), 2 * n);
		CHECK(b.t.value - a.t.value <= *a.t.tail_bound);
		CHECK(b.t_rooted.value - a.t_rooted.value <= *a.t_rooted.tail_bound);
		CHECK(b.t.value >= a.t.value);
	}
}

TEST_CASE("census series")
{
	auto w = Weighting::diagonal(1, 1);
	UnlabelledCensus empty;
	auto z = census_series_eval(empty, 0.3, w);
	CHECK(z.c.value == 0);
	CHECK(z.d.value == 0);
	CHECK(z.d_prime.value == 0);

	auto forests6 = build_census(GraphFamily::forests(), 6);
	auto s = census_series_eval(forests6, 1 / e, w);
	CHECK(s.d.value < 0.5);
	CHECK(s.d.value > 0.45);
	REQUIRE(s.d.tail_bound);
	CHECK(0.5 - s.d.value <= *s.d.tail_bound);
	CHECK(s.c.value == s.d.value);

	// monotone in the census order
	double last = 0;
	for (int n = 1; n <= 6; ++n) {
		auto v = census_series_eval(build_census(GraphFamily::forests(), n), 1 / e, w).d.value;
		CHECK(v >= last);
		last = v;
	}

	auto k1_only = build_census(GraphFamily::forests(), 1);
	CHECK(census_series_eval(k1_only, 0.2, Weighting::diagonal(1, 3)).c.value == doctest::Approx(0.6));

	auto planar = build_census(GraphFamily::planar(), 5);
	auto p = census_series_eval(planar, 1 / 27.226878, w);
	CHECK_FALSE(p.c.tail_bound);
	CHECK(p.c.value > 0);
	CHECK(p.d.value == p.c.value); // planar is decomposable

	// without free addability nothing is counted in D
	auto one_cycle = build_census(GraphFamily::disjoint_cycles(1), 4);
	CHECK_FALSE(one_cycle.freely_addable);
	CHECK(census_series_eval(one_cycle, 0.1, w).d.value == 0);
	auto acyclic = census_series_eval(one_cycle, 0.1, w, [](const CensusEntry& h) { return h.edges < h.order; });
	CHECK(acyclic.d.value > 0);
	CHECK(acyclic.d.value < acyclic.c.value);
}

TEST_CASE("connectivity limit is nu-linear")
{
	auto census = build_census(GraphFamily::series_parallel(), 5);
	double rho = 0.1;
	for (double nu : {0.5, 2.0, 3.0}) {
		auto w = Weighting::diagonal(q(3, 2), parse_rational(std::to_string(nu)));
		auto w1 = Weighting::diagonal(q(3, 2), 1);
		double d = census_series_eval(census, rho, w).d.value;
		double d1 = census_series_eval(census, rho, w1).d.value;
		CHECK(std::exp(-d) == doctest::Approx(std::pow(std::exp(-d1), nu)));
		auto f = forest_limit_pack(w);
		auto f1 = forest_limit_pack(w1);
		CHECK(f.conn_limit == doctest::Approx(std::pow(f1.conn_limit, nu)));
	}
}

TEST_CASE("forest limits")
{
	auto f = forest_limit_pack(Weighting::diagonal(1, 1));
	CHECK(f.conn_limit == doctest::Approx(0.606531).epsilon(1e-6));
	CHECK(f.frag_mean_limit == 1);
	CHECK(f.kappa_mean_limit == 1.5);
	CHECK(forest_limit_pack(Weighting::diagonal(7, 7)).conn_limit == doctest::Approx(std::exp(-0.5)));
	CHECK(forest_limit_pack(Weighting::diagonal(2, 1)).frag_mean_limit == 0.5);
}

TEST_CASE("pendant limits")
{
	auto k1 = RootedGraph::make(Graph(1), 0);
	auto k2 = RootedGraph::make(path_graph(2), 0);
	CHECK(pendant_limit(k1, e, 1) == doctest::Approx(0.367879).epsilon(1e-6));
	CHECK(pendant_limit(k2, e, 1) == doctest::Approx(0.067668).epsilon(1e-5));
	auto c3 = RootedGraph::make(cycle_graph(3), 0);
	CHECK(pendant_limit(c3, 5, 2) == doctest::Approx(pendant_limit(c3, 5, 1) * 16));
}

TEST_CASE("planar preset")
{
	auto k = planar_constants();
	REQUIRE(k.beta);
	CHECK(std::abs(*k.beta - PlanarReference::beta) <= 1e-4);
	CHECK(std::abs(k.alpha - PlanarReference::alpha) <= 1e-5);
	REQUIRE(k.core_conn_limit);
	CHECK(std::abs(*k.core_conn_limit - PlanarReference::core_connected) <= 1e-5);
	CHECK(k.rho * k.gamma == doctest::Approx(1.0));
	CHECK(k.alpha_beta_gap <= 10 * kDefaultRootTolerance * k.gamma);
}

TEST_CASE("radius case constants")
{
	auto k = solve_constants(e, Weighting::diagonal(1, 1));
	CHECK_FALSE(k.beta);
	CHECK(k.alpha == 0);
	CHECK_THROWS(solve_constants(10, Weighting::extended(1, 2, 1)));
}

TEST_CASE("fragment size law for forests")
{
	auto census = build_census(GraphFamily::forests(), 6);
	auto w = Weighting::diagonal(1, 1);
	double f_value = std::exp(0.5);
	auto d = frag_size_distribution(census, 1 / e, w, f_value);
	CHECK(d.probabilities[0] == doctest::Approx(0.6065).epsilon(1e-4));
	CHECK(d.probabilities[1] == doctest::Approx(0.2231).epsilon(1e-4));
	double sum = d.tail;
	for (double p : d.probabilities) sum += p;
	CHECK(sum == doctest::Approx(1.0));
	CHECK(d.tail > 0);
	CHECK(d.tail < 0.05);
	// k = 2: two vertices, an edge or not, weighted rho^2 (1 + 1) / 2
	CHECK(d.probabilities[2] == doctest::Approx(std::exp(-2.0) * 2 / 2 / f_value));
}
