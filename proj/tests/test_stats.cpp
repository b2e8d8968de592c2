#include "wrg/rng.hpp"
#include "wrg/stats.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

using namespace wrg;

TEST_CASE("Poisson upper tail")
{
	CHECK(poisson_upper_tail(2.0, 0) == 1);
	CHECK(poisson_upper_tail(2.0, 1) == doctest::Approx(1 - std::exp(-2.0)));
	CHECK(poisson_upper_tail(2.0, 3) == doctest::Approx(1 - std::exp(-2.0) * (1 + 2 + 2)));
	CHECK(poisson_upper_tail(0.0, 1) == 0);
}

TEST_CASE("chi-square against Poisson")
{
	Philox rng(5);
	std::vector<std::uint64_t> good(50000), shifted(50000);
	for (auto& x : good) x = poisson(rng, 3.0);
	for (auto& x : shifted) x = poisson(rng, 3.3);
	auto fit = chi_square_poisson(good, 3.0);
	CHECK(fit.p_value > 1e-3);
	CHECK(fit.dof >= 5);
	CHECK_FALSE(fit.exact_total_test);
	CHECK(chi_square_poisson(shifted, 3.0).p_value < 1e-10);

	// a hand-computed case: 10 zeros and 10 ones against Po(log 2), two bins
	std::vector<std::uint64_t> flat(20);
	for (int i = 10; i < 20; ++i) flat[i] = 1;
	auto r = chi_square_poisson(flat, std::log(2.0));
	CHECK(r.dof == 1);
	CHECK(r.statistic == doctest::Approx(0.0).epsilon(1e-12));
	CHECK(r.p_value == doctest::Approx(1.0));

	// too few observations for two bins: exact test on the total
	std::vector<std::uint64_t> rare(40);
	rare[3] = 1;
	auto t = chi_square_poisson(rare, 0.01);
	CHECK(t.exact_total_test);
	CHECK(t.p_value > 0.05);
	rare[5] = rare[6] = rare[7] = rare[8] = 1;
	CHECK(chi_square_poisson(rare, 0.01).p_value < 1e-3);
}

TEST_CASE("correlation")
{
	std::vector<std::uint64_t> x{1, 2, 3, 4}, y{2, 4, 6, 8}, z{4, 3, 2, 1}, c{5, 5, 5, 5};
	CHECK(correlation(x, y) == doctest::Approx(1.0));
	CHECK(correlation(x, z) == doctest::Approx(-1.0));
	CHECK(correlation(x, c) == 0);
}

TEST_CASE("total variation")
{
	std::map<int, std::uint64_t> p{{0, 5}, {1, 5}}, q{{1, 10}}, r{{0, 50}, {1, 50}};
	CHECK(tv_distance(p, q) == doctest::Approx(0.5));
	CHECK(tv_distance(p, r) == 0);
	CHECK(tv_distance(q, p) == doctest::Approx(0.5));
}
