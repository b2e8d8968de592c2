#include "wrg/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/poisson.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wrg {

double poisson_upper_tail(double mean, std::uint64_t k)
{
	if (k == 0) return 1;
	if (mean <= 0) return 0;
	boost::math::poisson_distribution<double> po(mean);
	return boost::math::cdf(boost::math::complement(po, static_cast<double>(k - 1)));
}

GoodnessOfFit chi_square_poisson(std::span<const std::uint64_t> observations, double mean, double min_expected)
{
	if (observations.empty()) throw std::invalid_argument("chi_square_poisson: no observations");
	if (!(mean > 0)) throw std::invalid_argument("chi_square_poisson: mean must be positive");
	const double n = static_cast<double>(observations.size());
	boost::math::poisson_distribution<double> po(mean);

	// largest K with n Pr(X >= K) >= min_expected; bins 0..K-1 then need the
	// same floor individually, else K shrinks
	int k_top = 0;
	while (n * poisson_upper_tail(mean, k_top + 1) >= min_expected && n * boost::math::pdf(po, k_top) >= min_expected)
		++k_top;

	GoodnessOfFit out;
	if (k_top < 1) {
		std::uint64_t total = 0;
		for (auto x : observations) total += x;
		boost::math::poisson_distribution<double> sum(n * mean);
		double t = static_cast<double>(total);
		double lower = boost::math::cdf(sum, t);
		double upper = total == 0 ? 1.0 : boost::math::cdf(boost::math::complement(sum, t - 1));
		out.exact_total_test = true;
		out.p_value = std::min(1.0, 2 * std::min(lower, upper));
		return out;
	}
	std::vector<double> observed(k_top + 1, 0);
	for (auto x : observations) observed[std::min<std::uint64_t>(x, k_top)] += 1;
	for (int k = 0; k <= k_top; ++k) {
		double expected = n * (k < k_top ? boost::math::pdf(po, k) : poisson_upper_tail(mean, k_top));
		double diff = observed[k] - expected;
		out.statistic += diff * diff / expected;
	}
	out.dof = k_top;
	boost::math::chi_squared_distribution<double> chi(out.dof);
	out.p_value = boost::math::cdf(boost::math::complement(chi, out.statistic));
	return out;
}

double correlation(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y)
{
	if (x.size() != y.size() || x.empty()) throw std::invalid_argument("correlation: samples must have equal non-zero length");
	const double n = static_cast<double>(x.size());
	double mx = 0, my = 0;
	for (std::size_t i = 0; i < x.size(); ++i) {
		mx += static_cast<double>(x[i]);
		my += static_cast<double>(y[i]);
	}
	mx /= n;
	my /= n;
	double sxy = 0, sxx = 0, syy = 0;
	for (std::size_t i = 0; i < x.size(); ++i) {
		double dx = static_cast<double>(x[i]) - mx;
		double dy = static_cast<double>(y[i]) - my;
		sxy += dx * dy;
		sxx += dx * dx;
		syy += dy * dy;
	}
	if (sxx == 0 || syy == 0) return 0;
	return sxy / std::sqrt(sxx * syy);
}

} // namespace wrg
