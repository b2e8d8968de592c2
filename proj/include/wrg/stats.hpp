#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace wrg {

struct GoodnessOfFit
{
	double statistic = 0;
	int dof = 0;
	double p_value = 1;
	/// Set when no two bins reach the expected-count floor; the p-value is
	/// then the two-sided exact Poisson test on the total count.
	bool exact_total_test = false;
};

/// Pearson chi-square of integer observations against Po(mean). Bins
/// 0..K with the upper tail pooled into K, K the largest value whose
/// pooled expectation is at least min_expected.
GoodnessOfFit chi_square_poisson(std::span<const std::uint64_t> observations, double mean, double min_expected = 5);

/// Pr(Po(mean) >= k)
double poisson_upper_tail(double mean, std::uint64_t k);

/// Pearson correlation; zero if either sample is constant.
double correlation(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y);

/// Total variation distance between two empirical histograms.
template <class Key>
double tv_distance(const std::map<Key, std::uint64_t>& p, const std::map<Key, std::uint64_t>& q)
{
	double np = 0, nq = 0;
	for (const auto& [k, c] : p) np += static_cast<double>(c);
	for (const auto& [k, c] : q) nq += static_cast<double>(c);
	double sum = 0;
	for (const auto& [k, c] : p) {
		auto it = q.find(k);
		double other = it == q.end() ? 0 : static_cast<double>(it->second) / nq;
		sum += std::abs(static_cast<double>(c) / np - other);
	}
	for (const auto& [k, c] : q)
		if (!p.contains(k)) sum += static_cast<double>(c) / nq;
	return sum / 2;
}

} // namespace wrg
