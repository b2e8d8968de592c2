#pragma once

#include "wrg/canonical.hpp"
#include "wrg/enumeration.hpp"
#include "wrg/families.hpp"
#include "wrg/graph.hpp"
#include "wrg/rng.hpp"
#include "wrg/weighting.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wrg {

// Every sampler gives draw i its own Philox stream (seed, i), so results
// do not depend on the thread count.

/// The n-slice of a family with its law Pr(G) = tau(G)/tau(A_n).
class ExactSampler
{
public:
	ExactSampler(const GraphFamily& family, const Weighting& w, int n, const EnumerationOptions& options = {});

	int order() const noexcept { return n_; }
	const std::vector<std::uint64_t>& members() const noexcept { return masks_; }
	/// Exact probability of members()[i].
	Rational probability(std::size_t i) const;
	const Rational& total_weight() const noexcept { return total_; }

	Graph draw(Philox& rng) const;
	std::vector<Graph> sample(std::uint64_t seed, std::size_t draws, int threads = 1) const;

private:
	int n_;
	Weighting w_;
	std::vector<std::uint64_t> masks_;
	std::vector<double> cumulative_; // normalised, last entry 1
	Rational total_;
};

std::vector<Graph> exact_sample(const GraphFamily& family, const Weighting& w, int n, std::uint64_t seed,
	std::size_t draws, int threads = 1);

struct BoltzmannConfig
{
	double rho = 0;
	Weighting weighting = Weighting::diagonal(1, 1);
	const UnlabelledCensus* census = nullptr;
	/// Bound on the mu mass beyond the census, when one is known.
	std::optional<double> truncated_mass;
	std::string note;
};

/// Fills truncated_mass from the tree tail bound where it applies.
BoltzmannConfig make_boltzmann_config(const UnlabelledCensus& census, double rho, const Weighting& w);

/// Per draw, one independent Po(mu(H)) count per census entry (same order
/// as census.entries).
std::vector<std::vector<std::uint64_t>> boltzmann_poisson_sample(const BoltzmannConfig& cfg, std::uint64_t seed,
	std::size_t draws, int threads = 1);

/// The graph with the given component counts, representatives in census order.
Graph boltzmann_graph(const UnlabelledCensus& census, std::span<const std::uint64_t> counts);

inline constexpr std::uint64_t kDefaultBurnIn = 100'000;
inline constexpr std::uint64_t kDefaultThin = 10;

/// tau(to) / tau(from): the Metropolis acceptance ratio before capping at 1.
Rational metropolis_ratio(const Graph& from, const Graph& to, const Weighting& w);

/**
 * Metropolis chain on the n-slice, started from the edgeless graph: pick a
 * uniform pair, toggle it, reject if the result leaves the family, else
 * accept with min(1, tau ratio). After burn_in steps, every thin-th of the
 * next `steps` states is recorded. The family must be closed under edge
 * deletion, so the connected-only view is rejected.
 */
std::vector<Graph> mcmc_sample(const GraphFamily& family, const Weighting& w, int n, std::uint64_t steps,
	std::uint64_t burn_in, std::uint64_t thin, std::uint64_t seed);

struct TransitionMatrix
{
	std::vector<std::uint64_t> states; // edge masks of the members
	std::vector<Rational> stationary;  // tau(G) / tau(A_n)
	std::vector<std::vector<Rational>> p;

	/// pi P == pi exactly, and every row sums to 1.
	bool stationary_exact() const;
};

TransitionMatrix mcmc_transition_matrix(const GraphFamily& family, const Weighting& w, int n);

/// Uniform labelled trees on n vertices by Pruefer decoding.
Graph random_tree(int n, Philox& rng);
std::vector<Graph> random_tree_sample(int n, std::uint64_t seed, std::size_t draws, int threads = 1);

struct SampleStats
{
	std::uint64_t draws = 0;
	std::map<int, std::uint64_t> kappa_hist;
	std::map<int, std::uint64_t> frag_hist;
	std::map<int, std::uint64_t> core_hist; // by order of the 2-core
	double core_frac_mean = 0;              // mean v(core)/n
	double conn_freq = 0;
	std::map<std::pair<int, int>, std::uint64_t> edges_kappa_hist;
	/// Histogram of kappa(G, H) per tracked component type H.
	std::map<CanonicalCode, std::map<int, std::uint64_t>> comp_counts;
	/// Mean f_H(G)/v(G) per registered rooted graph.
	std::vector<double> pendant_density;
};

/// Components are tracked for every census entry, or, without a census, for
/// every type seen with at most kDefaultCanonicalCap vertices.
SampleStats collect_stats(std::span<const Graph> samples, std::span<const RootedGraph> rooted = {},
	const UnlabelledCensus* census = nullptr);

} // namespace wrg
