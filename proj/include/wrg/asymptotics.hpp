#pragma once

#include "wrg/enumeration.hpp"
#include "wrg/graph.hpp"
#include "wrg/weighting.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace wrg {

inline constexpr double kDefaultRootTolerance = 1e-12;

/// Root beta > lambda of beta * exp(lambda / beta) = gamma. Unset when
/// gamma <= lambda e (within tol), the radius case. Throws
/// ConvergenceError if gamma lies beyond the search bracket.
std::optional<double> solve_beta(double gamma, double lambda, double tol = kDefaultRootTolerance);

/// 1 - x for the root x < 1 of x exp(-x) = lambda / gamma; 0 when
/// gamma <= lambda e.
double solve_alpha(double gamma, double lambda, double tol = kDefaultRootTolerance);

/// beta exp(lambda/beta) - gamma
double beta_residual(double beta, double gamma, double lambda);
/// x exp(-x) - lambda/gamma at x = 1 - alpha
double alpha_residual(double alpha, double gamma, double lambda);

/// rho^v tau(H) / aut(H) for a census entry.
double mu(const CensusEntry& h, double rho, const Weighting& w);

struct SeriesEvaluation
{
	double value = 0;
	long terms_used = 0;
	std::optional<double> tail_bound; // unset when no bound is known
};

struct TreeSeries
{
	SeriesEvaluation t;        // nu sum n^(n-2) lambda^(n-1) x^n / n!
	SeriesEvaluation t_rooted; // nu sum n^(n-1) lambda^(n-1) x^n / n!
	/// |R - lambda x e^R| with R = lambda t_rooted / nu, the rooted tree equation
	double u_check = 0;
};

/// Partial sums to N terms, 0 < x <= 1/(e lambda0). Tail bounds come from
/// n! >= sqrt(2 pi n) n^n e^-n and hold on the whole range of x.
TreeSeries tree_series_eval(double x, const Weighting& w, long n_terms);

struct CensusSeries
{
	SeriesEvaluation c;       // sum mu(H) over connected census entries
	SeriesEvaluation d;       // the same over the freely addable entries
	SeriesEvaluation f;       // sum_k rho^k tau(F_k)/k! over the census range
	SeriesEvaluation d_prime; // sum v(H) mu(H) / rho over the freely addable entries (a lower estimate)
};

/// Truncated census sums. Tail bounds are given only when the census shows
/// a subfamily of forests (no cycle up to its order) and rho lambda0 e <= 1.
/// `freely` selects the entries counted in D and F; by default all entries
/// when the census is marked freely addable, otherwise none.
CensusSeries census_series_eval(const UnlabelledCensus& census, double rho, const Weighting& w,
	const std::function<bool(const CensusEntry&)>& freely = {});

/// Bound on sum over trees of order > n_max of mu, valid when rho lambda0 e <= 1.
std::optional<double> tree_tail_bound(const Weighting& w, double rho, int n_max);

struct ForestLimits
{
	double conn_limit = 0;      // exp(-nu / (2 lambda))
	double frag_mean_limit = 0; // nu / lambda
	double kappa_mean_limit = 0; // 1 + nu / (2 lambda)
};

ForestLimits forest_limit_pack(const Weighting& w);

/// lambda^(e(H)+1) / (gamma^v(H) v(H)!)
double pendant_limit(const RootedGraph& h, double gamma, double lambda);

struct AsymptoticConstants
{
	double lambda = 1;
	double nu = 1;
	double gamma = 0;
	double rho = 0;
	std::optional<double> beta;
	double alpha = 0;
	std::optional<double> conn_limit;      // exp(-D)
	std::optional<double> frag_mean_limit; // rho D'
	std::optional<double> exp_t;           // exp(T)
	std::optional<double> core_conn_limit; // exp(T - D)
	double tolerance = kDefaultRootTolerance;
	std::optional<double> beta_residual;
	double alpha_residual = 0;
	double alpha_beta_gap = 0; // |alpha - (1 - lambda/beta)|, 0 in the radius case
};

/// Solves beta and alpha for gamma; the limit fields are left unset.
AsymptoticConstants solve_constants(double gamma, const Weighting& w, double tol = kDefaultRootTolerance);

/// Published reference values for planar graphs with lambda = nu = 1.
struct PlanarReference
{
	static constexpr double gamma = 27.226878;
	static constexpr double beta = 26.207554;
	static constexpr double alpha = 0.961843;
	static constexpr double exp_minus_d = 0.963253;
	static constexpr double exp_t = 1.038138;
	static constexpr double core_connected = 0.999990;
};

/// The planar preset: solved beta, alpha from gamma and the published
/// exp(-D), exp(T); core_conn_limit = exp(T) exp(-D).
AsymptoticConstants planar_constants(double tol = kDefaultRootTolerance);

struct FragDistribution
{
	std::vector<double> probabilities; // index k = 0..census max order
	double tail = 0;                   // 1 - sum, mass beyond the census range
};

/// Pr[v(Frag) = k] -> rho^k tau(F_k) / (k! F). The census holds the
/// connected freely addable graphs; F_value is the full series value.
FragDistribution frag_size_distribution(const UnlabelledCensus& census_f, double rho, const Weighting& w, double f_value);

} // namespace wrg
