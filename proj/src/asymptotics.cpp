#include "wrg/asymptotics.hpp"

#include "wrg/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace wrg {

namespace {

constexpr int kNewtonSteps = 60;

void check_positive(double gamma, double lambda)
{
	if (!(gamma > 0) || !(lambda > 0) || !std::isfinite(gamma) || !std::isfinite(lambda))
		throw std::invalid_argument("gamma and lambda must be positive and finite");
}

// Bisection on an increasing function until the bracket is relatively
// narrow, then safeguarded Newton.
template <class F, class DF>
double increasing_root(F f, DF df, double lo, double hi, double tol, double scale)
{
	while (hi - lo > 1e-9 * std::max(1.0, std::abs(hi))) {
		double mid = 0.5 * (lo + hi);
		if (f(mid) < 0)
			lo = mid;
		else
			hi = mid;
	}
	double x = 0.5 * (lo + hi);
	for (int i = 0; i < kNewtonSteps; ++i) {
		double fx = f(x);
		if (std::abs(fx) <= tol * scale) return x;
		if (fx < 0)
			lo = x;
		else
			hi = x;
		double d = df(x);
		double next = d > 0 ? x - fx / d : x;
		if (!(next >= lo && next <= hi) || next == x) next = 0.5 * (lo + hi);
		if (next == x) break;
		x = next;
	}
	// the residual may sit at rounding level above tol
	if (std::abs(f(x)) <= std::max(tol * scale, 64 * std::numeric_limits<double>::epsilon() * scale)) return x;
	throw ConvergenceError("root solver did not reach tolerance");
}

} // namespace

double beta_residual(double beta, double gamma, double lambda) { return beta * std::exp(lambda / beta) - gamma; }

double alpha_residual(double alpha, double gamma, double lambda)
{
	double x = 1 - alpha;
	return x * std::exp(-x) - lambda / gamma;
}

std::optional<double> solve_beta(double gamma, double lambda, double tol)
{
	check_positive(gamma, lambda);
	const double scale = std::max(1.0, gamma);
	if (gamma - lambda * std::numbers::e <= tol * scale) return std::nullopt;
	double lo = lambda * (1 + 1e-12);
	double hi = lambda * 1e6;
	auto f = [&](double b) { return beta_residual(b, gamma, lambda); };
	auto df = [&](double b) { return std::exp(lambda / b) * (1 - lambda / b); };
	if (f(hi) < 0) throw ConvergenceError("gamma is beyond the beta search bracket");
	return increasing_root(f, df, lo, hi, tol, scale);
}

double solve_alpha(double gamma, double lambda, double tol)
{
	check_positive(gamma, lambda);
	const double q = lambda / gamma;
	if (gamma - lambda * std::numbers::e <= tol * std::max(1.0, gamma)) return 0;
	auto f = [&](double x) { return x * std::exp(-x) - q; };
	auto df = [&](double x) { return std::exp(-x) * (1 - x); };
	double x = increasing_root(f, df, 0.0, 1.0, tol, q);
	return 1 - x;
}

double mu(const CensusEntry& h, double rho, const Weighting& w)
{
	if (!(rho > 0)) throw std::invalid_argument("mu: rho must be positive");
	double tau = w.evaluate(h.bridges, h.edges - h.bridges, h.components).get_d();
	return std::pow(rho, h.order) * tau / static_cast<double>(h.automorphisms);
}

TreeSeries tree_series_eval(double x, const Weighting& w, long n_terms)
{
	const double lambda = w.lambda0().get_d();
	const double nu = w.nu_d();
	const double radius = 1 / (std::numbers::e * lambda);
	if (!(x > 0) || x > radius * (1 + 1e-12)) throw std::invalid_argument("tree_series_eval: x beyond the radius 1/(e lambda)");
	if (n_terms < 1) throw std::invalid_argument("tree_series_eval: need at least one term");

	const long double log_lambda = std::log(static_cast<long double>(lambda));
	const long double log_x = std::log(static_cast<long double>(x));
	long double t = 0, t_rooted = 0;
	// smallest terms first
	for (long n = n_terms; n >= 1; --n) {
		long double ln = std::log(static_cast<long double>(n));
		long double base = (n - 1) * log_lambda + n * log_x - std::lgamma(static_cast<long double>(n) + 1);
		t += std::exp(base + (n - 2) * ln);
		t_rooted += std::exp(base + (n - 1) * ln);
	}
	TreeSeries out;
	const double c = nu / lambda / std::sqrt(2 * std::numbers::pi);
	const double big_n = static_cast<double>(n_terms);
	out.t = {static_cast<double>(nu * t), n_terms, c * (2.0 / 3.0) * std::pow(big_n, -1.5)};
	out.t_rooted = {static_cast<double>(nu * t_rooted), n_terms, c * 2.0 * std::pow(big_n, -0.5)};
	long double r = lambda * t_rooted; // lambda * T_rooted / nu
	out.u_check = static_cast<double>(std::abs(r - lambda * x * std::exp(r)));
	return out;
}

std::optional<double> tree_tail_bound(const Weighting& w, double rho, int n_max)
{
	const double lambda = w.lambda0().get_d();
	if (rho * lambda * std::numbers::e > 1 + 1e-12 || n_max < 1) return std::nullopt;
	return w.nu_d() / lambda / std::sqrt(2 * std::numbers::pi) * (2.0 / 3.0) * std::pow(n_max, -1.5);
}

CensusSeries census_series_eval(const UnlabelledCensus& census, double rho, const Weighting& w,
	const std::function<bool(const CensusEntry&)>& freely)
{
	if (!(rho > 0)) throw std::invalid_argument("census_series_eval: rho must be positive");
	auto in_d = [&](const CensusEntry& e) { return freely ? freely(e) : census.freely_addable; };

	CensusSeries out;
	std::vector<Rational> connected(census.max_order + 1, Rational(0));
	bool forest_like = census.max_order >= 3;
	for (const auto& e : census.entries) {
		double m = mu(e, rho, w);
		out.c.value += m;
		++out.c.terms_used;
		if (e.edges >= e.order) forest_like = false;
		if (!in_d(e)) continue;
		out.d.value += m;
		out.d_prime.value += e.order * m / rho;
		++out.d.terms_used;
		++out.d_prime.terms_used;
		connected[e.order] += fraction(factorial(e.order), from_u64(e.automorphisms)) *
							  w.evaluate(e.bridges, e.edges - e.bridges, e.components);
	}
	auto lifted = egf_lift(connected, census.max_order);
	for (int k = 0; k <= census.max_order; ++k) {
		if (lifted[k] == 0) continue;
		out.f.value += std::pow(rho, k) * Rational(lifted[k] / Rational(factorial(k))).get_d();
		++out.f.terms_used;
	}
	if (forest_like) {
		if (auto tail = tree_tail_bound(w, rho, census.max_order)) {
			out.c.tail_bound = *tail;
			out.d.tail_bound = *tail;
			// terms of v mu / rho carry an extra factor n: sum n^(-3/2) tail
			const double lambda = w.lambda0().get_d();
			out.d_prime.tail_bound = w.nu_d() / lambda / std::sqrt(2 * std::numbers::pi) * 2.0 *
									 std::pow(census.max_order, -0.5) / rho;
			if (census.freely_addable) out.f.tail_bound = std::exp(out.d.value + *tail) - out.f.value;
		}
	}
	return out;
}

ForestLimits forest_limit_pack(const Weighting& w)
{
	const double ratio = w.nu_d() / w.lambda0().get_d();
	return {std::exp(-ratio / 2), ratio, 1 + ratio / 2};
}

double pendant_limit(const RootedGraph& h, double gamma, double lambda)
{
	if (!(gamma > 0) || !(lambda > 0)) throw std::invalid_argument("pendant_limit: gamma and lambda must be positive");
	const int v = h.graph.order();
	const int e = h.graph.size();
	return std::exp((e + 1) * std::log(lambda) - v * std::log(gamma) - std::lgamma(v + 1.0));
}

AsymptoticConstants solve_constants(double gamma, const Weighting& w, double tol)
{
	AsymptoticConstants k;
	k.lambda = w.lambda_d();
	k.nu = w.nu_d();
	k.gamma = gamma;
	k.rho = 1 / gamma;
	k.tolerance = tol;
	k.beta = solve_beta(gamma, k.lambda, tol);
	k.alpha = solve_alpha(gamma, k.lambda, tol);
	if (k.beta) {
		k.beta_residual = beta_residual(*k.beta, gamma, k.lambda);
		k.alpha_residual = alpha_residual(k.alpha, gamma, k.lambda);
		k.alpha_beta_gap = std::abs(k.alpha - (1 - k.lambda / *k.beta));
	}
	return k;
}

AsymptoticConstants planar_constants(double tol)
{
	auto k = solve_constants(PlanarReference::gamma, Weighting::diagonal(1, 1), tol);
	k.conn_limit = PlanarReference::exp_minus_d;
	k.exp_t = PlanarReference::exp_t;
	k.core_conn_limit = PlanarReference::exp_t * PlanarReference::exp_minus_d;
	return k;
}

FragDistribution frag_size_distribution(const UnlabelledCensus& census_f, double rho, const Weighting& w, double f_value)
{
	if (!(rho > 0) || !(f_value > 0)) throw std::invalid_argument("frag_size_distribution: rho and F must be positive");
	std::vector<Rational> connected(census_f.max_order + 1, Rational(0));
	for (const auto& e : census_f.entries)
		connected[e.order] += fraction(factorial(e.order), from_u64(e.automorphisms)) *
							  w.evaluate(e.bridges, e.edges - e.bridges, e.components);
	auto lifted = egf_lift(connected, census_f.max_order);
	FragDistribution out;
	double total = 0;
	for (int k = 0; k <= census_f.max_order; ++k) {
		double p = std::pow(rho, k) * Rational(lifted[k] / Rational(factorial(k))).get_d() / f_value;
		out.probabilities.push_back(p);
		total += p;
	}
	if (total > 1 + 1e-12) throw std::invalid_argument("frag_size_distribution: F is below the truncated sum");
	out.tail = 1 - total;
	return out;
}

} // namespace wrg
