#pragma once

#include "wrg/graph.hpp"
#include "wrg/rational.hpp"

#include <string>

namespace wrg {

/**
 * Edge and component parameters of the weighted model. The base model is
 * diagonal (one edge parameter lambda for every edge); the extended model
 * weights bridges by lambda0 and non-bridge edges by lambda1.
 *
 * Parameters are exact rationals. Decimal inputs such as "0.3" are exact
 * rationals too, so every weight computed from a Weighting is exact.
 */
class Weighting
{
public:
	static Weighting diagonal(Rational lambda, Rational nu);
	static Weighting extended(Rational lambda0, Rational lambda1, Rational nu);
	/// Parses decimal or "p/q" literals.
	static Weighting parse(const std::string& lambda, const std::string& nu);

	bool is_diagonal() const noexcept { return lambda0_ == lambda1_; }
	/// The common edge parameter; throws std::logic_error off the diagonal.
	const Rational& lambda() const;
	const Rational& lambda0() const noexcept { return lambda0_; }
	const Rational& lambda1() const noexcept { return lambda1_; }
	const Rational& nu() const noexcept { return nu_; }

	double lambda_d() const { return lambda().get_d(); }
	double nu_d() const { return nu_.get_d(); }

	/// lambda0^bridges * lambda1^non_bridges * nu^components
	Rational evaluate(int bridges, int non_bridges, int components) const;

	bool operator==(const Weighting&) const = default;

private:
	Weighting(Rational lambda0, Rational lambda1, Rational nu);

	Rational lambda0_;
	Rational lambda1_;
	Rational nu_;
};

/// tau(g). Equals lambda^e(g) nu^kappa(g) on the diagonal.
Rational weight(const Graph& g, const Weighting& w);
double weight_d(const Graph& g, const Weighting& w);

} // namespace wrg
