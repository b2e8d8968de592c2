#include "wrg/weighting.hpp"

#include "wrg/structure.hpp"

#include <stdexcept>

namespace wrg {

Weighting::Weighting(Rational lambda0, Rational lambda1, Rational nu)
	: lambda0_(std::move(lambda0))
	, lambda1_(std::move(lambda1))
	, nu_(std::move(nu))
{
	if (lambda0_ <= 0 || lambda1_ <= 0 || nu_ <= 0)
		throw std::invalid_argument("weighting parameters must be strictly positive");
}

Weighting Weighting::diagonal(Rational lambda, Rational nu)
{
	Rational copy = lambda;
	return Weighting(std::move(lambda), std::move(copy), std::move(nu));
}

Weighting Weighting::extended(Rational lambda0, Rational lambda1, Rational nu)
{
	return Weighting(std::move(lambda0), std::move(lambda1), std::move(nu));
}

Weighting Weighting::parse(const std::string& lambda, const std::string& nu)
{
	return diagonal(parse_rational(lambda), parse_rational(nu));
}

const Rational& Weighting::lambda() const
{
	if (!is_diagonal()) throw std::logic_error("weighting is not diagonal; use lambda0/lambda1");
	return lambda0_;
}

Rational Weighting::evaluate(int bridges, int non_bridges, int components) const
{
	if (is_diagonal()) return pow(lambda0_, bridges + non_bridges) * pow(nu_, components);
	return pow(lambda0_, bridges) * pow(lambda1_, non_bridges) * pow(nu_, components);
}

Rational weight(const Graph& g, const Weighting& w)
{
	if (w.is_diagonal()) return w.evaluate(0, g.size(), component_count(g));
	auto split = bridge_partition(g);
	return w.evaluate(split.bridges, split.non_bridges, component_count(g));
}

double weight_d(const Graph& g, const Weighting& w) { return weight(g, w).get_d(); }

} // namespace wrg
