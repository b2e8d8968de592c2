#pragma once

#include "wrg/canonical.hpp"
#include "wrg/families.hpp"
#include "wrg/rational.hpp"
#include "wrg/weighting.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wrg {

inline constexpr int kDefaultEnumerationCap = 7;
inline constexpr int kHardEnumerationCap = 8;

struct EnumerationOptions
{
	/// Largest order brute force may visit; at most kHardEnumerationCap.
	int max_order = kDefaultEnumerationCap;
	int threads = 1;
};

/// Weight-relevant shape of a labelled member graph.
struct ShapeKey
{
	int bridges = 0;
	int non_bridges = 0;
	int components = 0;
	int frag = 0; // vertices outside the big component
	int core = 0; // order of the 2-core
	auto operator<=>(const ShapeKey&) const = default;
};

/// Number of labelled members on [n] of each shape. Any weighting's sums
/// are exact polynomial evaluations of this table.
struct ShapeHistogram
{
	int order = 0;
	std::map<ShapeKey, std::uint64_t> counts;

	std::uint64_t members() const;
};

/// Exhaustive sweep over all 2^(n(n-1)/2) labelled graphs on [n].
ShapeHistogram shape_histogram(const GraphFamily& family, int n, const EnumerationOptions& options = {});

struct TauTriple
{
	Rational a; // all members
	Rational c; // connected members
	Rational b; // connected members of minimum degree >= 2
};

TauTriple evaluate(const ShapeHistogram& histogram, const Weighting& w);
TauTriple brute_force_tau(const GraphFamily& family, const Weighting& w, int n, const EnumerationOptions& options = {});

enum class Method
{
	brute_force,
	egf_lift,
	closed_form
};

std::string to_string(Method m);

struct WeightTable
{
	std::string family;
	Weighting weighting = Weighting::diagonal(1, 1);
	std::vector<Rational> a, c, b;
	std::vector<std::optional<Rational>> b_known; // unset when b was not computed
	std::vector<Method> method;

	int max_order() const { return static_cast<int>(a.size()) - 1; }
};

/// Brute-force table for orders 0..n_max.
WeightTable build_weight_table(const GraphFamily& family, const Weighting& w, int n_max, const EnumerationOptions& options = {});

/// Weighted tree counts c_n = n^(n-2) lambda0^(n-1) nu, with c_0 = 0.
std::vector<Rational> cayley_weights(const Weighting& w, int n_max);

/// All-graph weights from connected weights through A = exp(C):
/// n a_n = sum_k k binom(n,k) c_k a_(n-k), a_0 = 1. Requires c_0 = 0.
std::vector<Rational> egf_lift(std::span<const Rational> connected, int n_max);

/// Forest table: closed-form tree weights, lifted; b is identically zero.
WeightTable forest_table(const Weighting& w, int n_max);

/// Tables that need no enumeration: forests (lifted tree weights), trees
/// (weighted Cayley counts) and edgeless graphs. Unset for other families.
std::optional<WeightTable> closed_form_table(const GraphFamily& family, const Weighting& w, int n_max);

/// r_n = n a_(n-1) / a_n for n >= 1; unset where a_n = 0 (index 0 unset).
std::vector<std::optional<Rational>> ratio_sequence(const WeightTable& table);
/// (a_n / n!)^(1/n) for n >= 1; unset where a_n = 0.
std::vector<std::optional<double>> growth_estimates(const WeightTable& table);

/// Whether the connected members of `family` decompose into a 2-core
/// plus pendant forest (the family is trimmable).
bool core_decomposition_applies(const GraphFamily& family);

/// binom(n,k) tau(B_k) lambda0^(n-k) k n^(n-1-k), or tau(B_n) when k = n.
Rational f_nk(const GraphFamily& family, const Weighting& w, int n, int k, const WeightTable& b_table);
/// Weight of connected members on [n] whose 2-core has k vertices.
Rational f_nk_brute(const ShapeHistogram& histogram, const Weighting& w, int k);
/// |C_1| n^(n-2) lambda0^(n-1) nu: the connected members with empty core.
Rational tree_term(const GraphFamily& family, const Weighting& w, int n);

struct FactorialGrowthRow
{
	int n = 0;
	std::optional<double> max_eta; // min over j of (a_n / (a_(n-j) (n)_j))^(1/j)
	std::vector<int> violating_j;
};

struct FactorialGrowthReport
{
	double eta = 0;
	std::vector<FactorialGrowthRow> rows;
	int violations = 0;
};

/// Checks a_n >= a_(n-j) (n)_j eta^j for 1 <= j < n, i.e. with g(n) = 1.
/// A diagnostic of the feasible eta, not a proof of anything asymptotic.
FactorialGrowthReport factorial_growth_check(const WeightTable& table, double eta);

struct CensusEntry
{
	CanonicalCode code;
	int order = 0;
	int edges = 0;
	int bridges = 0;
	int components = 1;
	int core_order = 0;
	std::uint64_t automorphisms = 1;
	Graph representative; // the canonical relabelling
};

struct UnlabelledCensus
{
	std::string family;
	int max_order = 0;
	/// Every entry is freely addable to the family (set for decomposable families).
	bool freely_addable = false;
	std::vector<CensusEntry> entries;

	const CensusEntry* find(const CanonicalCode& code) const;
};

inline constexpr int kCensusCap = 7;

/// Connected members with 1..n_max vertices, one entry per isomorphism
/// class, ordered by (order, edges, code).
UnlabelledCensus build_census(const GraphFamily& family, int n_max, int cap = kCensusCap);

/// sum over census entries of order n of n!/aut(H) * tau(H); equals c_n.
Rational census_labelled_weight(const UnlabelledCensus& census, const Weighting& w, int n);

/// One line per entry: code,v,e,kappa,aut
std::string format_census(const UnlabelledCensus& census);
UnlabelledCensus parse_census(const std::string& text);

/// Rows n_min..max_order; numbers past the exact columns use 12 significant digits.
std::string format_weight_table_csv(const WeightTable& table, int n_min = 0);

struct FallingPick
{
	Graph graph; // connected
	int multiplicity = 1;
};

struct FallingMomentResult
{
	Rational lhs; // E[prod (kappa(R_n, H_i))_(k_i)] by enumeration
	Rational rhs; // prod mu(H_i)^(k_i) * prod_(j<=K) r_(n-j+1)/rho
	Rational residual;
};

/// Exact falling-factorial moment identity for component counts, at one n.
/// Throws std::invalid_argument if the picks are not jointly freely
/// addable to the members of order n - K.
FallingMomentResult falling_moment_check(const WeightTable& table, const UnlabelledCensus& census,
	const GraphFamily& family, const Weighting& w, std::span<const FallingPick> picks, int n,
	const Rational& rho = Rational(1), const EnumerationOptions& options = {});

/// Exact connectivity quantities for one order.
struct ConnectivityBounds
{
	Rational p_connected;
	double connected_floor = 0; // exp(-nu/lambda)
	Rational mean_frag;
	Rational frag_ceiling; // 2 nu / lambda
	bool connected_ok = false;
	bool frag_ok = false;
};

ConnectivityBounds connectivity_bounds(const ShapeHistogram& histogram, const Weighting& w);

/// Exact laws of kappa(R_n) and frag(R_n); index = value.
std::vector<Rational> kappa_distribution(const ShapeHistogram& histogram, const Weighting& w);
std::vector<Rational> frag_distribution(const ShapeHistogram& histogram, const Weighting& w);

} // namespace wrg
