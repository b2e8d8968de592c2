#pragma once

#include "wrg/canonical.hpp"
#include "wrg/graph.hpp"
#include "wrg/minor.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wrg {

enum class Declared
{
	yes,
	no,
	unknown
};

/// Properties asserted for a family, kept apart from anything verified.
struct FamilyFlags
{
	Declared bridge_addable = Declared::unknown;
	Declared decomposable = Declared::unknown;
	Declared addable = Declared::unknown;
	Declared trimmable = Declared::unknown;

	bool operator==(const FamilyFlags&) const = default;
};

/**
 * A minor-closed graph family: a finite list of excluded minors, possibly
 * backed by an exact fast predicate (acyclicity, series-parallel reduction,
 * planarity) equivalent to the excluded-minor test. The `connected_only`
 * view keeps just the connected members (plus the empty graph), which is
 * how trees are modelled.
 */
class GraphFamily
{
public:
	enum class Predicate
	{
		minors,
		everything,
		acyclic,
		edgeless,
		no_k4,
		planar
	};

	static GraphFamily all_graphs();
	static GraphFamily forests();
	static GraphFamily trees();
	static GraphFamily edgeless();
	static GraphFamily series_parallel();
	static GraphFamily planar();
	/// Graphs with at most k vertex-disjoint cycles, Ex((k+1) C3).
	static GraphFamily disjoint_cycles(int k);
	static GraphFamily excluding(std::string name, std::vector<Graph> minors, FamilyFlags flags = {});

	/// Built-ins by name: all, forests, trees, edgeless, planar,
	/// series-parallel, ex-k-disjoint-cycles:<k>.
	static GraphFamily builtin(const std::string& name);
	/// JSON definition: {name, excluded_minors: [path | {n, edges}], flags: {...}}.
	/// Relative paths resolve against base_dir.
	static GraphFamily from_json(const nlohmann::json& spec, const std::string& base_dir = ".");
	/// A built-in name, or a path to a JSON definition file.
	static GraphFamily resolve(const std::string& name_or_path);

	const std::string& name() const noexcept { return name_; }
	const std::vector<Graph>& excluded_minors() const noexcept { return minors_; }
	const FamilyFlags& flags() const noexcept { return flags_; }
	Predicate predicate() const noexcept { return predicate_; }
	bool connected_only() const noexcept { return connected_only_; }
	GraphFamily connected_view() const;

	MinorOptions& minor_options() noexcept { return minor_options_; }
	const MinorOptions& minor_options() const noexcept { return minor_options_; }

	bool member(const Graph& g) const;
	/// Membership by excluded-minor search only, ignoring any fast predicate.
	bool member_by_minors(const Graph& g) const;

private:
	GraphFamily(std::string name, std::vector<Graph> minors, FamilyFlags flags, Predicate predicate);

	std::string name_;
	std::vector<Graph> minors_;
	FamilyFlags flags_;
	Predicate predicate_ = Predicate::minors;
	bool connected_only_ = false;
	MinorOptions minor_options_;
};

nlohmann::json to_json(const GraphFamily& family);

/// Outcome of a bounded-scale check: it certifies only up to checked_up_to.
struct VerificationReport
{
	bool holds = true;
	int checked_up_to = 0;
	std::optional<Graph> counterexample;
	std::optional<Edge> edge; // the added edge, for bridge-addability
	std::string note;
};

nlohmann::json to_json(const VerificationReport& report);

inline constexpr int kDefaultVerifyCap = 7;

/// Scans every labelled graph with at most n_max vertices (n_max <= 7);
/// the counterexample reported is the one with least (order, edge mask).
VerificationReport verify_bridge_addable(const GraphFamily& family, int n_max, int threads = 1);
VerificationReport verify_decomposable(const GraphFamily& family, int n_max, int threads = 1);

struct TrimmableReport
{
	VerificationReport direct;
	/// Excluded-minor shortcut: every excluded minor has minimum degree >= 2.
	std::optional<bool> shortcut;
	bool agree = true;
	bool trimmable() const { return direct.holds; }
};

TrimmableReport verify_trimmable(const GraphFamily& family, int n_max, int threads = 1);

/// Whether every excluded minor is 2-connected (the addable criterion).
bool excluded_minors_two_connected(const GraphFamily& family);

struct LimitedResult
{
	std::optional<int> limited_with_k; // least k with k*h outside the family
	int k_max = 0;
};

LimitedResult limited_at_scale(const Graph& h, const GraphFamily& family, int k_max);
VerificationReport freely_addable_at_scale(const Graph& h, const GraphFamily& family, int n_max);

enum class Dichotomy
{
	freely_addable,
	limited,
	undetermined,
	conflict // tested positively as both; never expected
};

std::string to_string(Dichotomy d);

struct DichotomyEntry
{
	CanonicalCode code;
	Graph representative;
	Dichotomy verdict = Dichotomy::undetermined;
	std::optional<int> limited_with_k;
};

struct DichotomyScan
{
	std::vector<DichotomyEntry> entries;
	bool conflict_free = true;
};

/// Classifies every unlabelled member with 1..n_max vertices.
DichotomyScan dichotomy_scan(const GraphFamily& family, int n_max, int k_max);

/// Unlabelled graphs (canonical representatives) passing `keep`, grouped
/// by order 0..n_max and sorted by canonical code within each order. Built
/// by vertex augmentation, so `keep` must be closed under deleting a vertex
/// (a non-cut vertex when connected_only is set).
std::vector<std::vector<Graph>> unlabelled_graphs(int n_max, const std::function<bool(const Graph&)>& keep,
	bool connected_only = false);

/// All unlabelled members of the family with 0..n_max vertices.
std::vector<std::vector<Graph>> unlabelled_members(const GraphFamily& family, int n_max);

} // namespace wrg
