#include "wrg/families.hpp"

#include "wrg/errors.hpp"
#include "wrg/parallel.hpp"
#include "wrg/structure.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

namespace wrg {

GraphFamily::GraphFamily(std::string name, std::vector<Graph> minors, FamilyFlags flags, Predicate predicate)
	: name_(std::move(name))
	, minors_(std::move(minors))
	, flags_(flags)
	, predicate_(predicate)
{
}

namespace {

constexpr FamilyFlags kAddable{Declared::yes, Declared::yes, Declared::yes, Declared::yes};

} // namespace

GraphFamily GraphFamily::all_graphs() { return GraphFamily("all", {}, kAddable, Predicate::everything); }

GraphFamily GraphFamily::forests() { return GraphFamily("forests", {cycle_graph(3)}, kAddable, Predicate::acyclic); }

GraphFamily GraphFamily::trees()
{
	auto fam = forests().connected_view();
	fam.name_ = "trees";
	return fam;
}

GraphFamily GraphFamily::edgeless()
{
	return GraphFamily("edgeless", {complete_graph(2)}, {Declared::no, Declared::yes, Declared::no, Declared::no},
		Predicate::edgeless);
}

GraphFamily GraphFamily::series_parallel()
{
	return GraphFamily("series-parallel", {complete_graph(4)}, kAddable, Predicate::no_k4);
}

GraphFamily GraphFamily::planar()
{
	return GraphFamily("planar", {complete_graph(5), complete_bipartite(3, 3)}, kAddable, Predicate::planar);
}

GraphFamily GraphFamily::disjoint_cycles(int k)
{
	if (k < 0) throw std::invalid_argument("disjoint_cycles: k must be non-negative");
	return GraphFamily("ex-k-disjoint-cycles:" + std::to_string(k), {repeat_union(cycle_graph(3), k + 1)},
		{Declared::yes, Declared::no, Declared::no, Declared::yes}, Predicate::minors);
}

GraphFamily GraphFamily::excluding(std::string name, std::vector<Graph> minors, FamilyFlags flags)
{
	return GraphFamily(std::move(name), std::move(minors), flags, Predicate::minors);
}

GraphFamily GraphFamily::connected_view() const
{
	GraphFamily out = *this;
	out.connected_only_ = true;
	out.name_ = name_ + "/connected";
	out.flags_ = {Declared::yes, Declared::no, Declared::no, Declared::no};
	return out;
}

GraphFamily GraphFamily::builtin(const std::string& name)
{
	if (name == "all") return all_graphs();
	if (name == "forests") return forests();
	if (name == "trees") return trees();
	if (name == "edgeless") return edgeless();
	if (name == "series-parallel") return series_parallel();
	if (name == "planar") return planar();
	const std::string prefix = "ex-k-disjoint-cycles:";
	if (name.rfind(prefix, 0) == 0) {
		std::size_t used = 0;
		int k = 0;
		try {
			k = std::stoi(name.substr(prefix.size()), &used);
		} catch (const std::exception&) {
			throw std::invalid_argument("bad family name: " + name);
		}
		if (used != name.size() - prefix.size()) throw std::invalid_argument("bad family name: " + name);
		return disjoint_cycles(k);
	}
	throw std::invalid_argument("unknown family: " + name);
}

namespace {

Declared declared_from_json(const nlohmann::json& j)
{
	if (j.is_null()) return Declared::unknown;
	if (j.is_boolean()) return j.get<bool>() ? Declared::yes : Declared::no;
	auto s = j.get<std::string>();
	if (s == "yes" || s == "true") return Declared::yes;
	if (s == "no" || s == "false") return Declared::no;
	if (s == "unknown") return Declared::unknown;
	throw std::invalid_argument("bad flag value: " + s);
}

nlohmann::json declared_to_json(Declared d)
{
	switch (d) {
		case Declared::yes: return true;
		case Declared::no: return false;
		case Declared::unknown: return nullptr;
	}
	return nullptr;
}

Graph graph_from_json(const nlohmann::json& j)
{
	int n = j.at("n").get<int>();
	std::vector<Edge> edges;
	for (const auto& e : j.value("edges", nlohmann::json::array())) edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
	for (auto [u, v] : edges)
		if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("graph JSON: vertex out of range");
	return Graph::from_edges(n, edges);
}

nlohmann::json graph_to_json(const Graph& g)
{
	nlohmann::json edges = nlohmann::json::array();
	for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
	return {{"n", g.order()}, {"edges", edges}};
}

} // namespace

GraphFamily GraphFamily::from_json(const nlohmann::json& spec, const std::string& base_dir)
{
	if (spec.contains("builtin")) {
		auto fam = builtin(spec.at("builtin").get<std::string>());
		if (spec.value("connected_only", false)) fam = fam.connected_view();
		return fam;
	}
	std::vector<Graph> minors;
	for (const auto& entry : spec.value("excluded_minors", nlohmann::json::array())) {
		if (entry.is_string()) {
			std::filesystem::path p(entry.get<std::string>());
			if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
			minors.push_back(read_graph_file(p.string()));
		} else {
			minors.push_back(graph_from_json(entry));
		}
	}
	FamilyFlags flags;
	if (spec.contains("flags")) {
		const auto& f = spec.at("flags");
		flags.bridge_addable = declared_from_json(f.value("bridge_addable", nlohmann::json()));
		flags.decomposable = declared_from_json(f.value("decomposable", nlohmann::json()));
		flags.addable = declared_from_json(f.value("addable", nlohmann::json()));
		flags.trimmable = declared_from_json(f.value("trimmable", nlohmann::json()));
	}
	auto fam = excluding(spec.at("name").get<std::string>(), std::move(minors), flags);
	if (spec.value("connected_only", false)) {
		fam.connected_only_ = true;
	}
	return fam;
}

GraphFamily GraphFamily::resolve(const std::string& name_or_path)
{
	try {
		return builtin(name_or_path);
	} catch (const std::invalid_argument&) {
		if (!std::filesystem::exists(name_or_path)) throw;
	}
	std::ifstream in(name_or_path);
	if (!in) throw std::invalid_argument("cannot open family file: " + name_or_path);
	auto spec = nlohmann::json::parse(in);
	auto dir = std::filesystem::path(name_or_path).parent_path().string();
	return from_json(spec, dir.empty() ? "." : dir);
}

nlohmann::json to_json(const GraphFamily& family)
{
	nlohmann::json minors = nlohmann::json::array();
	for (const auto& m : family.excluded_minors()) minors.push_back(graph_to_json(m));
	const auto& f = family.flags();
	return {{"name", family.name()},
		{"excluded_minors", minors},
		{"connected_only", family.connected_only()},
		{"flags",
			{{"bridge_addable", declared_to_json(f.bridge_addable)},
				{"decomposable", declared_to_json(f.decomposable)},
				{"addable", declared_to_json(f.addable)},
				{"trimmable", declared_to_json(f.trimmable)}}}};
}

bool GraphFamily::member_by_minors(const Graph& g) const
{
	if (g.order() == 0) return true;
	if (connected_only_ && !is_connected(g)) return false;
	for (const auto& m : minors_)
		if (has_minor(g, m, minor_options_)) return false;
	return true;
}

bool GraphFamily::member(const Graph& g) const
{
	if (g.order() == 0) return true;
	if (connected_only_ && !is_connected(g)) return false;
	switch (predicate_) {
		case Predicate::everything: return true;
		case Predicate::acyclic: return cyclomatic_number(g) == 0;
		case Predicate::edgeless: return g.size() == 0;
		case Predicate::no_k4: return !has_k4_minor(g);
		case Predicate::planar: return is_planar(g);
		case Predicate::minors: break;
	}
	return member_by_minors(g);
}

nlohmann::json to_json(const VerificationReport& report)
{
	nlohmann::json j{{"holds", report.holds}, {"checked_up_to", report.checked_up_to}};
	if (report.counterexample) j["counterexample"] = graph_to_json(*report.counterexample);
	if (report.edge) j["edge"] = {report.edge->first + 1, report.edge->second + 1};
	if (!report.note.empty()) j["note"] = report.note;
	return j;
}

namespace {

void check_cap(int n_max)
{
	if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
	if (n_max > kDefaultVerifyCap)
		throw ResourceError("verification cap is " + std::to_string(kDefaultVerifyCap) + " vertices, got " + std::to_string(n_max));
}

struct Found
{
	std::uint64_t mask = 0;
	Edge edge{-1, -1};
};

// Runs `probe` over every labelled graph on n vertices; returns the first
// hit by edge mask.
template<typename Probe>
std::optional<Found> first_hit(int n, int threads, Probe&& probe)
{
	const std::uint64_t total = std::uint64_t{1} << pair_count(n);
	std::vector<std::optional<Found>> per_chunk(chunk_count(total, threads));
	parallel_chunks(total, threads, [&](std::uint64_t begin, std::uint64_t end, int chunk) {
		for (std::uint64_t mask = begin; mask < end; ++mask) {
			auto g = Graph::from_edge_mask(n, mask);
			if (auto edge = probe(g)) {
				per_chunk[chunk] = Found{mask, *edge};
				return;
			}
		}
	});
	for (auto& f : per_chunk)
		if (f) return f;
	return std::nullopt;
}

} // namespace

VerificationReport verify_bridge_addable(const GraphFamily& family, int n_max, int threads)
{
	check_cap(n_max);
	VerificationReport report;
	for (int n = 1; n <= n_max; ++n) {
		auto hit = first_hit(n, threads, [&](const Graph& g) -> std::optional<Edge> {
			if (!family.member(g)) return std::nullopt;
			for (int v = 1; v < n; ++v)
				for (int u = 0; u < v; ++u) {
					if (g.adjacent(u, v) || connected_pair(g, u, v)) continue;
					Graph plus = g;
					plus.add_edge(u, v);
					if (!family.member(plus)) return Edge{u, v};
				}
			return std::nullopt;
		});
		if (hit) {
			report.holds = false;
			report.counterexample = Graph::from_edge_mask(n, hit->mask);
			report.edge = hit->edge;
			report.checked_up_to = n;
			return report;
		}
		report.checked_up_to = n;
	}
	return report;
}

VerificationReport verify_decomposable(const GraphFamily& family, int n_max, int threads)
{
	check_cap(n_max);
	VerificationReport report;
	for (int n = 1; n <= n_max; ++n) {
		auto hit = first_hit(n, threads, [&](const Graph& g) -> std::optional<Edge> {
			bool whole = family.member(g);
			bool parts = true;
			for (const auto& comp : components(g)) parts = parts && family.member(induced_subgraph(g, comp));
			if (whole != parts) return Edge{-1, -1};
			return std::nullopt;
		});
		if (hit) {
			report.holds = false;
			report.counterexample = Graph::from_edge_mask(n, hit->mask);
			report.checked_up_to = n;
			report.note = family.member(*report.counterexample) ? "member with a non-member component"
																: "non-member whose components are all members";
			return report;
		}
		report.checked_up_to = n;
	}
	return report;
}

TrimmableReport verify_trimmable(const GraphFamily& family, int n_max, int threads)
{
	check_cap(n_max);
	TrimmableReport out;
	for (int n = 1; n <= n_max; ++n) {
		auto hit = first_hit(n, threads, [&](const Graph& g) -> std::optional<Edge> {
			if (family.member(g) != family.member(two_core(g).core)) return Edge{-1, -1};
			return std::nullopt;
		});
		out.direct.checked_up_to = n;
		if (hit) {
			out.direct.holds = false;
			out.direct.counterexample = Graph::from_edge_mask(n, hit->mask);
			break;
		}
	}
	if (!family.connected_only()) {
		bool all_min2 = true;
		for (const auto& m : family.excluded_minors()) all_min2 = all_min2 && min_degree(m) >= 2;
		out.shortcut = all_min2;
		if (all_min2 || !out.direct.holds) {
			out.agree = all_min2 == out.direct.holds;
		} else {
			// the scan cannot refute below the order of the smallest leafy minor
			int smallest = 1 << 30;
			for (const auto& m : family.excluded_minors())
				if (min_degree(m) < 2) smallest = std::min(smallest, m.order());
			out.agree = smallest > n_max;
		}
	}
	return out;
}

bool excluded_minors_two_connected(const GraphFamily& family)
{
	for (const auto& m : family.excluded_minors()) {
		if (m.order() < 2 || !is_connected(m)) return false;
		if (m.order() == 2) continue; // K2 counts as 2-connected here
		for (int v = 0; v < m.order(); ++v) {
			std::vector<int> rest;
			for (int u = 0; u < m.order(); ++u)
				if (u != v) rest.push_back(u);
			if (!is_connected(induced_subgraph(m, rest))) return false;
		}
	}
	return true;
}

LimitedResult limited_at_scale(const Graph& h, const GraphFamily& family, int k_max)
{
	if (!family.member(h)) throw std::invalid_argument("limited_at_scale: h is not a member of " + family.name());
	LimitedResult out;
	out.k_max = k_max;
	for (int k = 2; k <= k_max; ++k) {
		if (!family.member(repeat_union(h, k))) {
			out.limited_with_k = k;
			break;
		}
	}
	return out;
}

std::vector<std::vector<Graph>> unlabelled_graphs(int n_max, const std::function<bool(const Graph&)>& keep, bool connected_only)
{
	std::vector<std::vector<Graph>> levels(n_max + 1);
	if (n_max < 0) return levels;
	levels[0].push_back(Graph(0));
	for (int n = 1; n <= n_max; ++n) {
		std::set<CanonicalCode> kept, rejected;
		const int prev = n - 1;
		for (const auto& base : levels[prev]) {
			const std::uint64_t subsets = std::uint64_t{1} << prev;
			for (std::uint64_t s = 0; s < subsets; ++s) {
				if (connected_only && prev > 0 && s == 0) continue;
				Graph g(n);
				for (auto [u, v] : base.edges()) g.add_edge(u, v);
				for (int u = 0; u < prev; ++u)
					if ((s >> u) & 1U) g.add_edge(u, prev);
				auto code = canonicalize(g, 64);
				if (kept.count(code) || rejected.count(code)) continue;
				(keep(g) ? kept : rejected).insert(std::move(code));
			}
		}
		for (const auto& code : kept) levels[n].push_back(code.graph());
	}
	return levels;
}

std::vector<std::vector<Graph>> unlabelled_members(const GraphFamily& family, int n_max)
{
	return unlabelled_graphs(n_max, [&](const Graph& g) { return family.member(g); }, family.connected_only());
}

VerificationReport freely_addable_at_scale(const Graph& h, const GraphFamily& family, int n_max)
{
	VerificationReport report;
	auto levels = unlabelled_members(family, n_max);
	for (int n = 0; n <= n_max; ++n) {
		for (const auto& g : levels[n]) {
			if (!family.member(disjoint_union(g, h))) {
				report.holds = false;
				report.counterexample = g;
				report.checked_up_to = n;
				return report;
			}
		}
		report.checked_up_to = n;
	}
	return report;
}

std::string to_string(Dichotomy d)
{
	switch (d) {
		case Dichotomy::freely_addable: return "freely-addable-at-scale";
		case Dichotomy::limited: return "limited";
		case Dichotomy::undetermined: return "undetermined";
		case Dichotomy::conflict: return "conflict";
	}
	return "undetermined";
}

DichotomyScan dichotomy_scan(const GraphFamily& family, int n_max, int k_max)
{
	DichotomyScan scan;
	auto levels = unlabelled_members(family, n_max);
	for (int n = 1; n <= n_max; ++n) {
		for (const auto& h : levels[n]) {
			DichotomyEntry entry;
			entry.code = canonicalize(h, 64);
			entry.representative = h;
			bool freely = freely_addable_at_scale(h, family, n_max).holds;
			auto limited = limited_at_scale(h, family, k_max);
			entry.limited_with_k = limited.limited_with_k;
			if (freely && limited.limited_with_k) {
				entry.verdict = Dichotomy::conflict;
				scan.conflict_free = false;
			} else if (freely) {
				entry.verdict = Dichotomy::freely_addable;
			} else if (limited.limited_with_k) {
				entry.verdict = Dichotomy::limited;
			}
			scan.entries.push_back(std::move(entry));
		}
	}
	return scan;
}

} // namespace wrg
