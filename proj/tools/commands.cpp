#include "commands.hpp"

#include "config.hpp"

#include "wrg/acceptance.hpp"
#include "wrg/asymptotics.hpp"
#include "wrg/enumeration.hpp"
#include "wrg/errors.hpp"
#include "wrg/families.hpp"
#include "wrg/pendant.hpp"
#include "wrg/sampling.hpp"
#include "wrg/structure.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>

namespace wrg::cli {

using nlohmann::json;

namespace {

// Doubles in reports carry 12 significant digits.
double sig12(double x)
{
	if (!std::isfinite(x)) return x;
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.12g", x);
	return std::strtod(buf, nullptr);
}

json opt12(const std::optional<double>& x) { return x ? json(sig12(*x)) : json(nullptr); }

class Output
{
public:
	Output(const std::string& path, std::ostream& fallback)
	{
		if (path.empty() || path == "-") {
			stream_ = &fallback;
			return;
		}
		file_.open(path);
		if (!file_) throw ConfigError("cannot write " + path);
		stream_ = &file_;
	}
	std::ostream& operator*() { return *stream_; }

private:
	std::ofstream file_;
	std::ostream* stream_ = nullptr;
};

// Command-line overrides of configuration fields, applied after --config.
class Overrides
{
public:
	template <class T>
	void add(CLI::App* app, const std::string& flag, const std::string& help, std::function<void(ExperimentConfig&, const T&)> apply)
	{
		auto value = std::make_shared<T>();
		CLI::Option* opt = app->add_option(flag, *value, help);
		appliers_.push_back([opt, value, apply](ExperimentConfig& c) {
			if (opt->count() > 0) apply(c, *value);
		});
	}

	void apply(ExperimentConfig& c) const
	{
		for (const auto& f : appliers_) f(c);
	}

private:
	std::vector<std::function<void(ExperimentConfig&)>> appliers_;
};

Rational rational_flag(const std::string& text, const char* name)
{
	try {
		return parse_rational(text);
	} catch (const std::exception& e) {
		throw ConfigError(std::string("bad value for --") + name + ": " + e.what());
	}
}

void add_family(CLI::App* app, Overrides& o)
{
	o.add<std::string>(app, "--family", "built-in family name or JSON definition file",
		[](ExperimentConfig& c, const std::string& v) { c.family = v; });
	o.add<std::uint64_t>(app, "--minor-budget", "node budget of each minor search",
		[](ExperimentConfig& c, const std::uint64_t& v) { c.minor_budget = v; });
}

void add_weighting(CLI::App* app, Overrides& o)
{
	o.add<std::string>(app, "--lambda", "edge parameter (decimal or p/q)",
		[](ExperimentConfig& c, const std::string& v) { c.lambda = rational_flag(v, "lambda"); });
	o.add<std::string>(app, "--nu", "component parameter (decimal or p/q)",
		[](ExperimentConfig& c, const std::string& v) { c.nu = rational_flag(v, "nu"); });
	o.add<std::string>(app, "--lambda0", "bridge edge parameter (extended model)",
		[](ExperimentConfig& c, const std::string& v) { c.lambda0 = rational_flag(v, "lambda0"); });
	o.add<std::string>(app, "--lambda1", "non-bridge edge parameter (extended model)",
		[](ExperimentConfig& c, const std::string& v) { c.lambda1 = rational_flag(v, "lambda1"); });
}

void add_range(CLI::App* app, Overrides& o)
{
	o.add<int>(app, "--n-min", "smallest order", [](ExperimentConfig& c, const int& v) { c.n_min = v; });
	o.add<int>(app, "--n-max", "largest order", [](ExperimentConfig& c, const int& v) { c.n_max = v; });
	o.add<int>(app, "--cap", "brute-force enumeration cap", [](ExperimentConfig& c, const int& v) { c.enumeration_cap = v; });
}

void add_out(CLI::App* app, Overrides& o)
{
	o.add<std::string>(app, "--out", "output file (default: standard output)", [](ExperimentConfig& c, const std::string& v) { c.out = v; });
}

WeightTable weight_table(const ExperimentConfig& cfg, const GraphFamily& fam, const Weighting& w, std::ostream& err)
{
	if (auto t = closed_form_table(fam, w, cfg.n_max)) return *t;
	if (cfg.n_max > cfg.enumeration_cap)
		throw ResourceError("family " + fam.name() + " needs brute force, capped at n = " + std::to_string(cfg.enumeration_cap));
	err << "enumerating " << fam.name() << " up to n = " << cfg.n_max << '\n';
	return build_weight_table(fam, w, cfg.n_max, {cfg.enumeration_cap, cfg.threads});
}

int cmd_enumerate(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err)
{
	auto fam = family(cfg);
	auto w = weighting(cfg);
	auto table = weight_table(cfg, fam, w, err);
	bool any = false;
	for (int n = std::max(cfg.n_min, 1); n <= cfg.n_max; ++n) any = any || table.a[n] != 0;
	if (!any && cfg.n_max >= 1) throw ConfigError("family " + fam.name() + " has no members in the requested range");
	Output o(cfg.out, out);
	*o << format_weight_table_csv(table, cfg.n_min);
	return kOk;
}

int cmd_census(const ExperimentConfig& cfg, std::ostream& out)
{
	auto census = build_census(family(cfg), cfg.census_max);
	Output o(cfg.out, out);
	*o << format_census(census);
	return kOk;
}

json constants_json(const AsymptoticConstants& k)
{
	return {
		{"lambda", sig12(k.lambda)},
		{"nu", sig12(k.nu)},
		{"gamma", sig12(k.gamma)},
		{"rho", sig12(k.rho)},
		{"beta", opt12(k.beta)},
		{"alpha", sig12(k.alpha)},
		{"conn_limit", opt12(k.conn_limit)},
		{"frag_mean_limit", opt12(k.frag_mean_limit)},
		{"exp_t", opt12(k.exp_t)},
		{"core_conn_limit", opt12(k.core_conn_limit)},
		{"tolerance", k.tolerance},
		{"beta_residual", opt12(k.beta_residual)},
		{"alpha_residual", sig12(k.alpha_residual)},
		{"alpha_beta_gap", sig12(k.alpha_beta_gap)},
	};
}

int cmd_constants(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err)
{
	auto w = weighting(cfg);
	json report;
	AsymptoticConstants k;
	if (cfg.gamma) {
		k = solve_constants(*cfg.gamma, w);
		report["gamma_source"] = "input";
	} else if (cfg.family == "planar" && w == Weighting::diagonal(1, 1)) {
		k = planar_constants();
		report["gamma_source"] = "published";
	} else {
		auto fam = family(cfg);
		auto table = weight_table(cfg, fam, w, err);
		auto growth = growth_estimates(table);
		auto ratios = ratio_sequence(table);
		json g = json::array(), r = json::array();
		for (int n = 1; n <= table.max_order(); ++n) {
			g.push_back(opt12(growth[n]));
			r.push_back(ratios[n] ? json(sig12(ratios[n]->get_d())) : json(nullptr));
		}
		report["growth_estimates"] = g;
		report["ratios"] = r;
		const auto& last = ratios[table.max_order()];
		if (!last || *last == 0) throw ConfigError("cannot estimate gamma: the table has no usable ratio");
		k = solve_constants(1 / last->get_d(), w);
		report["gamma_source"] = "ratio estimate at n = " + std::to_string(table.max_order());
		if (fam.predicate() == GraphFamily::Predicate::acyclic && !fam.connected_only()) {
			auto limits = forest_limit_pack(w);
			report["forest_limits"] = {{"conn_limit", sig12(limits.conn_limit)}, {"frag_mean_limit", sig12(limits.frag_mean_limit)},
				{"kappa_mean_limit", sig12(limits.kappa_mean_limit)}, {"gamma", sig12(std::numbers::e * w.lambda0().get_d())}};
		}
	}
	report["constants"] = constants_json(k);
	Output o(cfg.out, out);
	*o << report.dump(2) << '\n';
	return kOk;
}

json graph_json(const Graph& g)
{
	json edges = json::array();
	for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
	return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_line(const std::string& line)
{
	auto j = json::parse(line);
	Graph g(j.at("n").get<int>());
	for (const auto& e : j.at("edges")) {
		int u = e.at(0).get<int>() - 1, v = e.at(1).get<int>() - 1;
		if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) throw ConfigError("bad edge in sample line: " + line);
		g.add_edge(std::min(u, v), std::max(u, v));
	}
	return g;
}

double boltzmann_rho(const ExperimentConfig& cfg)
{
	if (cfg.rho) return *cfg.rho;
	if (cfg.gamma) return 1 / *cfg.gamma;
	throw ConfigError("Boltzmann sampling needs --rho or --gamma");
}

int cmd_sample(const ExperimentConfig& cfg, std::ostream& out)
{
	auto w = weighting(cfg);
	const int n = cfg.n_max;
	std::vector<Graph> graphs;
	if (cfg.method == "tree") {
		if (n < 1) throw ConfigError("tree sampling needs n >= 1");
		graphs = random_tree_sample(n, cfg.seed, cfg.draws, cfg.threads);
	} else if (cfg.method == "exact") {
		if (n > cfg.enumeration_cap) throw ResourceError("exact sampling is capped at n = " + std::to_string(cfg.enumeration_cap));
		graphs = exact_sample(family(cfg), w, n, cfg.seed, cfg.draws, cfg.threads);
	} else if (cfg.method == "mcmc") {
		graphs = mcmc_sample(family(cfg), w, n, cfg.steps, cfg.burn_in, cfg.thin, cfg.seed);
	} else {
		auto census = build_census(family(cfg), cfg.census_max);
		auto bc = make_boltzmann_config(census, boltzmann_rho(cfg), w);
		for (const auto& counts : boltzmann_poisson_sample(bc, cfg.seed, cfg.draws, cfg.threads))
			graphs.push_back(boltzmann_graph(census, counts));
	}
	Output o(cfg.out, out);
	for (const auto& g : graphs) *o << graph_json(g).dump() << '\n';
	return kOk;
}

struct StatsInputs
{
	std::string input;
	std::string pattern;
	int root = 1;
	bool census = false;
};

template <class Map>
void histogram_rows(std::ostream& o, const std::string& name, const Map& hist)
{
	for (const auto& [k, c] : hist) o << name << ',' << k << ',' << c << '\n';
}

int cmd_stats(const ExperimentConfig& cfg, const StatsInputs& in, std::ostream& out)
{
	std::ifstream file(in.input);
	if (!file) throw ConfigError("cannot read samples from " + in.input);
	std::vector<Graph> graphs;
	std::string line;
	while (std::getline(file, line))
		if (!line.empty()) graphs.push_back(graph_from_line(line));
	std::vector<RootedGraph> rooted;
	if (!in.pattern.empty()) rooted.push_back(RootedGraph::make(read_graph_file(in.pattern), in.root - 1));
	std::optional<UnlabelledCensus> census;
	if (in.census) census = build_census(family(cfg), cfg.census_max);
	auto s = collect_stats(graphs, rooted, census ? &*census : nullptr);

	Output o(cfg.out, out);
	*o << "statistic,value,count\n";
	*o << "draws,," << s.draws << '\n';
	*o << "conn_freq," << sig12(s.conn_freq) << ",\n";
	*o << "core_frac_mean," << sig12(s.core_frac_mean) << ",\n";
	histogram_rows(*o, "kappa", s.kappa_hist);
	histogram_rows(*o, "frag", s.frag_hist);
	histogram_rows(*o, "core", s.core_hist);
	for (const auto& [key, c] : s.edges_kappa_hist) *o << "edges_kappa," << key.first << ':' << key.second << ',' << c << '\n';
	for (const auto& [code, hist] : s.comp_counts) histogram_rows(*o, "components:" + code.hex(), hist);
	for (std::size_t r = 0; r < s.pendant_density.size(); ++r) *o << "pendant_density," << sig12(s.pendant_density[r]) << ",\n";
	return kOk;
}

struct PendantInputs
{
	std::string graph;
	std::string pattern;
	int root = 1;
};

int cmd_pendant(const ExperimentConfig& cfg, const PendantInputs& in, std::ostream& out)
{
	if (in.graph.empty() || in.pattern.empty()) throw ConfigError("pendant needs --graph and --pattern");
	auto g = read_graph_file(in.graph);
	Graph h = read_graph_file(in.pattern);
	if (in.root < 1 || in.root > h.order()) throw ConfigError("--root must name a vertex of the pattern");
	RootedGraph rooted;
	try {
		rooted = RootedGraph::make(h, in.root - 1);
	} catch (const std::invalid_argument& e) {
		throw ConfigError(e.what());
	}
	json list = json::array();
	for (const auto& a : find_pendant_appearances(g, rooted)) {
		json vs = json::array();
		for (int v : a.vertices) vs.push_back(v + 1);
		list.push_back({{"vertices", vs}, {"root_edge", {a.root_edge.first + 1, a.root_edge.second + 1}}});
	}
	json report = {{"count", list.size()}, {"overlapping", overlapping_pendant_appearances(g, rooted)}, {"appearances", list}};
	if (g.order() > 0) report["density"] = sig12(static_cast<double>(list.size()) / g.order());
	if (cfg.gamma) report["limit"] = sig12(pendant_limit(rooted, *cfg.gamma, weighting(cfg).lambda_d()));
	Output o(cfg.out, out);
	*o << report.dump(2) << '\n';
	return kOk;
}

int cmd_families_check(const ExperimentConfig& cfg, std::ostream& out)
{
	auto fam = family(cfg);
	const int n = std::min(cfg.n_max, kDefaultVerifyCap);
	auto ba = verify_bridge_addable(fam, n, cfg.threads);
	auto dec = verify_decomposable(fam, n, cfg.threads);
	auto trim = verify_trimmable(fam, n, cfg.threads);
	auto scan = dichotomy_scan(fam, std::min(n, 5), cfg.k_max);
	json trimmable = {{"direct", to_json(trim.direct)}, {"agree", trim.agree}};
	trimmable["shortcut"] = trim.shortcut ? json(*trim.shortcut) : json(nullptr);
	json dichotomy = json::array();
	for (const auto& e : scan.entries) {
		json row = {{"code", e.code.hex()}, {"order", e.representative.order()}, {"edges", e.representative.size()},
			{"verdict", to_string(e.verdict)}};
		if (e.limited_with_k) row["limited_with_k"] = *e.limited_with_k;
		dichotomy.push_back(row);
	}
	json report = {{"family", to_json(fam)}, {"checked_up_to", n}, {"bridge_addable", to_json(ba)}, {"decomposable", to_json(dec)},
		{"trimmable", trimmable}, {"excluded_minors_two_connected", excluded_minors_two_connected(fam)},
		{"addable_at_scale", ba.holds && dec.holds}, {"dichotomy", dichotomy}, {"dichotomy_conflict_free", scan.conflict_free}};

	// a declared property refuted at scale is a verification failure
	const auto& f = fam.flags();
	bool consistent = trim.agree && scan.conflict_free;
	consistent = consistent && !(f.bridge_addable == Declared::yes && !ba.holds);
	consistent = consistent && !(f.decomposable == Declared::yes && !dec.holds);
	consistent = consistent && !(f.trimmable == Declared::yes && !trim.trimmable());
	consistent = consistent && !(f.addable == Declared::yes && !(ba.holds && dec.holds));
	report["consistent_with_declared"] = consistent;
	Output o(cfg.out, out);
	*o << report.dump(2) << '\n';
	return consistent ? kOk : kVerificationFailed;
}

int cmd_verify(const ExperimentConfig& cfg, const std::string& suite, std::ostream& out, std::ostream& err)
{
	acceptance::Options options;
	options.seed = cfg.seed;
	options.threads = cfg.threads;
	std::vector<acceptance::Result> results;
	try {
		results = acceptance::run_suite(suite, options);
	} catch (const std::invalid_argument& e) {
		throw ConfigError(e.what());
	}
	json report = json::array();
	bool ok = true;
	for (const auto& r : results) {
		err << acceptance::format_line(r) << '\n';
		report.push_back(acceptance::to_json(r));
		ok = ok && r.passed;
	}
	Output o(cfg.out, out);
	*o << report.dump(2) << '\n';
	return ok ? kOk : kVerificationFailed;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Exact enumeration, sampling and limit constants for weighted random graphs in minor-closed families", "wrg"};
	app.require_subcommand(1);
	app.fallthrough();
	std::string config_path;
	Overrides global;
	app.add_option("--config", config_path, "JSON experiment configuration");
	global.add<int>(&app, "--threads", "worker threads", [](ExperimentConfig& c, const int& v) { c.threads = v; });
	global.add<std::uint64_t>(&app, "--seed", "random seed", [](ExperimentConfig& c, const std::uint64_t& v) { c.seed = v; });

	Overrides o;
	auto* enumerate = app.add_subcommand("enumerate", "weighted counts a_n, c_n, b_n as CSV");
	add_family(enumerate, o);
	add_weighting(enumerate, o);
	add_range(enumerate, o);
	add_out(enumerate, o);

	auto* census = app.add_subcommand("census", "connected members up to isomorphism");
	add_family(census, o);
	o.add<int>(census, "--n-max", "largest order", [](ExperimentConfig& c, const int& v) { c.census_max = v; });
	add_out(census, o);

	auto* constants = app.add_subcommand("constants", "solve the limit constants as JSON");
	add_family(constants, o);
	add_weighting(constants, o);
	add_range(constants, o);
	o.add<double>(constants, "--gamma", "growth constant", [](ExperimentConfig& c, const double& v) { c.gamma = v; });
	add_out(constants, o);

	auto* sample = app.add_subcommand("sample", "draw graphs as JSON lines");
	add_family(sample, o);
	add_weighting(sample, o);
	o.add<int>(sample, "--n", "order", [](ExperimentConfig& c, const int& v) { c.n_min = c.n_max = v; });
	o.add<int>(sample, "--cap", "exact sampling cap", [](ExperimentConfig& c, const int& v) { c.enumeration_cap = v; });
	o.add<std::string>(sample, "--method", "exact, boltzmann, mcmc or tree", [](ExperimentConfig& c, const std::string& v) { c.method = v; });
	o.add<std::uint64_t>(sample, "--draws", "number of draws", [](ExperimentConfig& c, const std::uint64_t& v) { c.draws = v; });
	o.add<std::uint64_t>(sample, "--steps", "chain steps after burn-in", [](ExperimentConfig& c, const std::uint64_t& v) { c.steps = v; });
	o.add<std::uint64_t>(sample, "--burn-in", "chain burn-in", [](ExperimentConfig& c, const std::uint64_t& v) { c.burn_in = v; });
	o.add<std::uint64_t>(sample, "--thin", "keep every thin-th state", [](ExperimentConfig& c, const std::uint64_t& v) { c.thin = v; });
	o.add<double>(sample, "--rho", "Boltzmann parameter", [](ExperimentConfig& c, const double& v) { c.rho = v; });
	o.add<double>(sample, "--gamma", "growth constant (rho = 1/gamma)", [](ExperimentConfig& c, const double& v) { c.gamma = v; });
	o.add<int>(sample, "--census-max", "Boltzmann census order", [](ExperimentConfig& c, const int& v) { c.census_max = v; });
	add_out(sample, o);

	StatsInputs stats_in;
	auto* stats = app.add_subcommand("stats", "histograms of a sample file as CSV");
	stats->add_option("--in", stats_in.input, "JSON lines sample file")->required();
	stats->add_option("--pattern", stats_in.pattern, "rooted graph file for pendant densities");
	stats->add_option("--root", stats_in.root, "root vertex of the pattern (1-indexed)");
	stats->add_flag("--census", stats_in.census, "track component types from the family census");
	add_family(stats, o);
	o.add<int>(stats, "--census-max", "census order", [](ExperimentConfig& c, const int& v) { c.census_max = v; });
	add_out(stats, o);

	PendantInputs pendant_in;
	auto* pendant = app.add_subcommand("pendant", "pendant appearances of a rooted graph");
	pendant->add_option("--graph", pendant_in.graph, "host graph file")->required();
	pendant->add_option("--pattern", pendant_in.pattern, "pattern graph file")->required();
	pendant->add_option("--root", pendant_in.root, "root vertex of the pattern (1-indexed)");
	add_weighting(pendant, o);
	o.add<double>(pendant, "--gamma", "growth constant for the limiting density", [](ExperimentConfig& c, const double& v) { c.gamma = v; });
	add_out(pendant, o);

	auto* families_check = app.add_subcommand("families-check", "verify family properties at bounded scale");
	add_family(families_check, o);
	o.add<int>(families_check, "--n-max", "largest order checked", [](ExperimentConfig& c, const int& v) { c.n_max = v; });
	o.add<int>(families_check, "--k-max", "largest multiple tried for limited graphs", [](ExperimentConfig& c, const int& v) { c.k_max = v; });
	add_out(families_check, o);

	std::string suite = "all";
	auto* verify = app.add_subcommand("verify", "run acceptance checks");
	verify->add_option("suite", suite, "suite name or all");
	add_out(verify, o);

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return kOk;
	} catch (const CLI::CallForAllHelp&) {
		out << app.help("", CLI::AppFormatMode::All);
		return kOk;
	} catch (const CLI::ParseError& e) {
		err << "wrg: " << e.what() << '\n';
		return kConfigError;
	}

	try {
		ExperimentConfig cfg = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
		global.apply(cfg);
		o.apply(cfg);
		validate(cfg);
		if (*enumerate) return cmd_enumerate(cfg, out, err);
		if (*census) return cmd_census(cfg, out);
		if (*constants) return cmd_constants(cfg, out, err);
		if (*sample) return cmd_sample(cfg, out);
		if (*stats) return cmd_stats(cfg, stats_in, out);
		if (*pendant) return cmd_pendant(cfg, pendant_in, out);
		if (*families_check) return cmd_families_check(cfg, out);
		if (*verify) return cmd_verify(cfg, suite, out, err);
	} catch (const ConfigError& e) {
		err << "wrg: " << e.what() << '\n';
		return kConfigError;
	} catch (const ResourceError& e) {
		err << "wrg: " << e.what() << '\n';
		return kResourceCap;
	} catch (const std::invalid_argument& e) {
		err << "wrg: " << e.what() << '\n';
		return kConfigError;
	} catch (const std::exception& e) {
		err << "wrg: " << e.what() << '\n';
		return kFailure;
	}
	return kFailure;
}

} // namespace wrg::cli
