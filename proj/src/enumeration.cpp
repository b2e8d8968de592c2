#include "wrg/enumeration.hpp"

#include "wrg/errors.hpp"
#include "wrg/parallel.hpp"
#include "wrg/structure.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace wrg {

std::uint64_t ShapeHistogram::members() const
{
	std::uint64_t total = 0;
	for (const auto& [key, count] : counts) total += count;
	return total;
}

namespace {

void check_enumeration_cap(int n, const EnumerationOptions& options)
{
	if (n < 0) throw std::invalid_argument("order must be non-negative");
	int cap = std::min(options.max_order, kHardEnumerationCap);
	if (n > cap)
		throw ResourceError("brute-force enumeration cap is " + std::to_string(cap) + " vertices, got " + std::to_string(n));
}

ShapeKey shape_of(const Graph& g)
{
	ShapeKey key;
	key.bridges = static_cast<int>(bridges(g).size());
	key.non_bridges = g.size() - key.bridges;
	key.components = component_count(g);
	key.frag = frag_order(g);
	key.core = core_order(g);
	return key;
}

} // namespace

ShapeHistogram shape_histogram(const GraphFamily& family, int n, const EnumerationOptions& options)
{
	check_enumeration_cap(n, options);
	ShapeHistogram out;
	out.order = n;
	if (n == 0) {
		out.counts[ShapeKey{}] = 1;
		return out;
	}
	const std::uint64_t total = std::uint64_t{1} << pair_count(n);
	std::vector<std::map<ShapeKey, std::uint64_t>> partial(chunk_count(total, options.threads));
	parallel_chunks(total, options.threads, [&](std::uint64_t begin, std::uint64_t end, int chunk) {
		auto& local = partial[chunk];
		for (std::uint64_t mask = begin; mask < end; ++mask) {
			auto g = Graph::from_edge_mask(n, mask);
			if (!family.member(g)) continue;
			++local[shape_of(g)];
		}
	});
	for (const auto& local : partial)
		for (const auto& [key, count] : local) out.counts[key] += count;
	return out;
}

TauTriple evaluate(const ShapeHistogram& histogram, const Weighting& w)
{
	TauTriple out{0, 0, 0};
	for (const auto& [key, count] : histogram.counts) {
		Rational term = w.evaluate(key.bridges, key.non_bridges, key.components) * Rational(from_u64(count));
		out.a += term;
		if (key.components == 1) {
			out.c += term;
			if (key.core == histogram.order) out.b += term;
		}
	}
	return out;
}

TauTriple brute_force_tau(const GraphFamily& family, const Weighting& w, int n, const EnumerationOptions& options)
{
	return evaluate(shape_histogram(family, n, options), w);
}

std::string to_string(Method m)
{
	switch (m) {
		case Method::brute_force: return "brute-force";
		case Method::egf_lift: return "egf-lift";
		case Method::closed_form: return "closed-form";
	}
	return "brute-force";
}

WeightTable build_weight_table(const GraphFamily& family, const Weighting& w, int n_max, const EnumerationOptions& options)
{
	check_enumeration_cap(n_max, options);
	WeightTable t;
	t.family = family.name();
	t.weighting = w;
	for (int n = 0; n <= n_max; ++n) {
		auto tau = brute_force_tau(family, w, n, options);
		t.a.push_back(tau.a);
		t.c.push_back(tau.c);
		t.b.push_back(tau.b);
		t.b_known.push_back(tau.b);
		t.method.push_back(Method::brute_force);
	}
	return t;
}

std::vector<Rational> cayley_weights(const Weighting& w, int n_max)
{
	std::vector<Rational> c(n_max + 1, Rational(0));
	for (int n = 1; n <= n_max; ++n) {
		// n^(n-2) is 1 at n = 1
		Rational trees = n == 1 ? Rational(1) : pow(Rational(n), n - 2);
		c[n] = trees * pow(w.lambda0(), n - 1) * w.nu();
	}
	return c;
}

std::vector<Rational> egf_lift(std::span<const Rational> connected, int n_max)
{
	if (connected.empty() || connected[0] != 0) throw std::invalid_argument("egf_lift: c_0 must be 0");
	if (static_cast<int>(connected.size()) <= n_max) throw std::invalid_argument("egf_lift: connected sequence too short");
	std::vector<Rational> a(n_max + 1, Rational(0));
	a[0] = 1;
	for (int n = 1; n <= n_max; ++n) {
		Rational sum = 0;
		Integer binom = 1; // binom(n, k), updated incrementally
		for (int k = 1; k <= n; ++k) {
			binom = binom * (n - k + 1) / k;
			if (connected[k] == 0 || a[n - k] == 0) continue;
			Rational term = connected[k] * a[n - k];
			term *= Rational(Integer(binom * k));
			sum += term;
		}
		a[n] = sum / n;
	}
	return a;
}

WeightTable forest_table(const Weighting& w, int n_max)
{
	WeightTable t;
	t.family = "forests";
	t.weighting = w;
	t.c = cayley_weights(w, n_max);
	t.a = egf_lift(t.c, n_max);
	t.b.assign(n_max + 1, Rational(0));
	t.b_known.assign(n_max + 1, Rational(0));
	t.method.assign(n_max + 1, Method::egf_lift);
	return t;
}

std::optional<WeightTable> closed_form_table(const GraphFamily& family, const Weighting& w, int n_max)
{
	if (n_max < 0) throw std::invalid_argument("order must be non-negative");
	const bool trees = family.connected_only() && family.predicate() == GraphFamily::Predicate::acyclic;
	if (family.predicate() == GraphFamily::Predicate::acyclic && !family.connected_only()) return forest_table(w, n_max);
	if (!trees && family.predicate() != GraphFamily::Predicate::edgeless) return std::nullopt;
	WeightTable t;
	t.family = family.name();
	t.weighting = w;
	t.b.assign(n_max + 1, Rational(0));
	t.b_known.assign(n_max + 1, Rational(0));
	if (trees) {
		t.c = cayley_weights(w, n_max);
		t.a = t.c;
		t.a[0] = 1;
		t.method.assign(n_max + 1, Method::closed_form);
	} else {
		t.c.assign(n_max + 1, Rational(0));
		if (n_max >= 1) t.c[1] = w.nu();
		for (int n = 0; n <= n_max; ++n) t.a.push_back(pow(w.nu(), n));
		t.method.assign(n_max + 1, Method::closed_form);
	}
	return t;
}

std::vector<std::optional<Rational>> ratio_sequence(const WeightTable& table)
{
	std::vector<std::optional<Rational>> r(table.a.size());
	for (std::size_t n = 1; n < table.a.size(); ++n)
		if (table.a[n] != 0) r[n] = Rational(static_cast<long>(n)) * table.a[n - 1] / table.a[n];
	return r;
}

std::vector<std::optional<double>> growth_estimates(const WeightTable& table)
{
	std::vector<std::optional<double>> g(table.a.size());
	for (std::size_t n = 1; n < table.a.size(); ++n) {
		if (table.a[n] <= 0) continue;
		double log_ratio = log_of(table.a[n]) - std::lgamma(static_cast<double>(n) + 1.0);
		g[n] = std::exp(log_ratio / static_cast<double>(n));
	}
	return g;
}

bool core_decomposition_applies(const GraphFamily& family)
{
	bool shortcut = true;
	for (const auto& m : family.excluded_minors()) shortcut = shortcut && min_degree(m) >= 2;
	if (family.connected_only()) return shortcut;
	switch (family.flags().trimmable) {
		case Declared::yes: return true;
		case Declared::no: return false;
		case Declared::unknown: return shortcut;
	}
	return shortcut;
}

Rational f_nk(const GraphFamily& family, const Weighting& w, int n, int k, const WeightTable& b_table)
{
	if (k < 3 || k > n) throw std::invalid_argument("f_nk: need 3 <= k <= n");
	if (!core_decomposition_applies(family)) throw std::invalid_argument("f_nk: family " + family.name() + " is not trimmable");
	if (k >= static_cast<int>(b_table.b_known.size()) || !b_table.b_known[k])
		throw std::invalid_argument("f_nk: b table does not cover order " + std::to_string(k));
	const Rational& bk = *b_table.b_known[k];
	if (k == n) return bk;
	Rational forests = Rational(Integer(k)) * pow(Rational(n), n - 1 - k);
	return Rational(binomial(n, k)) * bk * pow(w.lambda0(), n - k) * forests;
}

Rational f_nk_brute(const ShapeHistogram& histogram, const Weighting& w, int k)
{
	Rational sum = 0;
	for (const auto& [key, count] : histogram.counts)
		if (key.components == 1 && key.core == k)
			sum += w.evaluate(key.bridges, key.non_bridges, 1) * Rational(from_u64(count));
	return sum;
}

Rational tree_term(const GraphFamily& family, const Weighting& w, int n)
{
	if (n < 1) return 0;
	if (!family.member(Graph(1))) return 0;
	Rational trees = n == 1 ? Rational(1) : pow(Rational(n), n - 2);
	return trees * pow(w.lambda0(), n - 1) * w.nu();
}

FactorialGrowthReport factorial_growth_check(const WeightTable& table, double eta)
{
	if (!(eta > 0)) throw std::invalid_argument("factorial_growth_check: eta must be positive");
	FactorialGrowthReport report;
	report.eta = eta;
	const double log_eta = std::log(eta);
	for (int n = 2; n <= table.max_order(); ++n) {
		FactorialGrowthRow row;
		row.n = n;
		if (table.a[n] <= 0) {
			report.rows.push_back(row);
			continue;
		}
		const double log_an = log_of(table.a[n]);
		for (int j = 1; j < n; ++j) {
			if (table.a[n - j] <= 0) continue;
			// log (n)_j
			double log_falling = std::lgamma(n + 1.0) - std::lgamma(n - j + 1.0);
			double slack = log_an - log_of(table.a[n - j]) - log_falling; // = j log(max eta_j)
			double eta_j = std::exp(slack / j);
			row.max_eta = row.max_eta ? std::min(*row.max_eta, eta_j) : eta_j;
			if (slack < j * log_eta - 1e-12 * std::max(1.0, std::abs(slack))) row.violating_j.push_back(j);
		}
		report.violations += static_cast<int>(row.violating_j.size());
		report.rows.push_back(std::move(row));
	}
	return report;
}

const CensusEntry* UnlabelledCensus::find(const CanonicalCode& code) const
{
	for (const auto& e : entries)
		if (e.code == code) return &e;
	return nullptr;
}

UnlabelledCensus build_census(const GraphFamily& family, int n_max, int cap)
{
	if (n_max > std::min(cap, kHardEnumerationCap))
		throw ResourceError("census cap is " + std::to_string(std::min(cap, kHardEnumerationCap)) + " vertices, got " + std::to_string(n_max));
	UnlabelledCensus census;
	census.family = family.name();
	census.max_order = n_max;
	census.freely_addable = family.flags().decomposable == Declared::yes && !family.connected_only();
	auto levels = unlabelled_graphs(n_max, [&](const Graph& g) { return family.member(g); }, true);
	for (int n = 1; n <= n_max; ++n) {
		for (auto& g : levels[n]) {
			CensusEntry e;
			e.code = canonicalize(g, 64);
			e.order = n;
			e.edges = g.size();
			e.bridges = static_cast<int>(bridges(g).size());
			e.components = 1;
			e.core_order = core_order(g);
			e.automorphisms = automorphism_count(g, std::max(kDefaultAutomorphismCap, n));
			e.representative = std::move(g);
			census.entries.push_back(std::move(e));
		}
	}
	std::stable_sort(census.entries.begin(), census.entries.end(), [](const CensusEntry& x, const CensusEntry& y) {
		if (x.order != y.order) return x.order < y.order;
		if (x.edges != y.edges) return x.edges < y.edges;
		return x.code < y.code;
	});
	return census;
}

Rational census_labelled_weight(const UnlabelledCensus& census, const Weighting& w, int n)
{
	Rational sum = 0;
	Integer nfact = factorial(n);
	for (const auto& e : census.entries) {
		if (e.order != n) continue;
		Rational copies = fraction(nfact, from_u64(e.automorphisms));
		sum += copies * w.evaluate(e.bridges, e.edges - e.bridges, e.components);
	}
	return sum;
}

std::string format_census(const UnlabelledCensus& census)
{
	std::ostringstream out;
	for (const auto& e : census.entries)
		out << e.code.hex() << ',' << e.order << ',' << e.edges << ',' << e.components << ',' << e.automorphisms << '\n';
	return out.str();
}

UnlabelledCensus parse_census(const std::string& text)
{
	UnlabelledCensus census;
	std::istringstream in(text);
	std::string line;
	while (std::getline(in, line)) {
		if (line.empty() || line[0] == '#') continue;
		std::istringstream fields(line);
		std::string code, v, e, kappa, aut;
		if (!std::getline(fields, code, ',') || !std::getline(fields, v, ',') || !std::getline(fields, e, ',') ||
			!std::getline(fields, kappa, ',') || !std::getline(fields, aut, ','))
			throw std::invalid_argument("census line needs code,v,e,kappa,aut: " + line);
		CensusEntry entry;
		entry.code = CanonicalCode::from_hex(code);
		entry.representative = entry.code.graph();
		entry.order = std::stoi(v);
		entry.edges = std::stoi(e);
		entry.components = std::stoi(kappa);
		entry.automorphisms = std::stoull(aut);
		if (entry.representative.order() != entry.order || entry.representative.size() != entry.edges)
			throw std::invalid_argument("census line disagrees with its code: " + line);
		entry.bridges = static_cast<int>(bridges(entry.representative).size());
		entry.core_order = core_order(entry.representative);
		census.max_order = std::max(census.max_order, entry.order);
		census.entries.push_back(std::move(entry));
	}
	return census;
}

std::string format_weight_table_csv(const WeightTable& table, int n_min)
{
	auto ratios = ratio_sequence(table);
	auto growth = growth_estimates(table);
	std::ostringstream out;
	out << "n,a_n,c_n,b_n,r_n,growth_estimate\n";
	out << std::setprecision(12);
	for (int n = std::max(0, n_min); n <= table.max_order(); ++n) {
		out << n << ',' << to_string(table.a[n]) << ',' << to_string(table.c[n]) << ',';
		if (table.b_known[n]) out << to_string(*table.b_known[n]);
		out << ',';
		if (ratios[n]) out << ratios[n]->get_d();
		out << ',';
		if (growth[n]) out << *growth[n];
		out << '\n';
	}
	return out.str();
}

FallingMomentResult falling_moment_check(const WeightTable& table, const UnlabelledCensus& census, const GraphFamily& family,
	const Weighting& w, std::span<const FallingPick> picks, int n, const Rational& rho, const EnumerationOptions& options)
{
	check_enumeration_cap(n, options);
	if (n > table.max_order()) throw std::invalid_argument("falling_moment_check: table does not reach order n");
	if (rho <= 0) throw std::invalid_argument("falling_moment_check: rho must be positive");

	struct Target
	{
		CanonicalCode code;
		int order;
		int edges;
		int multiplicity;
		std::uint64_t aut;
		int bridges;
	};
	std::vector<Target> targets;
	int total_order = 0;
	for (const auto& p : picks) {
		if (!is_connected(p.graph)) throw std::invalid_argument("falling_moment_check: picks must be connected");
		if (p.multiplicity < 0) throw std::invalid_argument("falling_moment_check: negative multiplicity");
		auto code = canonicalize(p.graph);
		for (const auto& t : targets)
			if (t.code == code) throw std::invalid_argument("falling_moment_check: picks must be pairwise non-isomorphic");
		const auto* entry = census.find(code);
		std::uint64_t aut = entry ? entry->automorphisms : automorphism_count(p.graph, kDefaultCanonicalCap);
		targets.push_back({code, p.graph.order(), p.graph.size(), p.multiplicity, aut, static_cast<int>(bridges(p.graph).size())});
		total_order += p.multiplicity * p.graph.order();
	}

	// the identity needs the picks (jointly) freely addable to A_(n-K)
	if (total_order <= n) {
		Graph pack;
		for (const auto& p : picks) pack = disjoint_union(pack, repeat_union(p.graph, p.multiplicity));
		const int rest = n - total_order;
		const std::uint64_t total = std::uint64_t{1} << pair_count(rest);
		for (std::uint64_t mask = 0; mask < total; ++mask) {
			auto g = Graph::from_edge_mask(rest, mask);
			if (family.member(g) && !family.member(disjoint_union(g, pack)))
				throw std::invalid_argument("falling_moment_check: picks are not freely addable to " + family.name());
		}
	}

	// left side by enumeration
	Rational lhs_sum = 0;
	{
		const std::uint64_t total = std::uint64_t{1} << pair_count(n);
		for (std::uint64_t mask = 0; mask < total; ++mask) {
			auto g = Graph::from_edge_mask(n, mask);
			if (!family.member(g)) continue;
			std::vector<int> counts(targets.size(), 0);
			for (const auto& comp : components(g)) {
				auto sub = induced_subgraph(g, comp);
				for (std::size_t i = 0; i < targets.size(); ++i) {
					if (sub.order() != targets[i].order || sub.size() != targets[i].edges) continue;
					if (canonicalize(sub) == targets[i].code) ++counts[i];
				}
			}
			Integer product = 1;
			for (std::size_t i = 0; i < targets.size() && product != 0; ++i)
				product *= falling_factorial(counts[i], targets[i].multiplicity);
			if (product == 0) continue;
			lhs_sum += weight(g, w) * Rational(product);
		}
	}
	FallingMomentResult out;
	out.lhs = n <= table.max_order() && table.a[n] != 0 ? Rational(lhs_sum / table.a[n]) : Rational(0);

	// right side from mu and the ratio sequence
	if (total_order > n) {
		out.rhs = 0;
	} else {
		Rational rhs = 1;
		for (const auto& t : targets) {
			Rational mu = pow(rho, t.order) * w.evaluate(t.bridges, t.edges - t.bridges, 1) /
						  Rational(from_u64(t.aut));
			rhs *= pow(mu, t.multiplicity);
		}
		auto r = ratio_sequence(table);
		for (int j = 1; j <= total_order; ++j) {
			const auto& rj = r[n - j + 1];
			if (!rj) throw std::invalid_argument("falling_moment_check: ratio undefined at order " + std::to_string(n - j + 1));
			rhs *= *rj / rho;
		}
		out.rhs = rhs;
	}
	out.residual = out.lhs - out.rhs;
	return out;
}

ConnectivityBounds connectivity_bounds(const ShapeHistogram& histogram, const Weighting& w)
{
	ConnectivityBounds out;
	auto tau = evaluate(histogram, w);
	if (tau.a == 0) throw std::invalid_argument("connectivity_bounds: no members");
	Rational frag_sum = 0;
	for (const auto& [key, count] : histogram.counts)
		frag_sum += w.evaluate(key.bridges, key.non_bridges, key.components) * Rational(from_u64(count)) * key.frag;
	out.p_connected = tau.c / tau.a;
	out.mean_frag = frag_sum / tau.a;
	const Rational& lambda = w.lambda0();
	out.connected_floor = std::exp(-Rational(w.nu() / lambda).get_d());
	out.frag_ceiling = 2 * w.nu() / lambda;
	out.connected_ok = out.p_connected.get_d() >= out.connected_floor;
	out.frag_ok = out.mean_frag < out.frag_ceiling;
	return out;
}

std::vector<Rational> kappa_distribution(const ShapeHistogram& histogram, const Weighting& w)
{
	std::vector<Rational> dist(histogram.order + 1, Rational(0));
	Rational total = 0;
	for (const auto& [key, count] : histogram.counts) {
		Rational t = w.evaluate(key.bridges, key.non_bridges, key.components) * Rational(from_u64(count));
		dist[key.components] += t;
		total += t;
	}
	for (auto& d : dist) d /= total;
	return dist;
}

std::vector<Rational> frag_distribution(const ShapeHistogram& histogram, const Weighting& w)
{
	std::vector<Rational> dist(histogram.order + 1, Rational(0));
	Rational total = 0;
	for (const auto& [key, count] : histogram.counts) {
		Rational t = w.evaluate(key.bridges, key.non_bridges, key.components) * Rational(from_u64(count));
		dist[key.frag] += t;
		total += t;
	}
	for (auto& d : dist) d /= total;
	return dist;
}

} // namespace wrg
