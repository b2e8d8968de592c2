#include "config.hpp"

#include "wrg/errors.hpp"

#include <fstream>
#include <set>

namespace wrg::cli {

using nlohmann::json;

namespace {

Rational rational_field(const json& j, const char* key)
{
	const auto& v = j.at(key);
	try {
		if (v.is_string()) return parse_rational(v.get<std::string>());
		if (v.is_number_integer()) return Rational(v.get<long>());
		if (v.is_number()) return parse_rational(v.dump());
	} catch (const std::exception& e) {
		throw ConfigError(std::string("bad value for ") + key + ": " + e.what());
	}
	throw ConfigError(std::string(key) + " must be a number or a \"p/q\" string");
}

template <class T>
void read(const json& j, const char* key, T& field)
{
	if (!j.contains(key)) return;
	try {
		field = j.at(key).get<T>();
	} catch (const json::exception& e) {
		throw ConfigError(std::string("bad value for ") + key + ": " + e.what());
	}
}

template <class T>
void read(const json& j, const char* key, std::optional<T>& field)
{
	if (!j.contains(key) || j.at(key).is_null()) return;
	T value{};
	read(j, key, value);
	field = value;
}

} // namespace

json to_json(const ExperimentConfig& c)
{
	json j = {
		{"family", c.family},
		{"lambda", to_string(c.lambda)},
		{"nu", to_string(c.nu)},
		{"n_min", c.n_min},
		{"n_max", c.n_max},
		{"enumeration_cap", c.enumeration_cap},
		{"minor_budget", c.minor_budget},
		{"seed", c.seed},
		{"threads", c.threads},
		{"method", c.method},
		{"draws", c.draws},
		{"steps", c.steps},
		{"burn_in", c.burn_in},
		{"thin", c.thin},
		{"census_max", c.census_max},
		{"k_max", c.k_max},
		{"out", c.out},
		{"census_out", c.census_out},
	};
	if (c.lambda0) j["lambda0"] = to_string(*c.lambda0);
	if (c.lambda1) j["lambda1"] = to_string(*c.lambda1);
	if (c.gamma) j["gamma"] = *c.gamma;
	if (c.rho) j["rho"] = *c.rho;
	return j;
}

ExperimentConfig config_from_json(const json& j)
{
	if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
	static const std::set<std::string> known = {"family", "lambda", "nu", "lambda0", "lambda1", "n_min", "n_max",
		"enumeration_cap", "minor_budget", "seed", "threads", "method", "draws", "steps", "burn_in", "thin", "gamma", "rho",
		"census_max", "k_max", "out", "census_out"};
	for (const auto& [key, value] : j.items())
		if (!known.contains(key)) throw ConfigError("unknown configuration key: " + key);

	ExperimentConfig c;
	read(j, "family", c.family);
	if (j.contains("lambda")) c.lambda = rational_field(j, "lambda");
	if (j.contains("nu")) c.nu = rational_field(j, "nu");
	if (j.contains("lambda0")) c.lambda0 = rational_field(j, "lambda0");
	if (j.contains("lambda1")) c.lambda1 = rational_field(j, "lambda1");
	read(j, "n_min", c.n_min);
	read(j, "n_max", c.n_max);
	read(j, "enumeration_cap", c.enumeration_cap);
	read(j, "minor_budget", c.minor_budget);
	read(j, "seed", c.seed);
	read(j, "threads", c.threads);
	read(j, "method", c.method);
	read(j, "draws", c.draws);
	read(j, "steps", c.steps);
	read(j, "burn_in", c.burn_in);
	read(j, "thin", c.thin);
	read(j, "gamma", c.gamma);
	read(j, "rho", c.rho);
	read(j, "census_max", c.census_max);
	read(j, "k_max", c.k_max);
	read(j, "out", c.out);
	read(j, "census_out", c.census_out);
	return c;
}

ExperimentConfig load_config(const std::string& path)
{
	std::ifstream in(path);
	if (!in) throw ConfigError("cannot open configuration file " + path);
	try {
		return config_from_json(json::parse(in));
	} catch (const json::parse_error& e) {
		throw ConfigError("configuration file " + path + " is not valid JSON: " + e.what());
	}
}

void validate(const ExperimentConfig& c)
{
	if (c.lambda <= 0 || c.nu <= 0) throw ConfigError("lambda and nu must be positive");
	if (c.lambda0.has_value() != c.lambda1.has_value()) throw ConfigError("lambda0 and lambda1 must be given together");
	if (c.lambda0 && (*c.lambda0 <= 0 || *c.lambda1 <= 0)) throw ConfigError("lambda0 and lambda1 must be positive");
	if (c.n_min < 0 || c.n_max < c.n_min) throw ConfigError("need 0 <= n_min <= n_max");
	if (c.enumeration_cap < 0 || c.enumeration_cap > kHardEnumerationCap)
		throw ConfigError("enumeration_cap must lie in 0.." + std::to_string(kHardEnumerationCap));
	if (c.minor_budget == 0) throw ConfigError("minor_budget must be positive");
	if (c.threads < 1) throw ConfigError("threads must be at least 1");
	if (c.method != "exact" && c.method != "boltzmann" && c.method != "mcmc" && c.method != "tree")
		throw ConfigError("method must be exact, boltzmann, mcmc or tree");
	if (c.thin == 0) throw ConfigError("thin must be positive");
	if (c.gamma && !(*c.gamma > 0)) throw ConfigError("gamma must be positive");
	if (c.rho && !(*c.rho > 0)) throw ConfigError("rho must be positive");
	if (c.census_max < 1 || c.census_max > kCensusCap) throw ConfigError("census_max must lie in 1.." + std::to_string(kCensusCap));
	if (c.k_max < 1) throw ConfigError("k_max must be at least 1");
}

Weighting weighting(const ExperimentConfig& c)
{
	if (c.lambda0) return Weighting::extended(*c.lambda0, *c.lambda1, c.nu);
	return Weighting::diagonal(c.lambda, c.nu);
}

GraphFamily family(const ExperimentConfig& c)
{
	try {
		auto f = GraphFamily::resolve(c.family);
		f.minor_options().node_budget = c.minor_budget;
		return f;
	} catch (const ResourceError&) {
		throw;
	} catch (const std::exception& e) {
		throw ConfigError("family " + c.family + ": " + e.what());
	}
}

} // namespace wrg::cli
