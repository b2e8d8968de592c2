#pragma once

#include "wrg/enumeration.hpp"
#include "wrg/families.hpp"
#include "wrg/rational.hpp"
#include "wrg/weighting.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace wrg::cli {

/// Raised for invalid configuration; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

struct ExperimentConfig
{
	std::string family = "forests"; // built-in name or JSON definition path
	Rational lambda = 1;
	Rational nu = 1;
	std::optional<Rational> lambda0; // extended model when both are set
	std::optional<Rational> lambda1;
	int n_min = 0;
	int n_max = 6;
	int enumeration_cap = kDefaultEnumerationCap;
	std::uint64_t minor_budget = 10'000'000;
	std::uint64_t seed = 1;
	int threads = 1;
	std::string method = "exact"; // exact | boltzmann | mcmc | tree
	std::uint64_t draws = 1000;
	std::uint64_t steps = 1'000'000;
	std::uint64_t burn_in = 100'000;
	std::uint64_t thin = 10;
	std::optional<double> gamma;
	std::optional<double> rho;
	int census_max = 6;
	int k_max = 3;
	std::string out; // empty: standard output
	std::string census_out;

	bool operator==(const ExperimentConfig&) const = default;
};

nlohmann::json to_json(const ExperimentConfig& cfg);
/// Missing keys keep their defaults; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
/// Throws ConfigError when a field is outside its module's limits.
void validate(const ExperimentConfig& cfg);

Weighting weighting(const ExperimentConfig& cfg);
GraphFamily family(const ExperimentConfig& cfg);

} // namespace wrg::cli
