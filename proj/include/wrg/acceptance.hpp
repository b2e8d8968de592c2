#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wrg::acceptance {

struct Options
{
	std::uint64_t seed = 20'240'601;
	int threads = 1;
};

struct Result
{
	int id = 0;
	std::string suite;
	bool passed = false; // every check held and the runtime stayed under the limit
	bool within_time = false;
	double seconds = 0;
	double limit_seconds = 0;
	nlohmann::json measured;
	std::string error; // set when the run threw
};

struct Criterion
{
	int id;
	std::string suite;
	std::string title;
	double limit_seconds;
	/// Fills `measured`; returns whether every check held.
	std::function<bool(const Options&, nlohmann::json& measured)> run;
};

const std::vector<Criterion>& criteria();
/// Suite names in criterion order, without "all".
std::vector<std::string> suite_names();
/// Runs one suite, or every criterion for "all". Throws
/// std::invalid_argument for an unknown name.
std::vector<Result> run_suite(const std::string& name, const Options& options = {});
Result run_criterion(const Criterion& c, const Options& options);

/// One line: "PASS  3 tree-series  0.41s/10s  {...}"
std::string format_line(const Result& r);
nlohmann::json to_json(const Result& r);

} // namespace wrg::acceptance
