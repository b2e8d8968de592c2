// One line per acceptance criterion; exits non-zero if any fails.
#include "wrg/acceptance.hpp"

#include <algorithm>
#include <iostream>
#include <thread>

int main()
{
	wrg::acceptance::Options options;
	options.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
	int failures = 0;
	for (const auto& c : wrg::acceptance::criteria()) {
		auto r = wrg::acceptance::run_criterion(c, options);
		std::cout << wrg::acceptance::format_line(r) << std::endl;
		if (!r.passed) ++failures;
	}
	std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
	return failures == 0 ? 0 : 1;
}
