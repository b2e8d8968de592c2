#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace wrg {

/// Splits [0, total) into `threads` contiguous ranges and runs
/// fn(begin, end, chunk) for each, concurrently when threads > 1.
/// Exceptions are rethrown on the calling thread. Callers merge per-chunk results in chunk order for determinism.
template<typename Fn>
void parallel_chunks(std::uint64_t total, int threads, Fn&& fn)
{
	threads = std::max(1, threads);
	if (threads == 1 || total < static_cast<std::uint64_t>(threads) * 64) {
		fn(std::uint64_t{0}, total, 0);
		return;
	}
	std::vector<std::exception_ptr> errors(threads);
	{
		std::vector<std::jthread> workers;
		std::uint64_t step = (total + threads - 1) / threads;
		for (int t = 0; t < threads; ++t) {
			std::uint64_t begin = std::min(total, step * t);
			std::uint64_t end = std::min(total, begin + step);
			workers.emplace_back([&fn, &errors, begin, end, t] {
				try {
					fn(begin, end, t);
				} catch (...) {
					errors[t] = std::current_exception();
				}
			});
		}
	}
	// rethrow the first chunk's failure on the calling thread
	for (auto& e : errors)
		if (e) std::rethrow_exception(e);
}

/// Number of chunks parallel_chunks will use for `total` items.
inline int chunk_count(std::uint64_t total, int threads)
{
	threads = std::max(1, threads);
	return (threads == 1 || total < static_cast<std::uint64_t>(threads) * 64) ? 1 : threads;
}

} // namespace wrg
