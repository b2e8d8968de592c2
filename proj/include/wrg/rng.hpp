#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace wrg {

/**
 * Philox4x32-10 counter-based generator. The 64-bit seed is the key and
 * the stream index fills the upper half of the counter, so stream (seed, i)
 * is reproducible on any platform and independent of thread scheduling.
 * Satisfies UniformRandomBitGenerator with 64-bit output.
 */
class Philox
{
public:
	using result_type = std::uint64_t;
	using Block = std::array<std::uint32_t, 4>;

	Philox(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

	static constexpr result_type min() noexcept { return 0; }
	static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

	result_type operator()() noexcept;

	/// The raw bijection on one 128-bit counter block.
	static Block encrypt(Block counter, std::array<std::uint32_t, 2> key) noexcept;

private:
	std::array<std::uint32_t, 2> key_;
	Block counter_;
	Block buffer_{};
	int used_ = 4; // 32-bit words consumed from buffer_
};

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(Philox& rng) noexcept;
/// Uniform integer in [0, bound), bound > 0, by Lemire's rejection method.
std::uint64_t uniform_below(Philox& rng, std::uint64_t bound) noexcept;
/// Poisson variate by sequential inversion; means above 500 are split into
/// independent pieces so exp(-mean) never underflows.
std::uint64_t poisson(Philox& rng, double mean);

} // namespace wrg
