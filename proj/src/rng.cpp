#include "wrg/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace wrg {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53;
constexpr std::uint32_t kM1 = 0xCD9E8D57;
constexpr std::uint32_t kW0 = 0x9E3779B9;
constexpr std::uint32_t kW1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept
{
	std::uint64_t p = static_cast<std::uint64_t>(a) * b;
	hi = static_cast<std::uint32_t>(p >> 32);
	lo = static_cast<std::uint32_t>(p);
}

} // namespace

Philox::Philox(std::uint64_t seed, std::uint64_t stream) noexcept
	: key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}
	, counter_{0, 0, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)}
{
}

Philox::Block Philox::encrypt(Block ctr, std::array<std::uint32_t, 2> key) noexcept
{
	for (int round = 0; round < 10; ++round) {
		std::uint32_t hi0, lo0, hi1, lo1;
		mulhilo(kM0, ctr[0], hi0, lo0);
		mulhilo(kM1, ctr[2], hi1, lo1);
		ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
		key[0] += kW0;
		key[1] += kW1;
	}
	return ctr;
}

Philox::result_type Philox::operator()() noexcept
{
	if (used_ > 2) {
		buffer_ = encrypt(counter_, key_);
		used_ = 0;
		// 64-bit block index in the low half of the counter
		if (++counter_[0] == 0) ++counter_[1];
	}
	std::uint64_t lo = buffer_[used_];
	std::uint64_t hi = buffer_[used_ + 1];
	used_ += 2;
	return lo | (hi << 32);
}

double uniform01(Philox& rng) noexcept { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_below(Philox& rng, std::uint64_t bound) noexcept
{
	unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
	auto low = static_cast<std::uint64_t>(m);
	if (low < bound) {
		std::uint64_t threshold = -bound % bound;
		while (low < threshold) {
			m = static_cast<unsigned __int128>(rng()) * bound;
			low = static_cast<std::uint64_t>(m);
		}
	}
	return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t poisson(Philox& rng, double mean)
{
	if (!(mean >= 0) || !std::isfinite(mean)) throw std::invalid_argument("poisson: mean must be finite and non-negative");
	std::uint64_t total = 0;
	while (mean > 0) {
		double piece = std::min(mean, 500.0);
		mean -= piece;
		double u = uniform01(rng);
		double p = std::exp(-piece);
		double cdf = p;
		std::uint64_t k = 0;
		while (u >= cdf) {
			++k;
			p *= piece / static_cast<double>(k);
			double next = cdf + p;
			if (next == cdf) break; // rounding floor far in the tail
			cdf = next;
		}
		total += k;
	}
	return total;
}

} // namespace wrg
