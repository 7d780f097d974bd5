#pragma once

#include <cstdint>

namespace magnus {

inline constexpr uint64_t kRngGamma = 0x9E3779B97F4A7C15ull;

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline uint64_t mix64(uint64_t z)
{
	z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
	z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
	return z ^ (z >> 31);
}

/// Counter-based SplitMix64 stream: value i of stream s is
/// mix64(s + (i+1)*gamma). Streams derived via substream() are independent of
/// each other and of consumption order, so parallel consumers are
/// bit-reproducible for a fixed (seed, block) layout.
class CounterRng {
public:
	explicit CounterRng(uint64_t stream) : stream_(stream) {}

	static uint64_t substream(uint64_t seed, uint64_t index)
	{
		return mix64(seed + kRngGamma * (index + 1));
	}

	uint64_t next_u64() { return mix64(stream_ + kRngGamma * (++counter_)); }

	/// Uniform in [0, 1), 53 random bits.
	double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

	/// Uniform in {0, ..., n-1}. Modulo bias is irrelevant at our ranges.
	uint64_t next_below(uint64_t n) { return next_u64() % n; }

private:
	uint64_t stream_;
	uint64_t counter_ = 0;
};

} // namespace magnus
