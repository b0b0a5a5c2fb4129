#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zeno/channel.hpp"

namespace zeno {

struct DirectionValue
{
	BlochDirection direction;
	double raw = 0.0;        // accumulated trace-distance increase
	double normalized = 0.0; // raw / max raw
};

// BLP measure over a finite set of sampled directions. The supremum is taken
// over the samples only, so `value` is a lower bound on the true measure.
struct BlpResult
{
	double value = 0.0;
	BlochDirection best_direction = BlochDirection::poles();
	std::vector<DirectionValue> per_direction;
	bool normalized = false; // set when value > 0 and normalized fields are filled
};

struct BlpProtocol
{
	TimeGrid grid{20.0, 4001};
	std::size_t n_samples = 500;
	std::uint64_t seed = 42;
	ChannelOptions channel{};
	unsigned threads = 0; // 0: hardware concurrency
};

// The poles direction (0, 0, 1) followed by n uniform random unit vectors from
// a seeded mt19937_64. Extending n keeps the earlier samples as a prefix.
std::vector<BlochDirection> sample_directions(std::size_t n, std::uint64_t seed);

// Discrete total positive variation sum_k max(D_{k+1} - D_k, 0).
double accumulate_increases(std::span<const double> distances);

BlpResult blp_measure(const ChannelCoefficients& coeffs, std::span<const BlochDirection> directions,
                      unsigned threads = 0);
BlpResult blp_measure(const ModelParams& p, const BlpProtocol& protocol = {});

// One blp_measure per coupling g (sorted, nonnegative), other parameters
// taken from `base`.
std::vector<std::pair<double, BlpResult>> blp_sweep(const ModelParams& base,
                                                    std::span<const double> g_values,
                                                    const BlpProtocol& protocol = {});

} // namespace zeno
