#include "zeno/blp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "zeno/errors.hpp"
#include "zeno/parallel.hpp"

namespace zeno {

namespace {

// 53-bit uniform in [0, 1) from the raw engine output; keeps the sample
// stream independent of the standard library's distribution implementations.
double uniform01(std::mt19937_64& engine)
{
	return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

} // namespace

std::vector<BlochDirection> sample_directions(std::size_t n, std::uint64_t seed)
{
	if (n < 1)
		throw Error("sample_directions: need at least one sample");
	std::mt19937_64 engine(seed);
	std::vector<BlochDirection> out;
	out.reserve(n + 1);
	out.push_back(BlochDirection::poles());
	for (std::size_t i = 0; i < n; ++i) {
		// Archimedes: z uniform on [-1, 1] and azimuth uniform gives the uniform sphere
		const double z = 1.0 - 2.0 * uniform01(engine);
		const double phi = 2.0 * std::numbers::pi * uniform01(engine);
		const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
		out.push_back(BlochDirection::normalized(rho * std::cos(phi), rho * std::sin(phi), z));
	}
	return out;
}

double accumulate_increases(std::span<const double> distances)
{
	if (distances.size() < 2)
		throw Error("accumulate_increases: need at least two points");
	double total = 0.0;
	for (std::size_t k = 0; k + 1 < distances.size(); ++k)
		total += std::max(distances[k + 1] - distances[k], 0.0);
	return total;
}

BlpResult blp_measure(const ChannelCoefficients& coeffs, std::span<const BlochDirection> directions,
                      unsigned threads)
{
	if (directions.empty())
		throw Error("blp_measure: no directions");

	std::vector<double> raw(directions.size());
	parallel_for(directions.size(), threads, [&](std::size_t i) {
		raw[i] = accumulate_increases(trace_distance_trajectory(directions[i], coeffs));
	});

	// reduce in sample order so ties resolve to the earliest direction
	BlpResult result;
	std::size_t best = 0;
	for (std::size_t i = 1; i < raw.size(); ++i)
		if (raw[i] > raw[best])
			best = i;
	result.value = raw[best];
	result.best_direction = directions[best];
	result.normalized = result.value > 0.0;
	result.per_direction.reserve(directions.size());
	for (std::size_t i = 0; i < directions.size(); ++i) {
		const double norm = result.normalized ? raw[i] / result.value : 0.0;
		result.per_direction.push_back({directions[i], raw[i], norm});
	}
	return result;
}

BlpResult blp_measure(const ModelParams& p, const BlpProtocol& protocol)
{
	const ChannelCoefficients coeffs(p, protocol.grid, protocol.channel);
	const auto directions = sample_directions(protocol.n_samples, protocol.seed);
	return blp_measure(coeffs, directions, protocol.threads);
}

std::vector<std::pair<double, BlpResult>> blp_sweep(const ModelParams& base,
                                                    std::span<const double> g_values,
                                                    const BlpProtocol& protocol)
{
	for (std::size_t i = 0; i < g_values.size(); ++i) {
		if (!(g_values[i] >= 0.0))
			throw Error("blp_sweep: coupling values must be nonnegative");
		if (i > 0 && g_values[i] < g_values[i - 1])
			throw Error("blp_sweep: coupling values must be sorted ascending");
	}
	const auto directions = sample_directions(protocol.n_samples, protocol.seed);
	std::vector<std::pair<double, BlpResult>> out;
	out.reserve(g_values.size());
	for (double g : g_values) {
		const ChannelCoefficients coeffs(base.with_g(g), protocol.grid, protocol.channel);
		out.emplace_back(g, blp_measure(coeffs, directions, protocol.threads));
	}
	return out;
}

} // namespace zeno
