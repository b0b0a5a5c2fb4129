#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "zeno/bath_integrals.hpp"
#include "zeno/errors.hpp"

using namespace zeno;

namespace {

std::vector<complex_t> prefix(const std::vector<complex_t>& v, std::size_t k)
{
	return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k + 1)};
}

double max_deviation(const BathMoments& a, const BathMoments& b)
{
	return std::max({std::abs(a.pop_b - b.pop_b), std::abs(a.pop_m - b.pop_m),
	                 std::abs(a.coh_bm - b.coh_bm)});
}

} // namespace

TEST_CASE("time grid")
{
	const TimeGrid grid(20.0, 4001);
	CHECK(grid.step() == doctest::Approx(0.005));
	CHECK(grid.time(4000) == 20.0);
	CHECK(grid.refined(4).size() == 16001);
	CHECK_THROWS_AS(TimeGrid(1.0, 1), GridTooCoarse);
}

TEST_CASE("brute-force bath moments")
{
	const ModelParams p(1.0, 10.0, 3.0);
	const GreenFunction green(p);

	SUBCASE("empty domain at t = 0")
	{
		const std::vector<complex_t> at_zero(64, complex_t(1.0, 0.0));
		const auto m = bath_moments_bruteforce(0.0, at_zero, p);
		CHECK(m.pop_b == 0.0);
		CHECK(m.pop_m == 0.0);
		CHECK(m.coh_bm == complex_t(0.0, 0.0));
	}
	SUBCASE("needs 64 points")
	{
		const TimeGrid grid(1.0, 63);
		CHECK_THROWS_AS(bath_moments_bruteforce(1.0, sample_green(grid, green), p), GridTooCoarse);
	}
	SUBCASE("no coupling to |m> at g = 0")
	{
		const auto p0 = p.with_g(0.0);
		const TimeGrid grid(5.0, 501);
		const auto m = bath_moments_bruteforce(5.0, sample_green(grid, GreenFunction(p0)), p0);
		CHECK(m.pop_m == 0.0);
		CHECK(m.coh_bm == complex_t(0.0, 0.0));
		CHECK(m.pop_b > 0.0);
	}
	SUBCASE("norm conservation for an excited start")
	{
		const ModelParams bad(1.0, 0.1, 1.0);
		const GreenFunction gb(bad);
		const TimeGrid grid(20.0, 2001);
		const auto m = bath_moments_bruteforce(20.0, sample_green(grid, gb), bad);
		CHECK(std::abs(m.pop_b + m.pop_m - (1.0 - std::norm(gb(20.0)))) < 1e-4);
	}
	SUBCASE("swapping cos and sin conjugates the cross integral")
	{
		const TimeGrid grid(8.0, 801);
		const auto d = double_integrals_bruteforce(8.0, sample_green(grid, green), p);
		CHECK(std::abs(d.cos_sin - std::conj(d.sin_cos)) < 1e-10);
		CHECK(std::abs(d.cos_cos.imag()) < 1e-10);
		CHECK(std::abs(d.sin_sin.imag()) < 1e-10);
	}
}

TEST_CASE("fast moments reproduce the brute-force trapezoid sums")
{
	std::mt19937_64 rng(11);
	std::uniform_real_distribution<double> ug(0.05, 20.0), uc(0.0, 100.0);
	for (int trial = 0; trial < 3; ++trial) {
		const ModelParams p(1.0, ug(rng), uc(rng));
		const GreenFunction green(p);
		const TimeGrid grid(20.0, 2000);
		const auto samples = sample_green(grid, green);
		const auto fast = bath_moments_fast(grid, samples, p);
		CHECK(fast[0].pop_b == 0.0);
		CHECK(fast[0].coh_bm == complex_t(0.0, 0.0));
		double worst = 0.0;
		for (std::size_t k = 63; k < grid.size(); k += 97) {
			const auto brute = bath_moments_bruteforce(grid.time(k), prefix(samples, k), p);
			worst = std::max(worst, max_deviation(fast[k], brute));
		}
		const auto last = bath_moments_bruteforce(20.0, samples, p);
		worst = std::max(worst, max_deviation(fast.back(), last));
		CHECK(worst < 1e-8);
	}
}

TEST_CASE("fast moments vanish for |m> at g = 0")
{
	const ModelParams p(1.0, 10.0, 0.0);
	const TimeGrid grid(20.0, 1001);
	const auto fast = bath_moments_fast(grid, sample_green(grid, GreenFunction(p)), p);
	for (const auto& m : fast) {
		CHECK(std::abs(m.pop_m) < 1e-15);
		CHECK(std::abs(m.coh_bm) < 1e-15);
	}
}

TEST_CASE("extrapolated moments conserve probability")
{
	std::mt19937_64 rng(5);
	std::uniform_real_distribution<double> ug(0.05, 20.0), uc(0.0, 100.0), ua(-1.0, 1.0);
	const TimeGrid grid(20.0, 4001);
	for (int trial = 0; trial < 6; ++trial) {
		const ModelParams p(1.0, ug(rng), uc(rng));
		const GreenFunction green(p);
		const auto moments = bath_moments_extrapolated(grid, green);

		complex_t a0(ua(rng), ua(rng)), b0(ua(rng), ua(rng)), m0(ua(rng), ua(rng));
		const double norm = std::sqrt(std::norm(a0) + std::norm(b0) + std::norm(m0));
		a0 /= norm;
		b0 /= norm;
		m0 /= norm;
		double worst = 0.0;
		for (std::size_t k = 0; k < grid.size(); ++k) {
			const auto amp = green.amplitudes(grid.time(k), a0, b0, m0);
			const double total = std::norm(amp.alpha) + std::norm(amp.beta) + std::norm(amp.mu)
			                     + std::norm(a0) * (moments[k].pop_b + moments[k].pop_m);
			worst = std::max(worst, std::abs(total - 1.0));
			CHECK(moments[k].pop_b >= -1e-9);
			CHECK(moments[k].pop_m >= -1e-9);
			CHECK(std::norm(moments[k].coh_bm) <= moments[k].pop_b * moments[k].pop_m + 1e-9);
		}
		CHECK(worst < 1e-6);
	}
}

TEST_CASE("extrapolation agrees between quadrature back ends")
{
	const ModelParams p(1.0, 10.0, 4.0);
	const GreenFunction green(p);
	const TimeGrid grid(3.0, 97);
	const auto fast = bath_moments_extrapolated(grid, green, 2, Quadrature::Fast);
	const auto brute = bath_moments_extrapolated(grid, green, 2, Quadrature::BruteForce);
	for (std::size_t k = 0; k < grid.size(); ++k)
		CHECK(max_deviation(fast[k], brute[k]) < 1e-10);
}

TEST_CASE("lower-level bath populations keep moving after the excited state empties")
{
	const ModelParams p(1.0, 10.0, 1.0);
	const GreenFunction green(p);
	const TimeGrid grid(20.0, 4001);
	const auto moments = bath_moments_extrapolated(grid, green);
	double lo = INFINITY, hi = -INFINITY, excited = 0.0;
	for (std::size_t k = 0; k < grid.size(); ++k) {
		if (grid.time(k) < 10.0)
			continue;
		lo = std::min(lo, moments[k].pop_b);
		hi = std::max(hi, moments[k].pop_b);
		excited = std::max(excited, std::norm(green(grid.time(k))));
	}
	CHECK(excited < 1e-3);
	CHECK(hi - lo > 0.05);
}
