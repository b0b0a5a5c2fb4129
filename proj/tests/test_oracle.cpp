#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zeno/channel.hpp"
#include "zeno/errors.hpp"
#include "zeno/oracle.hpp"

using namespace zeno;

namespace {

// exact mass of J over [delta0 - W, delta0 + W]
double windowed_mass(const ModelParams& p, double W)
{
	return p.omega0_sq() * 2.0 / std::numbers::pi * std::atan(W / p.lambda());
}

double alpha_deviation(const ModelParams& p, std::size_t modes, double t_max)
{
	const auto bath = discretize_bath(p, modes, 50.0);
	const TimeGrid grid(t_max, 401);
	const auto traj = integrate_full(bath, p, FullState::initial(modes, 1.0, 0.0), grid,
	                                 default_oracle_step(p));
	const GreenFunction green(p);
	double worst = 0.0;
	for (const auto& s : traj.samples)
		worst = std::max(worst, std::abs(std::abs(s.alpha) - std::abs(green(s.time))));
	return worst;
}

} // namespace

TEST_CASE("bath discretization")
{
	const ModelParams p(1.0, 10.0, 0.0);
	const auto bath = discretize_bath(p, 2000, 50.0);
	CHECK(bath.count() == 2000);
	CHECK(std::abs(bath.coupling_weight() - windowed_mass(p, 50.0)) / windowed_mass(p, 50.0) < 1e-3);
	CHECK(bath.recurrence_time() > 20.0);

	const auto doubled = discretize_bath(p, 4000, 50.0);
	CHECK(doubled.spacing == doctest::Approx(bath.spacing / 2.0));
	CHECK(std::abs(doubled.coupling_weight() - bath.coupling_weight()) / bath.coupling_weight() < 1e-4);

	for (double c : discretize_bath(p.with_gamma(0.0), 500, 30.0).couplings)
		CHECK(c == 0.0);

	CHECK_THROWS_AS(discretize_bath(p, 2000, 10.0), WindowTooNarrow);
	CHECK_THROWS_AS(discretize_bath(p, 50, 50.0), Error);
}

TEST_CASE("oracle integration")
{
	SUBCASE("decoupled excited state is frozen")
	{
		const ModelParams p(1.0, 0.0, 3.0);
		const auto bath = discretize_bath(p, 200, 50.0);
		const auto traj = integrate_full(bath, p, FullState::initial(200, 0.8, 0.6), TimeGrid(20.0, 201),
		                                 default_oracle_step(p));
		for (const auto& s : traj.samples) {
			CHECK(std::abs(s.alpha - 0.8) < 1e-8);
			CHECK(std::abs(s.norm - 1.0) < 1e-6);
		}
	}
	SUBCASE("two-level decay matches the residue formula")
	{
		CHECK(alpha_deviation(ModelParams(1.0, 0.1, 0.0), 2000, 20.0) < 1e-3);
	}
	SUBCASE("coarse steps surface as NormDrift")
	{
		const ModelParams p(1.0, 10.0, 1.0);
		const auto bath = discretize_bath(p, 200, 50.0);
		CHECK_THROWS_AS(integrate_full(bath, p, FullState::initial(200, 1.0, 0.0), TimeGrid(5.0, 51), 0.1),
		                NormDrift);
	}
	SUBCASE("size mismatch is rejected")
	{
		const ModelParams p(1.0, 10.0, 1.0);
		const auto bath = discretize_bath(p, 200, 50.0);
		CHECK_THROWS_AS(integrate_full(bath, p, FullState::initial(100, 1.0, 0.0), TimeGrid(1.0, 11), 1e-3),
		                Error);
	}
}

TEST_CASE("oracle agreement improves as the bath is refined")
{
	// coarse baths revive before lambda t = 20; once 2 pi / dw exceeds the
	// horizon only the finite window is left
	const ModelParams p(1.0, 10.0, 0.0);
	std::vector<double> dev;
	for (std::size_t modes : {200, 400, 800})
		dev.push_back(alpha_deviation(p, modes, 20.0));
	CHECK(dev[1] < dev[0]);
	CHECK(dev[2] < dev[1]);
	CHECK(dev.back() < 1e-4);
	CHECK(dev.front() > 10.0 * dev.back());
}

TEST_CASE("excited state at gamma = g = 10 lambda: channel vs oracle")
{
	const ModelParams p(1.0, 10.0, 10.0);
	const TimeGrid grid(20.0, 401);
	const auto bath = discretize_bath(p, 2000, 50.0);
	const auto traj = integrate_full(bath, p, FullState::initial(2000, 1.0, 0.0), grid, default_oracle_step(p));
	CHECK(traj.max_norm_drift < 1e-6);

	const ChannelCoefficients coeffs(p, grid);
	double rho_dev = 0.0, bath_dev = 0.0;
	for (std::size_t k = 0; k < grid.size(); ++k) {
		const auto& s = traj.samples[k];
		const auto rho = evolve_state(BlockState::excited(), coeffs, k);
		const auto ref = s.reduced_density();
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j)
				rho_dev = std::max(rho_dev, std::abs(rho(i, j) - ref(i, j)));
		const auto& m = coeffs.moments(k);
		bath_dev = std::max({bath_dev, std::abs(m.pop_b - s.pop_b), std::abs(m.pop_m - s.pop_m),
		                     std::abs(m.coh_bm - s.coh_bm)});
	}
	CHECK(rho_dev < 1e-3);
	CHECK(bath_dev < 1e-3);

	// interaction-picture final state agrees with the sampled reduced sums
	double pop_b = 0.0;
	for (const auto& b : traj.final_state.beta_j)
		pop_b += std::norm(b);
	CHECK(pop_b == doctest::Approx(traj.samples.back().pop_b).epsilon(1e-12));
	CHECK(traj.final_state.norm() == doctest::Approx(1.0).epsilon(1e-6));
}
