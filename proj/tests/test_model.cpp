#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "zeno/errors.hpp"
#include "zeno/model.hpp"

using namespace zeno;

namespace {

// composite Simpson on [a, b] with an even number of panels
template <typename F>
double simpson(F&& f, double a, double b, std::size_t panels)
{
	const double h = (b - a) / static_cast<double>(panels);
	double sum = f(a) + f(b);
	for (std::size_t i = 1; i < panels; ++i)
		sum += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
	return sum * h / 3.0;
}

} // namespace

TEST_CASE("model parameters derive Omega_0^2 and reject invalid input")
{
	const ModelParams p(1.0, 10.0, 3.0);
	CHECK(p.omega0_sq() == 1.0 * 10.0 / 2.0);
	CHECK(p.with_gamma(0.1).omega0_sq() == 0.05);
	CHECK(p.delta0() == 0.0);

	CHECK_THROWS_AS(ModelParams(0.0, 1.0, 1.0), Error);
	CHECK_THROWS_AS(ModelParams(1.0, -1.0, 1.0), Error);
	CHECK_THROWS_AS(ModelParams(1.0, 1.0, -0.5), Error);
	CHECK_THROWS_AS(ModelParams(1.0, NAN, 1.0), Error);

	CHECK(CavityRegime::good().ratio == 10.0);
	CHECK(CavityRegime::bad().ratio == 0.1);
	CHECK(CavityRegime::good().params(2.0).gamma() == 10.0);
	CHECK_THROWS_AS(CavityRegime::custom(-1.0), Error);
}

TEST_CASE("Lorentzian spectral density")
{
	const ModelParams p(1.0, 10.0, 0.0, 0.3);
	const double pi = std::numbers::pi;

	CHECK(lorentzian_density(p.delta0(), p) == doctest::Approx(p.gamma() / (2.0 * pi)).epsilon(1e-14));
	CHECK(lorentzian_density(p.delta0() + p.lambda(), p)
	      == doctest::Approx(p.gamma() / (4.0 * pi)).epsilon(1e-14));

	SUBCASE("unit mass scaled by Omega_0^2")
	{
		const double W = 1e4 * p.lambda();
		// substitution w = delta0 + lambda tan(u) keeps the quadrature smooth
		const double integral = simpson(
			[&](double u) {
				const double w = p.delta0() + p.lambda() * std::tan(u);
				const double jac = p.lambda() / (std::cos(u) * std::cos(u));
				return lorentzian_density(w, p) * jac;
			},
			-std::atan(W / p.lambda()), std::atan(W / p.lambda()), 20000);
		CHECK(std::abs(integral - p.omega0_sq()) / p.omega0_sq() < 1e-3);
	}

	SUBCASE("positive and symmetric about delta0")
	{
		std::mt19937_64 rng(7);
		std::uniform_real_distribution<double> u(-200.0, 200.0);
		for (int i = 0; i < 1000; ++i) {
			const double d = u(rng);
			const double left = lorentzian_density(p.delta0() - d, p);
			const double right = lorentzian_density(p.delta0() + d, p);
			CHECK(left > 0.0);
			CHECK(left == doctest::Approx(right).epsilon(1e-14));
		}
	}
}

TEST_CASE("memory kernel")
{
	const ModelParams p(1.0, 10.0, 0.0);
	CHECK(memory_kernel(0.0, p) == p.omega0_sq());
	CHECK(memory_kernel(0.7, p) == memory_kernel(-0.7, p));
	CHECK(std::abs(memory_kernel(1.0 / p.lambda(), p) - p.omega0_sq() / std::numbers::e) < 1e-12);
}

TEST_CASE("dressed kernel")
{
	const ModelParams uncoupled(1.0, 10.0, 0.0);
	for (double tau : {0.0, 0.3, 1.7, 5.0})
		CHECK(dressed_kernel(tau, uncoupled) == memory_kernel(tau, uncoupled));

	const ModelParams p(1.0, 10.0, 4.0);
	CHECK(std::abs(dressed_kernel(std::numbers::pi / (2.0 * p.g()), p)) < 1e-14);
	for (double tau : {0.1, 0.9, 3.3})
		CHECK(dressed_kernel(tau, p) == dressed_kernel(-tau, p));

	SUBCASE("Laplace transform at s = lambda")
	{
		const double s = p.lambda();
		const double numeric
			= simpson([&](double tau) { return std::exp(-s * tau) * dressed_kernel(tau, p); }, 0.0, 40.0,
		              400000);
		const double l2 = 2.0 * p.lambda();
		const double closed = p.omega0_sq() * l2 / (l2 * l2 + p.g() * p.g());
		CHECK(std::abs(numeric - closed) < 1e-6);
	}
}
