#include "zeno/amplitudes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

struct CubicCoefficients
{
	double c2, c1, c0; // s^3 + c2 s^2 + c1 s + c0
};

CubicCoefficients coefficients(const ModelParams& p)
{
	const double l = p.lambda();
	const double w2 = p.omega0_sq();
	const double g = p.g();
	return {2.0 * l, l * l + w2 + g * g, w2 * l};
}

template <typename T>
T eval(const CubicCoefficients& c, T s)
{
	return ((s + c.c2) * s + c.c1) * s + c.c0;
}

template <typename T>
T eval_derivative(const CubicCoefficients& c, T s)
{
	return (3.0 * s + 2.0 * c.c2) * s + c.c1;
}

template <typename T>
T newton_polish(const CubicCoefficients& c, T s, int steps)
{
	for (int i = 0; i < steps; ++i) {
		const T d = eval_derivative(c, s);
		if (std::abs(d) == 0.0)
			break;
		const T next = s - eval(c, s) / d;
		if (!(std::abs(eval(c, next)) <= std::abs(eval(c, s))))
			break;
		s = next;
	}
	return s;
}

} // namespace

complex_t denominator_cubic(complex_t s, const ModelParams& p)
{
	return eval(coefficients(p), s);
}

CubicRoots solve_cubic(const ModelParams& p)
{
	const auto c = coefficients(p);
	const double shift = c.c2 / 3.0;
	// depressed cubic x^3 + P x + Q with s = x - shift
	const double P = c.c1 - c.c2 * c.c2 / 3.0;
	const double Q = 2.0 * c.c2 * c.c2 * c.c2 / 27.0 - c.c2 * c.c1 / 3.0 + c.c0;
	const double disc = 0.25 * Q * Q + P * P * P / 27.0;

	CubicRoots out;
	if (c.c0 == 0.0) {
		// Omega_0 = 0: s ((s + lambda)^2 + g^2) factors exactly
		const double l = p.lambda();
		out.roots = {complex_t(0.0, 0.0), complex_t(-l, p.g()), complex_t(-l, -p.g())};
	} else if (disc > 0.0) {
		// one real root and a conjugate pair (Cardano)
		const double u = std::cbrt(-0.5 * Q - std::copysign(std::sqrt(disc), Q));
		const double v = (u != 0.0) ? -P / (3.0 * u) : 0.0;
		double real_root = newton_polish(c, u + v - shift, 2);
		complex_t pair(-0.5 * (u + v) - shift, 0.5 * std::sqrt(3.0) * (u - v));
		pair = newton_polish(c, pair, 2);
		out.roots = {complex_t(real_root, 0.0), pair, std::conj(pair)};
	} else if (P == 0.0) {
		out.roots.fill(complex_t(-shift, 0.0));
	} else {
		// three real roots (trigonometric form)
		const double m = 2.0 * std::sqrt(-P / 3.0);
		const double arg = std::clamp(3.0 * Q / (P * m), -1.0, 1.0);
		const double theta = std::acos(arg) / 3.0;
		for (int k = 0; k < 3; ++k) {
			const double x = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
			out.roots[k] = complex_t(newton_polish(c, x - shift, 2), 0.0);
		}
	}

	std::sort(out.roots.begin(), out.roots.end(), [](complex_t a, complex_t b) {
		if (a.real() != b.real())
			return a.real() > b.real();
		return a.imag() < b.imag();
	});

	double min_sep = std::abs(out.roots[0] - out.roots[1]);
	min_sep = std::min(min_sep, std::abs(out.roots[0] - out.roots[2]));
	min_sep = std::min(min_sep, std::abs(out.roots[1] - out.roots[2]));
	out.degenerate = min_sep < kRootSeparationTolerance * p.lambda();
	return out;
}

namespace {

std::array<complex_t, 3> residues(const CubicRoots& r, const ModelParams& p)
{
	if (r.degenerate)
		throw DegenerateRoots("green_function: cubic roots are degenerate, perturb gamma");
	const double l = p.lambda();
	const double g2 = p.g() * p.g();
	std::array<complex_t, 3> out;
	for (int i = 0; i < 3; ++i) {
		const complex_t s = r.roots[i];
		complex_t denom(1.0, 0.0);
		for (int j = 0; j < 3; ++j)
			if (j != i)
				denom *= s - r.roots[j];
		out[i] = ((s + l) * (s + l) + g2) / denom;
	}
	return out;
}

} // namespace

complex_t green_function(double t, const CubicRoots& r, const ModelParams& p)
{
	const auto res = residues(r, p);
	complex_t sum(0.0, 0.0);
	for (int i = 0; i < 3; ++i)
		sum += res[i] * std::exp(r.roots[i] * t);
	return sum;
}

std::pair<complex_t, complex_t> lower_amplitudes(double t, complex_t beta0, complex_t mu0,
                                                 const ModelParams& p)
{
	const double c = std::cos(p.g() * t);
	const double s = std::sin(p.g() * t);
	const complex_t i(0.0, 1.0);
	return {beta0 * c - i * mu0 * s, mu0 * c - i * beta0 * s};
}

GreenFunction::GreenFunction(const ModelParams& p)
	: params_(p), effective_(p), roots_(solve_cubic(p))
{
	if (p.omega0_sq() == 0.0) {
		// Uncoupled excited state: the root at s = 0 carries unit residue and the
		// pair -lambda +- i g is cancelled by the numerator, even when g = 0 makes
		// it a double root.
		int zero = 0;
		for (int i = 1; i < 3; ++i)
			if (std::abs(roots_.roots[i]) < std::abs(roots_.roots[zero]))
				zero = i;
		roots_.roots[zero] = 0.0;
		for (int i = 0; i < 3; ++i)
			residues_[i] = (i == zero) ? 1.0 : 0.0;
		return;
	}
	// Start at one part in 1e9 and widen until the roots separate.
	double relative = 1e-9;
	while (roots_.degenerate && relative < 1e-3) {
		effective_ = params_.with_gamma(params_.gamma() * (1.0 + relative));
		roots_ = solve_cubic(effective_);
		perturbed_ = true;
		relative *= 10.0;
	}
	residues_ = residues(roots_, effective_);
}

complex_t GreenFunction::operator()(double t) const
{
	complex_t sum(0.0, 0.0);
	for (int i = 0; i < 3; ++i)
		sum += residues_[i] * std::exp(roots_.roots[i] * t);
	return sum;
}

AmplitudeSet GreenFunction::amplitudes(double t, complex_t alpha0, complex_t beta0,
                                       complex_t mu0) const
{
	const auto [beta, mu] = lower_amplitudes(t, beta0, mu0, params_);
	return {alpha0 * (*this)(t), beta, mu, t};
}

std::optional<double> decay_time(const GreenFunction& green, double threshold, double t_limit)
{
	const auto& p = green.params();
	const double step = 0.05 / (p.lambda() + p.g() + std::sqrt(p.omega0_sq()));
	auto below = [&](double t) { return std::norm(green(t)) < threshold; };

	if (below(0.0))
		return 0.0;
	double lo = 0.0;
	for (long k = 1;; ++k) {
		const double hi = std::min(k * step, t_limit);
		if (below(hi)) {
			double a = lo, b = hi;
			for (int it = 0; it < 60; ++it) {
				const double mid = 0.5 * (a + b);
				(below(mid) ? b : a) = mid;
			}
			return b;
		}
		if (hi >= t_limit)
			return std::nullopt;
		lo = hi;
	}
}

} // namespace zeno
