#include "zeno/bath_integrals.hpp"

#include <array>
#include <cmath>

#include "zeno/errors.hpp"

namespace zeno {

TimeGrid::TimeGrid(double t_max, std::size_t n) : t_max_(t_max), n_(n)
{
	if (n < 2)
		throw GridTooCoarse("TimeGrid: need at least 2 points");
	if (!(t_max >= 0.0) || !std::isfinite(t_max))
		throw Error("TimeGrid: t_max must be nonnegative and finite");
}

std::vector<complex_t> sample_green(const TimeGrid& grid, const GreenFunction& green)
{
	std::vector<complex_t> out(grid.size());
	for (std::size_t k = 0; k < grid.size(); ++k)
		out[k] = green(grid.time(k));
	return out;
}

namespace {

DoubleIntegrals bruteforce_unchecked(double t, std::span<const complex_t> green, const ModelParams& p)
{
	DoubleIntegrals out;
	const std::size_t n = green.size();
	if (n < 2 || t == 0.0)
		return out;
	const double h = t / static_cast<double>(n - 1);

	std::vector<double> kernel(n);
	for (std::size_t d = 0; d < n; ++d)
		kernel[d] = memory_kernel(h * static_cast<double>(d), p);

	std::vector<complex_t> uc(n), us(n);
	for (std::size_t k = 0; k < n; ++k) {
		const double weight = (k == 0 || k == n - 1) ? 0.5 : 1.0;
		const double phase = p.g() * (t - h * static_cast<double>(k));
		uc[k] = weight * green[k] * std::cos(phase);
		us[k] = weight * green[k] * std::sin(phase);
	}

	for (std::size_t k = 0; k < n; ++k) {
		for (std::size_t l = 0; l < n; ++l) {
			const double K = kernel[k > l ? k - l : l - k];
			const complex_t cl = std::conj(uc[l]);
			const complex_t sl = std::conj(us[l]);
			out.cos_cos += K * uc[k] * cl;
			out.sin_sin += K * us[k] * sl;
			out.cos_sin += K * uc[k] * sl;
			out.sin_cos += K * us[k] * cl;
		}
	}
	const double h2 = h * h;
	out.cos_cos *= h2;
	out.sin_sin *= h2;
	out.cos_sin *= h2;
	out.sin_cos *= h2;
	return out;
}

BathMoments to_moments(const DoubleIntegrals& d, double t)
{
	return {d.cos_cos.real(), d.sin_sin.real(), complex_t(0.0, 1.0) * d.cos_sin, t};
}

} // namespace

DoubleIntegrals double_integrals_bruteforce(double t, std::span<const complex_t> green,
                                            const ModelParams& p)
{
	if (green.size() < kMinBruteForcePoints)
		throw GridTooCoarse("bath_moments_bruteforce: need at least 64 grid points");
	if (!(t >= 0.0))
		throw Error("bath_moments_bruteforce: t must be nonnegative");
	return bruteforce_unchecked(t, green, p);
}

BathMoments bath_moments_bruteforce(double t, std::span<const complex_t> green, const ModelParams& p)
{
	return to_moments(double_integrals_bruteforce(t, green, p), t);
}

std::vector<BathMoments> bath_moments_bruteforce_grid(const TimeGrid& grid,
                                                      std::span<const complex_t> green,
                                                      const ModelParams& p)
{
	if (grid.size() < kMinBruteForcePoints)
		throw GridTooCoarse("bath_moments_bruteforce: need at least 64 grid points");
	std::vector<BathMoments> out(grid.size());
	for (std::size_t k = 0; k < grid.size(); ++k)
		out[k] = to_moments(bruteforce_unchecked(grid.time(k), green.first(k + 1), p), grid.time(k));
	return out;
}

namespace {

// 2x2 complex matrix, row-major.
using Mat2 = std::array<complex_t, 4>;
using Vec2 = std::array<complex_t, 2>;

// m += s * (x y^dagger + y x^dagger)
void add_sym(Mat2& m, const Vec2& x, const Vec2& y, double s)
{
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			m[2 * i + j] += s * (x[i] * std::conj(y[j]) + y[i] * std::conj(x[j]));
}

// m += s * x x^dagger
void add_outer(Mat2& m, const Vec2& x, double s)
{
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			m[2 * i + j] += s * x[i] * std::conj(x[j]);
}

// u^T m v for real u, v
complex_t form(const Mat2& m, double u0, double u1, double v0, double v1)
{
	return u0 * (m[0] * v0 + m[1] * v1) + u1 * (m[2] * v0 + m[3] * v1);
}

} // namespace

std::vector<BathMoments> bath_moments_fast(const TimeGrid& grid, std::span<const complex_t> green,
                                           const ModelParams& p)
{
	const std::size_t n = grid.size();
	if (green.size() != n)
		throw Error("bath_moments_fast: Green function samples do not match the grid");

	// With w_k = G_k (cos g t_k, sin g t_k), cos(g(t - t_k)) G_k = a(t).w_k and
	// sin(g(t - t_k)) G_k = b(t).w_k, where a = (cos gt, sin gt) and
	// b = (sin gt, -cos gt). All four integrals are quadratic forms of
	//   M(t_n) = h^2 sum_{k,l<=n} c_k c_l K(t_k - t_l) w_k w_l^dagger.
	// Splitting k = l, l < k and l > k, the off-diagonal part only needs the
	// damped running sum A_k = sum_{l<k} c_l e^{-lambda (t_k - t_l)} w_l.
	const double h = grid.step();
	const double decay = std::exp(-p.lambda() * h);
	const double scale = p.omega0_sq() * h * h;

	std::vector<BathMoments> out(n);
	Mat2 running{};
	Vec2 damped{};
	for (std::size_t k = 0; k < n; ++k) {
		const double t = grid.time(k);
		const double gc = std::cos(p.g() * t);
		const double gs = std::sin(p.g() * t);
		const Vec2 w{green[k] * gc, green[k] * gs};

		out[k].time = t;
		if (k > 0) {
			// endpoint k carries trapezoid weight 1/2
			Mat2 m = running;
			add_outer(m, w, 0.25);
			add_sym(m, w, damped, 0.5);
			const complex_t cc = scale * form(m, gc, gs, gc, gs);
			const complex_t ss = scale * form(m, gs, -gc, gs, -gc);
			const complex_t cs = scale * form(m, gc, gs, gs, -gc);
			out[k].pop_b = cc.real();
			out[k].pop_m = ss.real();
			out[k].coh_bm = complex_t(0.0, 1.0) * cs;
		}

		const double c = (k == 0) ? 0.5 : 1.0;
		add_outer(running, w, c * c);
		add_sym(running, w, damped, c);
		damped = {decay * (damped[0] + c * w[0]), decay * (damped[1] + c * w[1])};
	}
	return out;
}

std::vector<BathMoments> bath_moments_extrapolated(const TimeGrid& grid, const GreenFunction& green,
                                                   int levels, Quadrature method)
{
	if (levels < 1)
		throw Error("bath_moments_extrapolated: levels must be at least 1");
	const auto& p = green.effective_params();

	// tables[m] holds the trapezoid moments on the 2^m-refined grid, sampled
	// back onto the coarse grid points.
	std::vector<std::vector<BathMoments>> tables;
	for (int m = 0; m < levels; ++m) {
		const std::size_t factor = std::size_t{1} << m;
		const TimeGrid fine = grid.refined(factor);
		const auto samples = sample_green(fine, green);
		auto full = (method == Quadrature::Fast) ? bath_moments_fast(fine, samples, p)
		                                         : bath_moments_bruteforce_grid(fine, samples, p);
		std::vector<BathMoments> coarse(grid.size());
		for (std::size_t k = 0; k < grid.size(); ++k) {
			coarse[k] = full[k * factor];
			coarse[k].time = grid.time(k);
		}
		tables.push_back(std::move(coarse));
	}

	// Richardson on the h^2, h^4, ... error terms, in place: after pass j,
	// tables[m] (m >= j) holds the order-2(j+1) estimate.
	for (int j = 1; j < levels; ++j) {
		const double f = 1.0 / (std::pow(4.0, j) - 1.0);
		for (int m = levels - 1; m >= j; --m) {
			auto& hi = tables[m];
			const auto& lo = tables[m - 1];
			for (std::size_t k = 0; k < grid.size(); ++k) {
				hi[k].pop_b += f * (hi[k].pop_b - lo[k].pop_b);
				hi[k].pop_m += f * (hi[k].pop_m - lo[k].pop_m);
				hi[k].coh_bm += f * (hi[k].coh_bm - lo[k].coh_bm);
			}
		}
	}
	return std::move(tables.back());
}

} // namespace zeno
