#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "zeno/amplitudes.hpp"
#include "zeno/model.hpp"

namespace zeno {

// Uniform grid t_k = k * t_max / (n - 1), k = 0..n-1.
class TimeGrid
{
public:
	TimeGrid(double t_max, std::size_t n);

	double t_max() const { return t_max_; }
	std::size_t size() const { return n_; }
	double step() const { return t_max_ / static_cast<double>(n_ - 1); }
	double time(std::size_t k) const { return t_max_ * static_cast<double>(k) / static_cast<double>(n_ - 1); }

	// The same interval with each step split into `factor` pieces.
	TimeGrid refined(std::size_t factor) const { return {t_max_, (n_ - 1) * factor + 1}; }

private:
	double t_max_;
	std::size_t n_;
};

// Bath sums for an initially excited state (alpha0 = 1); scale by |alpha0|^2.
struct BathMoments
{
	double pop_b = 0.0;   // sum_j |beta_j|^2
	double pop_m = 0.0;   // sum_j |mu_j|^2
	complex_t coh_bm{};   // sum_j beta_j mu_j^*
	double time = 0.0;
};

// The double integrals
//   Omega_0^2 int int e^{-lambda|t1-t2|} alpha(t1) alpha^*(t2) X(g(t-t1)) Y(g(t-t2))
// for (X, Y) = (cos, cos), (sin, sin), (cos, sin), (sin, cos).
// The bath coherence is coh_bm = i * cos_sin.
struct DoubleIntegrals
{
	complex_t cos_cos{};
	complex_t sin_sin{};
	complex_t cos_sin{};
	complex_t sin_cos{};
};

inline constexpr std::size_t kMinBruteForcePoints = 64;

// O(n^2) trapezoid evaluation directly from the double-integral definitions.
// `green` holds G on a uniform grid spanning [0, t] (at least 64 points).
DoubleIntegrals double_integrals_bruteforce(double t, std::span<const complex_t> green,
                                            const ModelParams& p);
BathMoments bath_moments_bruteforce(double t, std::span<const complex_t> green,
                                    const ModelParams& p);

// Brute force at every grid point, O(n^3). Test and small-grid use only.
std::vector<BathMoments> bath_moments_bruteforce_grid(const TimeGrid& grid,
                                                      std::span<const complex_t> green,
                                                      const ModelParams& p);

// Same trapezoid sums as the brute force, reorganized into running sums:
// O(n) for the whole grid.
std::vector<BathMoments> bath_moments_fast(const TimeGrid& grid, std::span<const complex_t> green,
                                           const ModelParams& p);

enum class Quadrature { Fast, BruteForce };

// Trapezoid moments on `grid` extrapolated with `levels` Romberg levels
// (grids refined by 1, 2, 4, ...). levels = 1 is the plain trapezoid table.
std::vector<BathMoments> bath_moments_extrapolated(const TimeGrid& grid, const GreenFunction& green,
                                                   int levels = 3,
                                                   Quadrature method = Quadrature::Fast);

std::vector<complex_t> sample_green(const TimeGrid& grid, const GreenFunction& green);

} // namespace zeno
