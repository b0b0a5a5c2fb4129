#pragma once

#include <array>
#include <complex>
#include <optional>
#include <utility>

#include "zeno/model.hpp"

namespace zeno {

using complex_t = std::complex<double>;

// Roots of s^3 + 2 lambda s^2 + (lambda^2 + Omega_0^2 + g^2) s + Omega_0^2 lambda,
// the denominator of the Laplace-transformed excited-state amplitude.
// Ordered by real part descending, then imaginary part ascending.
struct CubicRoots
{
	std::array<complex_t, 3> roots;
	bool degenerate = false; // min pairwise separation below 1e-6 lambda
};

inline constexpr double kRootSeparationTolerance = 1e-6;

CubicRoots solve_cubic(const ModelParams& p);

// Value of the cubic at s, used for residual checks.
complex_t denominator_cubic(complex_t s, const ModelParams& p);

// G(t) = sum_i [(s_i + lambda)^2 + g^2] e^{s_i t} / prod_{j != i} (s_i - s_j).
// Throws DegenerateRoots when r.degenerate is set.
complex_t green_function(double t, const CubicRoots& r, const ModelParams& p);

// Closed-form Rabi rotation of the lower levels:
// beta(t) = beta0 cos gt - i mu0 sin gt, mu(t) = mu0 cos gt - i beta0 sin gt.
std::pair<complex_t, complex_t> lower_amplitudes(double t, complex_t beta0, complex_t mu0,
                                                 const ModelParams& p);

struct AmplitudeSet
{
	complex_t alpha;
	complex_t beta;
	complex_t mu;
	double time;
};

// Excited-state Green function with the residues precomputed. When the roots
// for p are degenerate, gamma is nudged by one part in 1e9 until they separate;
// exact double-root parameter sets are therefore handled by perturbation.
class GreenFunction
{
public:
	explicit GreenFunction(const ModelParams& p);

	complex_t operator()(double t) const;

	const CubicRoots& roots() const { return roots_; }
	const ModelParams& params() const { return params_; }
	// Parameters actually used for the residues (differs from params() only
	// after a degeneracy perturbation).
	const ModelParams& effective_params() const { return effective_; }
	bool perturbed() const { return perturbed_; }

	AmplitudeSet amplitudes(double t, complex_t alpha0, complex_t beta0, complex_t mu0) const;

private:
	ModelParams params_;
	ModelParams effective_;
	CubicRoots roots_;
	std::array<complex_t, 3> residues_{};
	bool perturbed_ = false;
};

// First time at which |G(t)|^2 drops below threshold, located by a forward
// scan refined with bisection. Empty if not reached before t_limit.
std::optional<double> decay_time(const GreenFunction& green, double threshold = 0.5,
                                 double t_limit = 1e4);

} // namespace zeno
