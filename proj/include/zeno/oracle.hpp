#pragma once

#include <cstddef>
#include <vector>

#include "zeno/bath_integrals.hpp"
#include "zeno/channel.hpp"
#include "zeno/model.hpp"

namespace zeno {

// Lorentzian bath replaced by N modes on a uniform midpoint grid over
// [delta0 - W, delta0 + W], with g_j = sqrt(J(w_j) dw).
struct DiscretizedBath
{
	std::vector<double> mode_freqs;
	std::vector<double> couplings;
	double spacing = 0.0;

	std::size_t count() const { return mode_freqs.size(); }
	double coupling_weight() const; // sum_j g_j^2
	// 2 pi / dw: beyond this the discrete bath revives.
	double recurrence_time() const;
};

inline constexpr std::size_t kMinModes = 100;

// Throws WindowTooNarrow for W < 20 lambda.
DiscretizedBath discretize_bath(const ModelParams& p, std::size_t n_modes = 2000,
                                double window_halfwidth = 50.0);

// Full one-excitation wavefunction in the interaction picture.
struct FullState
{
	complex_t alpha{};
	complex_t beta{};
	complex_t mu{};
	std::vector<complex_t> beta_j;
	std::vector<complex_t> mu_j;

	static FullState initial(std::size_t n_modes, complex_t alpha0, complex_t beta0, complex_t mu0 = {});
	double norm() const;
};

// Reduced quantities of a FullState, with the bath sums taken directly over
// the mode amplitudes.
struct OracleSample
{
	double time = 0.0;
	complex_t alpha{};
	complex_t beta{};
	complex_t mu{};
	double pop_b = 0.0;  // sum_j |beta_j|^2
	double pop_m = 0.0;  // sum_j |mu_j|^2
	complex_t coh_bm{}; // sum_j beta_j mu_j^*
	double norm = 1.0;

	DensityMatrix3 reduced_density() const;
};

struct OracleTrajectory
{
	std::vector<OracleSample> samples; // one per output grid point
	FullState final_state;
	double max_norm_drift = 0.0;
};

inline constexpr double kNormDriftLimit = 1e-5;

// Default RK4 step: 0.001 / max(lambda, g, gamma).
double default_oracle_step(const ModelParams& p);

// Fixed-step classical RK4 of the 3 + 2N amplitude equations. The output grid
// step is split into ceil(h_out / step) substeps. Throws NormDrift once the
// norm deviates from its initial value by more than 1e-5.
OracleTrajectory integrate_full(const DiscretizedBath& bath, const ModelParams& p,
                                const FullState& initial, const TimeGrid& output, double step);

} // namespace zeno
