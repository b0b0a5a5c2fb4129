#include "zeno/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zeno/errors.hpp"

namespace zeno {

double DiscretizedBath::coupling_weight() const
{
	double sum = 0.0;
	for (double c : couplings)
		sum += c * c;
	return sum;
}

double DiscretizedBath::recurrence_time() const
{
	return 2.0 * std::numbers::pi / spacing;
}

DiscretizedBath discretize_bath(const ModelParams& p, std::size_t n_modes, double window_halfwidth)
{
	if (n_modes < kMinModes)
		throw Error("discretize_bath: need at least 100 modes");
	if (!(window_halfwidth >= 20.0 * p.lambda()))
		throw WindowTooNarrow("discretize_bath: window half-width must be at least 20 lambda");

	DiscretizedBath bath;
	bath.spacing = 2.0 * window_halfwidth / static_cast<double>(n_modes);
	bath.mode_freqs.resize(n_modes);
	bath.couplings.resize(n_modes);
	for (std::size_t j = 0; j < n_modes; ++j) {
		const double w = p.delta0() - window_halfwidth + (static_cast<double>(j) + 0.5) * bath.spacing;
		bath.mode_freqs[j] = w;
		bath.couplings[j] = std::sqrt(lorentzian_density(w, p) * bath.spacing);
	}
	return bath;
}

FullState FullState::initial(std::size_t n_modes, complex_t alpha0, complex_t beta0, complex_t mu0)
{
	FullState s;
	s.alpha = alpha0;
	s.beta = beta0;
	s.mu = mu0;
	s.beta_j.assign(n_modes, complex_t{});
	s.mu_j.assign(n_modes, complex_t{});
	return s;
}

double FullState::norm() const
{
	double sum = std::norm(alpha) + std::norm(beta) + std::norm(mu);
	for (std::size_t j = 0; j < beta_j.size(); ++j)
		sum += std::norm(beta_j[j]) + std::norm(mu_j[j]);
	return sum;
}

DensityMatrix3 OracleSample::reduced_density() const
{
	DensityMatrix3 rho;
	rho(0, 0) = std::norm(alpha);
	rho(0, 1) = alpha * std::conj(beta);
	rho(0, 2) = alpha * std::conj(mu);
	rho(1, 1) = std::norm(beta) + pop_b;
	rho(1, 2) = beta * std::conj(mu) + coh_bm;
	rho(2, 2) = std::norm(mu) + pop_m;
	rho(1, 0) = std::conj(rho(0, 1));
	rho(2, 0) = std::conj(rho(0, 2));
	rho(2, 1) = std::conj(rho(1, 2));
	return rho;
}

double default_oracle_step(const ModelParams& p)
{
	return 0.001 / std::max({p.lambda(), p.g(), p.gamma()});
}

namespace {

// The mode amplitudes are integrated in the frame b_j = e^{-i d_j t} beta_j,
// d_j = w_j - delta0, which removes the explicit time dependence:
//   alpha' = -i sum_j g_j b_j
//   b_j'   = -i d_j b_j - i g_j alpha - i g m_j
//   m_j'   = -i d_j m_j - i g b_j
//   beta'  = -i g mu,  mu' = -i g beta
// |b_j| = |beta_j| and b_j m_j^* = beta_j mu_j^*, so every reduced quantity
// is frame independent.
struct Rhs
{
	const std::vector<double>& detuning;
	const std::vector<double>& coupling;
	double g;

	// -i z
	static complex_t mi(complex_t z) { return {z.imag(), -z.real()}; }

	void operator()(const FullState& y, FullState& dy) const
	{
		const std::size_t n = detuning.size();
		double sr = 0.0, si = 0.0;
		for (std::size_t j = 0; j < n; ++j) {
			sr += coupling[j] * y.beta_j[j].real();
			si += coupling[j] * y.beta_j[j].imag();
		}
		dy.alpha = mi({sr, si});
		dy.beta = mi(g * y.mu);
		dy.mu = mi(g * y.beta);
		const complex_t a = y.alpha;
		for (std::size_t j = 0; j < n; ++j) {
			const complex_t b = y.beta_j[j];
			const complex_t m = y.mu_j[j];
			dy.beta_j[j] = mi(detuning[j] * b + coupling[j] * a + g * m);
			dy.mu_j[j] = mi(detuning[j] * m + g * b);
		}
	}
};

// out = y + h * dy
void axpy(FullState& out, const FullState& y, double h, const FullState& dy)
{
	out.alpha = y.alpha + h * dy.alpha;
	out.beta = y.beta + h * dy.beta;
	out.mu = y.mu + h * dy.mu;
	for (std::size_t j = 0; j < y.beta_j.size(); ++j) {
		out.beta_j[j] = y.beta_j[j] + h * dy.beta_j[j];
		out.mu_j[j] = y.mu_j[j] + h * dy.mu_j[j];
	}
}

OracleSample reduce(const FullState& s, double t)
{
	OracleSample out;
	out.time = t;
	out.alpha = s.alpha;
	out.beta = s.beta;
	out.mu = s.mu;
	for (std::size_t j = 0; j < s.beta_j.size(); ++j) {
		out.pop_b += std::norm(s.beta_j[j]);
		out.pop_m += std::norm(s.mu_j[j]);
		out.coh_bm += s.beta_j[j] * std::conj(s.mu_j[j]);
	}
	out.norm = std::norm(s.alpha) + std::norm(s.beta) + std::norm(s.mu) + out.pop_b + out.pop_m;
	return out;
}

// interaction-picture amplitudes from the rotating-frame ones
FullState to_interaction(const FullState& s, double t, const std::vector<double>& detuning)
{
	FullState out = s;
	for (std::size_t j = 0; j < detuning.size(); ++j) {
		const complex_t phase = std::polar(1.0, detuning[j] * t);
		out.beta_j[j] *= phase;
		out.mu_j[j] *= phase;
	}
	return out;
}

} // namespace

OracleTrajectory integrate_full(const DiscretizedBath& bath, const ModelParams& p,
                                const FullState& initial, const TimeGrid& output, double step)
{
	const std::size_t n = bath.count();
	if (initial.beta_j.size() != n || initial.mu_j.size() != n)
		throw Error("integrate_full: initial state does not match the bath size");
	if (!(step > 0.0))
		throw Error("integrate_full: step must be positive");

	std::vector<double> detuning(n);
	for (std::size_t j = 0; j < n; ++j)
		detuning[j] = bath.mode_freqs[j] - p.delta0();
	const Rhs rhs{detuning, bath.couplings, p.g()};

	const double norm0 = initial.norm();
	const double h_out = output.step();
	const auto substeps = static_cast<std::size_t>(std::max(1.0, std::ceil(h_out / step - 1e-9)));
	const double h = h_out / static_cast<double>(substeps);

	OracleTrajectory traj;
	traj.samples.reserve(output.size());

	// initial state is the same in both frames at t = 0
	FullState y = initial;
	FullState k1 = y, k2 = y, k3 = y, k4 = y, tmp = y;
	traj.samples.push_back(reduce(y, 0.0));

	for (std::size_t k = 1; k < output.size(); ++k) {
		for (std::size_t s = 0; s < substeps; ++s) {
			rhs(y, k1);
			axpy(tmp, y, 0.5 * h, k1);
			rhs(tmp, k2);
			axpy(tmp, y, 0.5 * h, k2);
			rhs(tmp, k3);
			axpy(tmp, y, h, k3);
			rhs(tmp, k4);

			const double w = h / 6.0;
			y.alpha += w * (k1.alpha + 2.0 * k2.alpha + 2.0 * k3.alpha + k4.alpha);
			y.beta += w * (k1.beta + 2.0 * k2.beta + 2.0 * k3.beta + k4.beta);
			y.mu += w * (k1.mu + 2.0 * k2.mu + 2.0 * k3.mu + k4.mu);
			for (std::size_t j = 0; j < n; ++j) {
				y.beta_j[j] += w * (k1.beta_j[j] + 2.0 * k2.beta_j[j] + 2.0 * k3.beta_j[j] + k4.beta_j[j]);
				y.mu_j[j] += w * (k1.mu_j[j] + 2.0 * k2.mu_j[j] + 2.0 * k3.mu_j[j] + k4.mu_j[j]);
			}
		}
		auto sample = reduce(y, output.time(k));
		const double drift = std::abs(sample.norm - norm0);
		traj.max_norm_drift = std::max(traj.max_norm_drift, drift);
		if (!(drift <= kNormDriftLimit))
			throw NormDrift("integrate_full: norm drifted by " + std::to_string(drift)
			                    + " at t = " + std::to_string(output.time(k)) + "; reduce the step",
			                drift);
		traj.samples.push_back(sample);
	}
	traj.final_state = to_interaction(y, output.t_max(), detuning);
	return traj;
}

} // namespace zeno
