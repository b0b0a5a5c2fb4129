#pragma once

#include <string>

namespace zeno {

// Physical parameters of the three-level model. All rates are in units of the
// Lorentzian width lambda; in practice lambda = 1 and times are lambda*t.
class ModelParams
{
public:
	ModelParams(double lambda, double gamma, double g, double delta0 = 0.0);

	double lambda() const { return lambda_; }
	double gamma() const { return gamma_; }
	double g() const { return g_; }
	double delta0() const { return delta0_; }

	// Omega_0^2 = lambda * gamma / 2, always derived from lambda and gamma.
	double omega0_sq() const { return 0.5 * lambda_ * gamma_; }

	ModelParams with_gamma(double gamma) const { return {lambda_, gamma, g_, delta0_}; }
	ModelParams with_g(double g) const { return {lambda_, gamma_, g, delta0_}; }

private:
	double lambda_;
	double gamma_;
	double g_;
	double delta0_;
};

enum class CavityTag { Good, Bad, Custom };

struct CavityRegime
{
	CavityTag tag;
	double ratio; // gamma / lambda

	static CavityRegime good() { return {CavityTag::Good, 10.0}; }
	static CavityRegime bad() { return {CavityTag::Bad, 0.1}; }
	static CavityRegime custom(double ratio);

	ModelParams params(double g_over_lambda, double lambda = 1.0) const
	{
		return {lambda, ratio * lambda, g_over_lambda * lambda};
	}
};

std::string to_string(CavityTag tag);

// J(w) = Omega_0^2 lambda / (pi ((w - Delta_0)^2 + lambda^2))
double lorentzian_density(double omega, const ModelParams& p);

// f(tau) = Omega_0^2 exp(-lambda |tau|), the bath correlation function of J.
double memory_kernel(double tau, const ModelParams& p);

// F(tau) = f(tau) cos(g tau), the kernel seen by the excited-state amplitude.
double dressed_kernel(double tau, const ModelParams& p);

} // namespace zeno
