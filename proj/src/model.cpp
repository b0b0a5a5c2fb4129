#include "zeno/model.hpp"

#include <cmath>
#include <numbers>

#include "zeno/errors.hpp"

namespace zeno {

ModelParams::ModelParams(double lambda, double gamma, double g, double delta0)
	: lambda_(lambda), gamma_(gamma), g_(g), delta0_(delta0)
{
	if (!(lambda > 0.0) || !std::isfinite(lambda))
		throw Error("ModelParams: lambda must be positive and finite");
	if (!(gamma >= 0.0) || !std::isfinite(gamma))
		throw Error("ModelParams: gamma must be nonnegative and finite");
	if (!(g >= 0.0) || !std::isfinite(g))
		throw Error("ModelParams: g must be nonnegative and finite");
	if (!std::isfinite(delta0))
		throw Error("ModelParams: delta0 must be finite");
}

CavityRegime CavityRegime::custom(double ratio)
{
	if (!(ratio >= 0.0) || !std::isfinite(ratio))
		throw Error("CavityRegime: gamma/lambda must be nonnegative");
	return {CavityTag::Custom, ratio};
}

std::string to_string(CavityTag tag)
{
	switch (tag) {
	case CavityTag::Good: return "good";
	case CavityTag::Bad: return "bad";
	case CavityTag::Custom: return "custom";
	}
	return "custom";
}

double lorentzian_density(double omega, const ModelParams& p)
{
	const double d = omega - p.delta0();
	const double l = p.lambda();
	return p.omega0_sq() * l / (std::numbers::pi * (d * d + l * l));
}

double memory_kernel(double tau, const ModelParams& p)
{
	return p.omega0_sq() * std::exp(-p.lambda() * std::abs(tau));
}

double dressed_kernel(double tau, const ModelParams& p)
{
	return memory_kernel(tau, p) * std::cos(p.g() * tau);
}

} // namespace zeno
