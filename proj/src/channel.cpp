#include "zeno/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zeno/errors.hpp"

namespace zeno {

double Matrix3::hermiticity_error() const
{
	double err = 0.0;
	for (int i = 0; i < 3; ++i)
		for (int j = i; j < 3; ++j)
			err = std::max(err, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
	return err;
}

Matrix3 Matrix3::operator-(const Matrix3& o) const
{
	Matrix3 r;
	for (int i = 0; i < 9; ++i)
		r.m_[i] = m_[i] - o.m_[i];
	return r;
}

Matrix3 Matrix3::operator+(const Matrix3& o) const
{
	Matrix3 r;
	for (int i = 0; i < 9; ++i)
		r.m_[i] = m_[i] + o.m_[i];
	return r;
}

Matrix3 Matrix3::operator*(double s) const
{
	Matrix3 r;
	for (int i = 0; i < 9; ++i)
		r.m_[i] = s * m_[i];
	return r;
}

Matrix3 Matrix3::from_array(const std::array<complex_t, 9>& entries)
{
	Matrix3 r;
	r.m_ = entries;
	return r;
}

std::array<double, 3> hermitian_eigenvalues(const Matrix3& m)
{
	const double q = (m(0, 0).real() + m(1, 1).real() + m(2, 2).real()) / 3.0;
	const double b00 = m(0, 0).real() - q;
	const double b11 = m(1, 1).real() - q;
	const double b22 = m(2, 2).real() - q;
	const complex_t b01 = m(0, 1), b02 = m(0, 2), b12 = m(1, 2);

	const double off = std::norm(b01) + std::norm(b02) + std::norm(b12);
	const double p2 = (b00 * b00 + b11 * b11 + b22 * b22 + 2.0 * off) / 6.0;
	if (p2 == 0.0)
		return {q, q, q};
	const double p = std::sqrt(p2);

	// det of the traceless shift B = m - q I
	const double det = b00 * b11 * b22 + 2.0 * (b01 * b12 * std::conj(b02)).real()
	                   - b00 * std::norm(b12) - b11 * std::norm(b02) - b22 * std::norm(b01);
	const double r = std::clamp(det / (2.0 * p2 * p), -1.0, 1.0);
	const double phi = std::acos(r) / 3.0;

	// roots of x^3 - 3 p2 x - det = 0
	auto polish = [&](double x) {
		for (int it = 0; it < 2; ++it) {
			const double f = (x * x - 3.0 * p2) * x - det;
			const double df = 3.0 * (x * x - p2);
			if (df == 0.0)
				break;
			const double next = x - f / df;
			if (!(std::abs((next * next - 3.0 * p2) * next - det) < std::abs(f)))
				break;
			x = next;
		}
		return x;
	};
	const double x1 = polish(2.0 * p * std::cos(phi));
	const double x3 = polish(2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0));
	const double x2 = -x1 - x3;
	std::array<double, 3> e{q + x1, q + x2, q + x3};
	std::sort(e.begin(), e.end(), std::greater<>());
	return e;
}

bool is_density_matrix(const Matrix3& m, double tol_herm, double tol_trace, double tol_psd)
{
	if (m.hermiticity_error() > tol_herm)
		return false;
	if (std::abs(m.trace() - 1.0) > tol_trace)
		return false;
	return hermitian_eigenvalues(m)[2] >= -tol_psd;
}

BlochDirection::BlochDirection(double x, double y, double z) : r_{x, y, z}
{
	const double norm = std::sqrt(x * x + y * y + z * z);
	if (!(std::abs(norm - 1.0) <= 1e-12))
		throw Error("BlochDirection: vector must have unit norm");
}

BlochDirection BlochDirection::normalized(double x, double y, double z)
{
	const double norm = std::sqrt(x * x + y * y + z * z);
	if (!(norm > 0.0) || !std::isfinite(norm))
		throw Error("BlochDirection: cannot normalize a zero vector");
	return {x / norm, y / norm, z / norm};
}

BlockState BlockState::from_bloch(double x, double y, double z)
{
	return {0.5 * (1.0 + z), complex_t(0.5 * x, -0.5 * y), 0.5 * (1.0 - z)};
}

void BlockState::validate() const
{
	if (!std::isfinite(p_aa) || !std::isfinite(p_bb) || !std::isfinite(std::abs(p_ab)))
		throw InvalidInitialState("initial state has non-finite entries");
	if (std::abs(p_aa + p_bb - 1.0) > 1e-10)
		throw InvalidInitialState("initial state must have unit trace");
	if (p_aa < -1e-12 || p_bb < -1e-12 || std::norm(p_ab) > p_aa * p_bb + 1e-12)
		throw InvalidInitialState("initial state must be positive semidefinite");
}

BlockState mix(const BlockState& s1, const BlockState& s2, double weight1)
{
	const double w2 = 1.0 - weight1;
	return {weight1 * s1.p_aa + w2 * s2.p_aa, weight1 * s1.p_ab + w2 * s2.p_ab,
	        weight1 * s1.p_bb + w2 * s2.p_bb};
}

ChannelCoefficients::ChannelCoefficients(const ModelParams& p, const TimeGrid& grid,
                                         const ChannelOptions& opts)
	: green_(p), grid_(grid)
{
	green_values_ = sample_green(grid_, green_);
	cos_.resize(grid_.size());
	sin_.resize(grid_.size());
	for (std::size_t k = 0; k < grid_.size(); ++k) {
		cos_[k] = std::cos(p.g() * grid_.time(k));
		sin_[k] = std::sin(p.g() * grid_.time(k));
	}
	moments_ = bath_moments_extrapolated(grid_, green_, opts.romberg_levels, opts.quadrature);
}

namespace {

DensityMatrix3 apply_channel(const BlockState& s, const ChannelCoefficients& coeffs, std::size_t k)
{
	const complex_t i(0.0, 1.0);
	const complex_t G = coeffs.green(k);
	const double c = coeffs.cos_gt(k);
	const double sn = coeffs.sin_gt(k);
	const BathMoments& bm = coeffs.moments(k);

	DensityMatrix3 rho;
	rho(0, 0) = std::norm(G) * s.p_aa;
	rho(0, 1) = G * c * s.p_ab;
	rho(0, 2) = i * G * sn * s.p_ab;
	rho(1, 1) = c * c * s.p_bb + bm.pop_b * s.p_aa;
	rho(2, 2) = sn * sn * s.p_bb + bm.pop_m * s.p_aa;
	rho(1, 2) = i * c * sn * s.p_bb + bm.coh_bm * s.p_aa;
	rho(1, 0) = std::conj(rho(0, 1));
	rho(2, 0) = std::conj(rho(0, 2));
	rho(2, 1) = std::conj(rho(1, 2));
	return rho;
}

} // namespace

DensityMatrix3 evolve_state(const BlockState& rho0, const ChannelCoefficients& coeffs, std::size_t k)
{
	rho0.validate();
	if (k >= coeffs.size())
		throw Error("evolve_state: grid index out of range");
	return apply_channel(rho0, coeffs, k);
}

double trace_distance(const Matrix3& rho1, const Matrix3& rho2)
{
	const auto e = hermitian_eigenvalues(rho1 - rho2);
	return 0.5 * (std::abs(e[0]) + std::abs(e[1]) + std::abs(e[2]));
}

std::vector<double> trace_distance_trajectory(const BlochDirection& dir,
                                              const ChannelCoefficients& coeffs)
{
	const auto plus = BlockState::from_bloch(dir.x(), dir.y(), dir.z());
	const auto minus = BlockState::from_bloch(-dir.x(), -dir.y(), -dir.z());
	std::vector<double> out(coeffs.size());
	for (std::size_t k = 0; k < coeffs.size(); ++k)
		out[k] = trace_distance(apply_channel(plus, coeffs, k), apply_channel(minus, coeffs, k));
	return out;
}

} // namespace zeno
