#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "zeno/amplitudes.hpp"
#include "zeno/bath_integrals.hpp"
#include "zeno/model.hpp"

namespace zeno {

// Complex 3x3 matrix over the basis (|a>, |b>, |m>), row-major.
class Matrix3
{
public:
	Matrix3() = default;

	complex_t& operator()(int i, int j) { return m_[3 * i + j]; }
	const complex_t& operator()(int i, int j) const { return m_[3 * i + j]; }

	complex_t trace() const { return m_[0] + m_[4] + m_[8]; }
	double hermiticity_error() const;

	Matrix3 operator-(const Matrix3& o) const;
	Matrix3 operator+(const Matrix3& o) const;
	Matrix3 operator*(double s) const;

	static Matrix3 from_array(const std::array<complex_t, 9>& entries);
	const std::array<complex_t, 9>& data() const { return m_; }

private:
	std::array<complex_t, 9> m_{};
};

using DensityMatrix3 = Matrix3;

// Eigenvalues of a Hermitian 3x3 matrix in descending order, from the
// trigonometric solution of the characteristic cubic plus a Newton polish.
std::array<double, 3> hermitian_eigenvalues(const Matrix3& m);

// Hermitian within 1e-10, unit trace within 1e-10, eigenvalues >= -1e-8.
bool is_density_matrix(const Matrix3& m, double tol_herm = 1e-10, double tol_trace = 1e-10,
                       double tol_psd = 1e-8);

// Unit vector parametrizing the antipodal pair (I +- r.sigma)/2 in the
// {|a>, |b>} block; +z is |a>.
class BlochDirection
{
public:
	// Throws if |r| deviates from 1 by more than 1e-12.
	BlochDirection(double x, double y, double z);
	static BlochDirection normalized(double x, double y, double z);
	static BlochDirection poles() { return {0.0, 0.0, 1.0}; }

	double x() const { return r_[0]; }
	double y() const { return r_[1]; }
	double z() const { return r_[2]; }
	BlochDirection flipped() const { return {-r_[0], -r_[1], -r_[2]}; }

private:
	std::array<double, 3> r_;
};

// Initial state confined to the {|a>, |b>} block (|m> empty).
struct BlockState
{
	double p_aa = 1.0;
	complex_t p_ab{};
	double p_bb = 0.0;

	// (I + r.sigma)/2 for |r| <= 1.
	static BlockState from_bloch(double x, double y, double z);
	static BlockState excited() { return {1.0, {}, 0.0}; }
	static BlockState ground() { return {0.0, {}, 1.0}; }

	// Throws InvalidInitialState unless unit trace and positive semidefinite.
	void validate() const;
};

BlockState mix(const BlockState& s1, const BlockState& s2, double weight1);

struct ChannelOptions
{
	int romberg_levels = 3;
	Quadrature quadrature = Quadrature::Fast;
};

// Scalar tables that fully define the reduced channel on a time grid:
// G(t_k), cos g t_k, sin g t_k and the bath moments for alpha0 = 1.
class ChannelCoefficients
{
public:
	ChannelCoefficients(const ModelParams& p, const TimeGrid& grid, const ChannelOptions& opts = {});

	const ModelParams& params() const { return green_.params(); }
	const GreenFunction& green_function() const { return green_; }
	const TimeGrid& grid() const { return grid_; }
	std::size_t size() const { return grid_.size(); }

	complex_t green(std::size_t k) const { return green_values_[k]; }
	double cos_gt(std::size_t k) const { return cos_[k]; }
	double sin_gt(std::size_t k) const { return sin_[k]; }
	const BathMoments& moments(std::size_t k) const { return moments_[k]; }

private:
	GreenFunction green_;
	TimeGrid grid_;
	std::vector<complex_t> green_values_;
	std::vector<double> cos_;
	std::vector<double> sin_;
	std::vector<BathMoments> moments_;
};

// Reduced state at grid index k for a block initial state. Validates rho0.
DensityMatrix3 evolve_state(const BlockState& rho0, const ChannelCoefficients& coeffs, std::size_t k);

// Half the trace norm of rho1 - rho2.
double trace_distance(const Matrix3& rho1, const Matrix3& rho2);

// D(t_k) for the evolved antipodal pair along `dir`, for every grid point.
std::vector<double> trace_distance_trajectory(const BlochDirection& dir,
                                              const ChannelCoefficients& coeffs);

} // namespace zeno
