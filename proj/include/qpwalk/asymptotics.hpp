#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qpwalk/kernel.hpp"

namespace qpwalk {

/// Power-series coefficients of h(1,.) recovered by the Cauchy formula on the
/// circle |z| = r: c_k = r^{-k} (1/M) sum_j h(1, r w^j) w^{-jk}.
struct CoefficientSeries {
    double radius = 0.0;
    int M = 0;
    std::vector<double> coefficients;   // real parts, k < M
    double max_imag_residue = 0.0;      // transform noise, should be ~0
    double aliasing_bound = 0.0;        // r^M * sup |h| on the circle
    /// Roundoff amplification floor for c_k; coefficients below ~100x this
    /// are flagged unreliable.
    double noise_floor(int k) const;
    bool reliable(int k) const;
};

CoefficientSeries extract_coefficients(int x0, int y0, double r = 0.9,
                                       int M = 4096);

/// (9/16) sqrt(3/pi) x0 y0 (x0+y0): the k^{-5/2} amplitude of P[S = k].
double asymptotic_constant(int x0, int y0);
/// Three times asymptotic_constant (documented k^{-3/2} tail companion).
double tau_tail_constant(int x0, int y0);

/// Asymptote k -> c / (Gamma(-theta) k^{theta+1}) from a (1-z)^theta
/// singularity with amplitude c. theta must not be a non-negative integer.
struct PowerAsymptote {
    double amplitude = 0.0;  // c / Gamma(-theta)
    double exponent = 0.0;   // theta + 1
    double operator()(double k) const;
};
PowerAsymptote pringsheim_transfer(double theta, double c);

/// Log-log least-squares fit of series[k] ~ c k^{-(theta+1)} on a window.
struct TailFit {
    int k_min = 0, k_max = 0;
    double exponent = 0.0;   // fitted theta + 1 (positive)
    double constant = 0.0;   // fitted c
    double residual = 0.0;   // rms of the log regression
};
TailFit tail_fit(std::span<const double> series, int k_min, int k_max);

/// Least-squares fit of h(1,z) (total and the three parts) near z = 1 against
/// the basis below, on the ladder eps = m*10^-j, j = 2..5, m in {1,1.78,3.16,5.62}.
struct SingularFit {
    static const std::vector<std::string>& basis_names();
    // index into the coefficient vectors
    static constexpr int idx_one = 0, idx_e = 1, idx_e2 = 2, idx_e3 = 3,
                         idx_sqrt = 4, idx_e32 = 5, idx_e52 = 6,
                         idx_elog = 7, idx_e2log = 8, idx_e3log = 9;
    std::array<std::vector<double>, 3> part_coefficients;  // h1, h2, h3
    std::vector<double> total_coefficients;
    double condition = 0.0;
    std::array<double, 4> fit_residuals{};  // h1, h2, h3, total
};
SingularFit singular_coefficient_fit(int x0, int y0);

/// Both sides of the closed-form evaluation of
///   int_{-1}^{1} (1-u)^k sqrt(1-u^2) / (1 - z(1+2u)/3) du,  k in {0,1,2},
/// where the right side uses the polynomial part of (Z^2-1)^{1/2}(1-Z)^k
/// at infinity evaluated at Z = 3/(2z) - 1/2.
struct SlitIntegralIdentity {
    double lhs = 0.0, rhs = 0.0, diff = 0.0;
};
SlitIntegralIdentity slit_integral_identity(int k, double z);

/// Coefficient of ln(1-z)(1-z)^p in
///   int_{-1}^{1} (1-u)^k sqrt(1-u^2) / (1 - z(1+2u)/3)^{exponent} du,
/// with p = k+1 for exponent 1/2 and p = k for exponent 3/2, fitted on a
/// geometric ladder z -> 1. The fitted amplitudes approach 3 sqrt(3)/4
/// (exponent 1/2, k = 0), -3 sqrt(3)/2 and 27 sqrt(3)/8 (exponent 3/2,
/// k = 0 and 1).
struct LogFit {
    double coefficient = 0.0;
    double condition = 0.0;
    double residual = 0.0;
};
LogFit log_singularity_fit(double exponent, int k);

namespace detail {
/// Householder least squares; returns x minimizing |A x - b|, A is m x n
/// (column-major vectors), m >= n. Outputs condition estimate and rms residual.
std::vector<double> least_squares(const std::vector<std::vector<double>>& cols,
                                  std::vector<double> b, double* condition,
                                  double* residual);
void fft_radix2(std::vector<cplx>& a, bool inverse);
}  // namespace detail

}  // namespace qpwalk
