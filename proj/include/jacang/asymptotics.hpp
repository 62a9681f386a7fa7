#pragma once

#include "jacang/zeros.hpp"

#include <array>
#include <span>
#include <utility>
#include <vector>

namespace jacang {

// theta in (0, pi/(r+1)).
struct ThetaParam {
  double theta;
  int r;
};

// x^(theta) = sin^{r+1}((r+1)theta) / (c_r sin(theta) sin^r(r theta)),
// c_r = (r+1)^{r+1}/r^r. Decreases from 1 to 0.
double hatx_of_theta(const ThetaParam& t);
double hatx_of_theta(double theta, int r);
// ln x^ and its theta-derivative, accurate as theta -> 0.
double log_hatx_of_theta(double theta, int r);
double dlog_hatx_dtheta(double theta, int r);

// Inverse of hatx_of_theta; 0 for x^ >= 1, pi/(r+1) for x^ <= 0.
// Throws std::logic_error if x^ is found not to be strictly decreasing.
double theta_of_hatx(double xh, int r);
// Same from ln x^, which keeps full accuracy as x^ -> 1.
double theta_of_log_hatx(double log_xh, int r);

// Strict decrease of hatx_of_theta on npts interior grid points.
bool hatx_is_monotone(int r, int npts = 10000);

// Density of the limit measure in the variable x^ = x^r, at theta = theta(x^).
double w_density(double xh, int r);
double w_density_at_theta(double theta, int r);
// u_r(x) = r x^{r-1} w_r(x^r).
double u_density(double x, int r);
// u_r at x = exp(log_x).
double u_at_log_x(double log_x, int r);
// F_r(x) = 1 - (r+1) theta(x^r) / pi; clamps to [0,1] outside (0,1).
double limit_cdf(double x, int r);
// Closed radical form for r = 2.
double u_closed_r2(double x);

// int_a^b u_r by adaptive Gauss-Kronrod with endpoint substitutions.
double u_integral(int r, double a = 0, double b = 1);

// Solutions of z(1-z^2)S^3 + 3zS - 2 = 0 labelled by continuation from
// +i infinity: [0] has zS -> -2, [1] is the Stieltjes branch (zS -> 1,
// analytic off [0,1]), [2] is the other branch with zS -> 1. The lower half
// plane uses conjugation. Accuracy degrades near z = 0, +-1.
std::array<Complex, 3> cubic_branches_r2(Complex z);

struct AlgebraicResidual {
  double s_form;  // |zS^{r+1} - (zS+r)(zS-1)^r| / max term
  double w_form;  // |W^{r+1} - (r+1)z^r W + r z^r| / max term, W = zS/(zS-1)
};
AlgebraicResidual algebraic_residual(Complex z, Complex S, int r);

// sum_{l=0}^{r+1} (-1)^{r+l+1} C(r+1,l) (r-l) (zS)^l, which equals
// -(zS+r)(zS-1)^r.
Complex binomial_sum_form(Complex z, Complex S, int r);

// All roots of sum_k c[k] x^k (Aberth-Ehrlich).
std::vector<Complex> poly_roots(std::span<const Complex> c);

// All r+1 solutions S of zS^{r+1} = (zS+r)(zS-1)^r at z (unlabelled).
std::vector<Complex> algebraic_solutions(Complex z, int r);

// The Stieltjes branch of the algebraic equation, continued from +i infinity
// where zS ~ 1 + (r+1)^{-1/r}/z. DomainError on [0,1].
Complex stieltjes_algebraic(Complex z, int r);

// int u_r(x)/(z-x) dx, evaluated as a theta integral (the measure is uniform
// in theta with density (r+1)/pi).
Complex stieltjes_limit_quadrature(Complex z, int r);

inline constexpr std::array<double, 3> kPerronEps{1e-3, 5e-4, 2.5e-4};
// -(1/pi) Im S(x + i eps) Richardson-extrapolated over kPerronEps.
double stieltjes_perron_density(double x, int r);

// sup over jumps of |empirical CDF - F_r|.
double ks_distance(const ZeroSet& zs, int r);

// Log-log slopes of u_r on x in [1e-6, 1e-3] and on 1 - x^r in [1e-6, 1e-3].
std::pair<double, double> endpoint_exponents(int r);

struct DensitySample {
  double x;
  double u;
  double F;
};

struct DensityCurve {
  int r;
  std::vector<DensitySample> samples;  // increasing x
  std::vector<double> theta_grid;      // theta of each sample
};

// Interior theta grid clustered at both ends (smootherstep in s = i/(N+1)).
DensityCurve density_curve_theta(int r, int samples);
// x_i = i/(N+1), i = 1..N.
DensityCurve density_curve_uniform(int r, int samples);

// Trapezoid of u over the samples plus the two tails F(x_1) and 1 - F(x_N).
double curve_mass(const DensityCurve& c);

}  // namespace jacang
