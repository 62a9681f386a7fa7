#pragma once

#include "jacang/polynomials.hpp"

#include <span>
#include <vector>

namespace jacang {

// x(1-x^r) y^{(r+1)} + (r+beta) y^{(r)} + sum_{k=0}^r c[k] x^k y^{(k)} = 0 for y = p_n.
struct OdeSpec {
  int n;
  Params params;
  std::vector<double> c;  // size r+1
};

// a[k-1] = (-1)^k [C(r,k)(r alpha + beta) + C(r+1,k+1) k n], k = 1..r.
struct RaisingCoeffs {
  std::vector<double> a;
};

RaisingCoeffs raising_coeffs(int n, const Params& params);
// Same formula for any k >= 0 (k = 0 gives r alpha + beta).
double raising_coeff(int k, int n, const Params& params);

// max_k |p_n'[k] - n p_{n-1}(alpha+1, beta+1)[k]| / |n p_{n-1}(alpha+1, beta+1)[k]|
// on the double coefficient lists.
double lowering_check(int n, const Params& params);

// Relative deviation (max coefficient difference over max coefficient) between
// (beta(1-x^r) - alpha r x^r) p_n + x(1-x^r) p_n' and
// sum_k a_k x^{r-k} p_{n+k}(alpha-k, beta-k). Needs alpha, beta > r-1.
double raising_check(int n, const Params& params);

OdeSpec ode_coeffs(int n, const Params& params);

// max over points of |LHS(p_n)(x)| / (largest term at x); p_n is taken in
// multiprecision and derivatives come from its coefficients.
double ode_residual(const OdeSpec& spec, std::span<const double> points);

// n >= r: p_n^{(r)} against n!/(n-r)! p_{n-r}(alpha+r, beta+r), relative to
// the largest coefficient.
double chain_check(int n, const Params& params);

// n >= r: max_k |c_k + a_{r-k,n-r}(alpha+r, beta+r) (n-k)!/(n-r)!| / |c_k|.
double ode_raising_identity_check(int n, const Params& params);

// n equispaced points in [lo, hi].
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace jacang
