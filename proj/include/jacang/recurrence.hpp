#pragma once

#include "jacang/polynomials.hpp"

#include <optional>
#include <span>

namespace jacang {

// Diagonal recurrence scalars; ray values are a*omega^{2(l-1)} and b*omega^{k-1}.
struct RecurrenceRow {
  int n = 0;
  double a_scalar = 0;
  std::optional<double> b_scalar;  // absent for r = 1

  Complex a_ray(int l, int r) const;
  Complex b_ray(int k, int r) const;
};

double coeff_a(int n, const Params& params);
// Requires r >= 2.
double coeff_b(int n, const Params& params);
RecurrenceRow recurrence_row(int n, const Params& params);

double a_limit(int r);  // r / (r+1)^{2+2/r}
double b_limit(int r);  // r / (r+1)^{1+1/r}

// per_ray Chebyshev points of (0,1) placed on each ray [0, omega^{j-1}].
std::vector<Complex> ray_sample_points(int r, int per_ray);

// max over points and rays of
//   |x A_{n,j} - A_{n-e_k,j} - b_k A_{n,j} - sum_l a_l A_{n+e_l,j}|
// divided by the largest single term over all points and rays.
double recurrence_residual(int n, int k, const Params& params, std::span<const Complex> points);
// Same with caller-supplied scalars (sensitivity checks).
double recurrence_residual(int n, int k, const Params& params, std::span<const Complex> points,
                           double a_scalar, double b_scalar);

// r = 2 closed forms in the (a, b, c, d) parametrization of the two-interval
// case, where Q_{n,m} has degree n-1 on [-1,0] and m-1 on [0,1].
double r2_a_closed(int n, double alpha, double beta);  // a_{n,n} = b_{n,n}
// The Gamma-ratio expression for c_{n-1,n} evaluated as printed. On the
// two-interval vectors the relations hold with c_{n-1,n} = -r2_c_closed and
// d_{n,n-1} = +r2_c_closed, i.e. the printed value is d_{n,n-1}.
double r2_c_closed(int n, double alpha, double beta);

// Ray parametrization -> two-interval one for r = 2 (ray 2 is [-1,0]):
// a_{n,n} = a_{n,2} = a, b_{n,n} = a_{n,1} = a, c_{n-1,n} = b_{n-e_2,2} = -b,
// d_{n,n-1} = b_{n-e_1,1} = b.
struct R2Translation {
  double a_nn;
  double b_nn;
  double c_prev;
  double d_prev;
};
R2Translation r2_translation(int n, double alpha, double beta);

}  // namespace jacang
