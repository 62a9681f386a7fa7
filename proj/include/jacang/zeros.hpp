#pragma once

#include "jacang/polynomials.hpp"

#include <vector>

namespace jacang {

// The zero finder could not certify its output; indices are 0-based
// positions in the sorted candidate list.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, std::vector<int> indices)
      : std::runtime_error(what), indices_(std::move(indices)) {}
  const std::vector<int>& indices() const { return indices_; }

 private:
  std::vector<int> indices_;
};

struct ZeroSet {
  Params params;
  int n;
  std::vector<double> zeros;      // strictly increasing, in (0,1)
  std::vector<double> residuals;  // |p_n(x_i)| / sum_k |c_k x_i^k| at the double zero
  std::vector<int> polish_iterations;
};

inline constexpr double kZeroResidualTol = 1e-10;
inline constexpr double kZeroSeparation = 1e-12;

// Eigenvalues of the balanced companion matrix of monic p_n (multiprecision
// Hessenberg QR), then Newton polishing.
ZeroSet find_zeros(int n, const Params& params);

// Normalized zero counting measure.
class EmpiricalMeasure {
 public:
  explicit EmpiricalMeasure(const ZeroSet& zs) : zs_(&zs) {}
  double cdf(double x) const;
  const ZeroSet& zeros() const { return *zs_; }

 private:
  const ZeroSet* zs_;
};

// #{i : x_i <= x} / n.
double empirical_cdf(const ZeroSet& zs, double x);

// (1/n) sum_j 1/(z - x_j); DomainError if |z - x_j| < 1e-13 for some j.
Complex stieltjes_empirical(const ZeroSet& zs, Complex z);

// p_n'(z) / (n p_n(z)) from the coefficients.
Complex log_derivative_over_n(int n, const Params& params, Complex z);

}  // namespace jacang
