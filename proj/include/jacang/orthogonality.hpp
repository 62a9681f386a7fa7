#pragma once

#include "jacang/polynomials.hpp"

namespace jacang {

// Entry m = int_0^1 x^{m+beta} (1-x^r)^alpha dx = (1/r) B((m+beta+1)/r, alpha+1).
template <class T>
class MomentTable {
 public:
  MomentTable(const Params& params, int max_m);

  const T& operator()(int m) const;
  int max_m() const { return static_cast<int>(values_.size()) - 1; }
  const Params& params() const { return params_; }

 private:
  Params params_;
  std::vector<T> values_;
};

double moment(int m, const Params& params);
hp::Real moment_hp(int m, const Params& params);

// sum_j int_0^{omega^{j-1}} x^k A_j(x) |x|^beta (1-x^r)^alpha dx.
// Diagonal vectors use the root-of-unity short cut.
template <class T>
std::complex<T> ray_form(int k, const TypeIVector<T>& v, const MomentTable<T>& mt);
template <class T>
std::complex<T> ray_form(int k, const TypeIVector<T>& v);
// Same sum without the diagonal short cut.
template <class T>
std::complex<T> ray_form_direct(int k, const TypeIVector<T>& v, const MomentTable<T>& mt);

struct OrthoReport {
  double max_ortho_residual = 0;  // max |condition k|, 0 <= k <= |n|-2
  double max_scaled_residual = 0;  // same, each divided by its sum of |terms|
  Complex norm_value{0, 0};       // condition k = |n|-1
  int conditions = 0;             // |n|
  bool pass = false;
};

// Residuals are accumulated in the multiprecision type; a double vector is
// checked exactly as stored.
OrthoReport verify_type1(const TypeIVector<hp::Real>& v, double tol);
OrthoReport verify_type1(const TypeIVector<hp::Real>& v, double tol,
                         const MomentTable<hp::Real>& mt);
OrthoReport verify_type1(const TypeIVector<double>& v, double tol);

struct ModrReport {
  double max_residual = 0;       // max over 1 <= j <= n of |int x^{rj-1} p_n w|
  double normalization_error = 0;  // relative error of S_{n+1} - S_0
};

ModrReport modr_report(int n, const Params& params);
bool check_modr(int n, const Params& params, double tol);

}  // namespace jacang
