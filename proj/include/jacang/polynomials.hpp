#pragma once

#include "jacang/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jacang {

// Weight |x|^beta (1 - x^r)^alpha on the r-star.
struct Params {
  int r;
  double alpha;
  double beta;

  Params(int r_, double alpha_, double beta_);
};

enum class Offset { diagonal, plus, minus };

// Diagonal level n with an optional step +e_k or -e_k (1 <= k <= r).
struct MultiIndexTag {
  int n = 0;
  Offset offset = Offset::diagonal;
  int k = 0;

  static MultiIndexTag diagonal(int n) { return {n, Offset::diagonal, 0}; }
  static MultiIndexTag plus(int n, int k) { return {n, Offset::plus, k}; }
  static MultiIndexTag minus(int n, int k) { return {n, Offset::minus, k}; }

  // |n| = total number of conditions.
  int size(int r) const;
  // Degree of A_{.,j} (j = 1..r); -1 means the zero polynomial.
  int degree(int j) const;
  std::string describe() const;
};

// Entry j-1 holds A_{.,j}, the polynomial on the ray [0, omega^{j-1}].
template <class T>
struct TypeIVector {
  Params params;
  MultiIndexTag tag;
  std::vector<Poly<std::complex<T>>> polys;
  // Diagonal vectors only: polys[j-1](x) == base(omega^{1-j} x).
  std::optional<Poly<T>> base;
};

TypeIVector<double> to_double(const TypeIVector<hp::Real>& v);

// p_n(x; alpha, beta) for the r-star weight. For T = double the result is
// the multiprecision coefficient list rounded to double.
template <class T = double>
Poly<T> p_coeffs(int n, const Params& params);

// q_n(x; alpha, beta) = p_n(x; alpha, beta - 1).
template <class T = double>
Poly<T> q_coeffs(int n, const Params& params);

// p_n with an arbitrary second parameter; used for the shifted families.
// Throws DomainError if a Gamma function in the numerator has a pole.
template <class T = double>
Poly<T> p_coeffs_shifted(int n, int r, double alpha, double beta);

// Leading coefficient nu_n of p_n.
double leading_nu(int n, const Params& params);

// lambda_{n+1,r}: diagonal normalization at level n+1.
double lambda_const(int n, const Params& params);
// tau_{n,r}: normalization of the vectors above the diagonal.
double tau_const(int n, const Params& params);
// gamma_{n,r}: normalization of the vectors below the diagonal (r >= 2).
double gamma_const(int n, const Params& params);

template <class T = double>
TypeIVector<T> type1_diagonal(int level, const Params& params);

template <class T = double>
TypeIVector<T> type1_up(int n, int k, const Params& params);

template <class T = double>
TypeIVector<T> type1_down(int n, int k, const Params& params);

template <class T = double>
TypeIVector<T> type1_vector(const MultiIndexTag& tag, const Params& params);

// r = 2 closed forms with the real-line sign convention: A lives on [-1, 0]
// and is integrated from -1 to 0, B lives on [0, 1]. For a diagonal level
// n + 1 the pair is (A_{n+1,n+1}, B_{n+1,n+1}); "up" gives (A_{n,n+1},
// B_{n,n+1}) and "down" gives (A_{n+1,n}, B_{n+1,n}).
enum class R2Family { diag, up, down };

struct R2Pair {
  Poly<double> A;
  Poly<double> B;
};

// alpha = beta = 0, built from the half-integer binomial forms.
R2Pair legendre_angelesco_r2(int n, R2Family which);
// General alpha, beta from the r = 2 Gamma-ratio forms.
R2Pair jacobi_angelesco_r2(int n, R2Family which, double alpha, double beta);

// r = 2 base polynomials from their own closed forms.
Poly<double> legendre_p_r2(int n);
Poly<double> legendre_q_r2(int n);
Poly<double> jacobi_p_r2(int n, double alpha, double beta);
Poly<double> jacobi_q_r2(int n, double alpha, double beta);

}  // namespace jacang
