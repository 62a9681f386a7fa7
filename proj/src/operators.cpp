#include "jacang/operators.hpp"

#include <algorithm>
#include <cmath>

namespace jacang {

namespace {

using H = hp::Real;

H max_abs(const Poly<H>& p) {
  H m = 0;
  for (const auto& c : p.coeffs()) m = std::max(m, H(abs(c)));
  return m;
}

// max |p - q| / max |q| over coefficients.
double rel_poly_diff(const Poly<H>& p, const Poly<H>& q) {
  int d = std::max(p.degree(), q.degree());
  H worst = 0;
  for (int k = 0; k <= d; ++k) worst = std::max(worst, H(abs(p.coeff(k) - q.coeff(k))));
  H s = max_abs(q);
  if (s == 0) return worst == 0 ? 0.0 : INFINITY;
  return to_double(H(worst / s));
}

// x^m p
Poly<H> shift_up(const Poly<H>& p, int m) {
  std::vector<H> c(m, H(0));
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return Poly<H>(std::move(c));
}

H falling(int n, int k) {
  H f = 1;
  for (int i = 0; i < k; ++i) f *= n - i;
  return f;
}

}  // namespace

double raising_coeff(int k, int n, const Params& P) {
  int r = P.r;
  double v = binomial(r, k) * (r * P.alpha + P.beta) + binomial(r + 1, k + 1) * k * n;
  return (k % 2) ? -v : v;
}

RaisingCoeffs raising_coeffs(int n, const Params& P) {
  RaisingCoeffs rc;
  for (int k = 1; k <= P.r; ++k) rc.a.push_back(raising_coeff(k, n, P));
  return rc;
}

double lowering_check(int n, const Params& P) {
  if (n < 1) throw DomainError("lowering_check needs n >= 1");
  auto d = poly_derivative(p_coeffs<double>(n, P));
  auto low = p_coeffs_shifted<double>(n - 1, P.r, P.alpha + 1, P.beta + 1);
  double worst = 0;
  for (int k = 0; k <= std::max(d.degree(), low.degree()); ++k) {
    double e = n * low.coeff(k);
    double diff = std::abs(d.coeff(k) - e);
    worst = std::max(worst, e != 0 ? diff / std::abs(e) : diff);
  }
  return worst;
}

double raising_check(int n, const Params& P) {
  int r = P.r;
  if (n < 0) throw DomainError("raising_check needs n >= 0");
  if (!(P.alpha > r - 1) || !(P.beta > r - 1))
    throw DomainError("raising property needs alpha, beta > r - 1");
  auto p = p_coeffs_shifted<H>(n, r, P.alpha, P.beta);
  auto dp = poly_derivative(p);
  // (beta(1-x^r) - alpha r x^r) p + x(1-x^r) p'
  Poly<H> lhs = poly_axpy(H(P.beta), p, Poly<H>());
  lhs = poly_axpy(H(-(P.beta + P.alpha * r)), shift_up(p, r), lhs);
  lhs = poly_axpy(H(1), shift_up(dp, 1), lhs);
  lhs = poly_axpy(H(-1), shift_up(dp, r + 1), lhs);
  Poly<H> rhs;
  for (int k = 1; k <= r; ++k) {
    auto q = p_coeffs_shifted<H>(n + k, r, P.alpha - k, P.beta - k);
    rhs = poly_axpy(H(raising_coeff(k, n, P)), shift_up(q, r - k), rhs);
  }
  return rel_poly_diff(rhs, lhs);
}

OdeSpec ode_coeffs(int n, const Params& P) {
  int r = P.r;
  OdeSpec s{n, P, {}};
  for (int k = 0; k <= r; ++k) {
    double poch = pochhammer(static_cast<double>(n - r + 1), r - k);
    double br = binomial(r, k) * (r * P.alpha + P.beta) +
                binomial(r + 1, k) * (static_cast<double>(r) * n + r - static_cast<double>(k) * n);
    double v = poch * br;
    s.c.push_back(((r + k + 1) % 2) ? -v : v);
  }
  return s;
}

double ode_residual(const OdeSpec& spec, std::span<const double> points) {
  int r = spec.params.r;
  if (static_cast<int>(spec.c.size()) != r + 1) throw DomainError("OdeSpec needs r+1 coefficients");
  auto p = p_coeffs<H>(spec.n, spec.params);
  std::vector<Poly<H>> der{p};
  for (int k = 1; k <= r + 1; ++k) der.push_back(poly_derivative(der.back()));
  double worst = 0;
  for (double xd : points) {
    H x(xd);
    std::vector<H> y(r + 2);
    for (int k = 0; k <= r + 1; ++k) y[k] = horner(der[k], x);
    H xr = pow(x, r);
    H t_top = x * (1 - xr) * y[r + 1];
    H t_r = (r + spec.params.beta) * y[r];
    H sum = t_top + t_r;
    H big = std::max(H(abs(t_top)), H(abs(t_r)));
    H xk = 1;
    for (int k = 0; k <= r; ++k) {
      H t = H(spec.c[k]) * xk * y[k];
      sum += t;
      big = std::max(big, H(abs(t)));
      xk *= x;
    }
    if (big > 0) worst = std::max(worst, to_double(H(abs(sum) / big)));
  }
  return worst;
}

double chain_check(int n, const Params& P) {
  int r = P.r;
  if (n < r) throw DomainError("chain_check needs n >= r");
  auto d = p_coeffs<H>(n, P);
  for (int k = 0; k < r; ++k) d = poly_derivative(d);
  auto low = p_coeffs_shifted<H>(n - r, r, P.alpha + r, P.beta + r);
  return rel_poly_diff(d, poly_scale(low, falling(n, r)));
}

double ode_raising_identity_check(int n, const Params& P) {
  int r = P.r;
  if (n < r) throw DomainError("ode_raising_identity_check needs n >= r");
  auto spec = ode_coeffs(n, P);
  Params shifted(r, P.alpha + r, P.beta + r);
  double worst = 0;
  for (int k = 0; k <= r; ++k) {
    // (n-k)!/(n-r)! = falling(n-k, r-k)
    double f = to_double(falling(n - k, r - k));
    double v = -raising_coeff(r - k, n - r, shifted) * f;
    double c = spec.c[k];
    double diff = std::abs(c - v);
    worst = std::max(worst, c != 0 ? diff / std::abs(c) : diff);
  }
  return worst;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> x;
  if (n <= 0) return x;
  if (n == 1) return {lo};
  for (int i = 0; i < n; ++i) x.push_back(lo + (hi - lo) * i / (n - 1));
  return x;
}

}  // namespace jacang
