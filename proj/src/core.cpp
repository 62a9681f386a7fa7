#include "jacang/core.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>

namespace jacang {

void check_degree_cap(int n) {
  if (n > kDegreeCap)
    throw CapExceeded("degree " + std::to_string(n) + " exceeds the supported cap " +
                      std::to_string(kDegreeCap));
}

double log_gamma(double x) {
  if (!(x > 0)) throw DomainError("log_gamma: argument must be positive");
  return boost::math::lgamma(x);
}

hp::Real log_gamma(const hp::Real& x) {
  if (!(x > 0)) throw DomainError("log_gamma: argument must be positive");
  return boost::multiprecision::lgamma(x);
}

double gamma_ratio(std::span<const double> num, std::span<const double> den) {
  std::vector<double> terms;
  terms.reserve(num.size() + den.size());
  for (double a : num) terms.push_back(log_gamma(a));
  for (double b : den) terms.push_back(-log_gamma(b));
  std::sort(terms.begin(), terms.end(),
            [](double u, double v) { return std::fabs(u) < std::fabs(v); });
  double s = 0;
  for (double t : terms) s += t;
  return std::exp(s);
}

hp::Real gamma_ratio(std::span<const hp::Real> num, std::span<const hp::Real> den) {
  hp::Real s = 0;
  for (const auto& a : num) s += log_gamma(a);
  for (const auto& b : den) s -= log_gamma(b);
  return exp(s);
}

double pochhammer(double a, int n) {
  if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
  double p = 1;
  for (int j = 0; j < n; ++j) p *= a + j;
  return p;
}

hp::Real pochhammer(const hp::Real& a, int n) {
  if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
  hp::Real p = 1;
  for (int j = 0; j < n; ++j) p *= a + j;
  return p;
}

double gen_binomial(double x, int k) {
  if (k < 0) throw DomainError("gen_binomial: k must be nonnegative");
  double p = 1;
  for (int j = 0; j < k; ++j) p = p * (x - j) / (j + 1);
  return p;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  double p = 1;
  for (int j = 1; j <= k; ++j) p = p * (n - k + j) / j;
  return std::round(p);
}

hp::Real binomial_hp(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  hp::Real p = 1;
  for (int j = 1; j <= k; ++j) p = p * (n - k + j) / j;
  return p;
}

double factorial(int n) {
  double p = 1;
  for (int j = 2; j <= n; ++j) p *= j;
  return p;
}

namespace {

struct TwoTerm {
  double hi;
  double lo;
};

TwoTerm two_sum(double a, double b) {
  double s = a + b;
  double z = s - a;
  return {s, (a - (s - z)) + (b - z)};
}

TwoTerm two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// Product of complex numbers with its rounding error.
struct CTwoTerm {
  Complex hi;
  Complex lo;
};

CTwoTerm two_prod(Complex a, Complex b) {
  auto p1 = two_prod(a.real(), b.real());
  auto p2 = two_prod(a.imag(), b.imag());
  auto p3 = two_prod(a.real(), b.imag());
  auto p4 = two_prod(a.imag(), b.real());
  auto re = two_sum(p1.hi, -p2.hi);
  auto im = two_sum(p3.hi, p4.hi);
  return {{re.hi, im.hi}, {p1.lo - p2.lo + re.lo, p3.lo + p4.lo + im.lo}};
}

CTwoTerm two_sum(Complex a, Complex b) {
  auto re = two_sum(a.real(), b.real());
  auto im = two_sum(a.imag(), b.imag());
  return {{re.hi, im.hi}, {re.lo, im.lo}};
}

template <class C>
Complex comp_horner(const std::vector<C>& c, Complex z) {
  if (c.empty()) return 0;
  Complex s = c.back();
  Complex err = 0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    auto p = two_prod(s, z);
    auto t = two_sum(p.hi, Complex(c[i]));
    s = t.hi;
    err = err * z + (p.lo + t.lo);
  }
  return s + err;
}

}  // namespace

double poly_eval(const Poly<double>& p, double x) {
  const auto& c = p.coeffs();
  if (c.empty()) return 0;
  double s = c.back();
  double err = 0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    auto q = two_prod(s, x);
    auto t = two_sum(q.hi, c[i]);
    s = t.hi;
    err = err * x + (q.lo + t.lo);
  }
  return s + err;
}

Complex poly_eval(const Poly<double>& p, Complex z) { return comp_horner(p.coeffs(), z); }

Complex poly_eval(const Poly<Complex>& p, Complex z) { return comp_horner(p.coeffs(), z); }

}  // namespace jacang
