#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <initializer_list>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace jacang {

using Real = double;
using Complex = std::complex<double>;

namespace hp {
// 100 decimal digits; see README for why double is not enough.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<100, boost::multiprecision::allocate_stack>,
    boost::multiprecision::et_off>;
using Complex = std::complex<Real>;
}  // namespace hp

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested degree is beyond what the library supports.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kDegreeCap = 60;

void check_degree_cap(int n);

template <class T> struct is_complex : std::false_type {};
template <class T> struct is_complex<std::complex<T>> : std::true_type {};
template <class T> inline constexpr bool is_complex_v = is_complex<T>::value;

template <class T> struct real_of { using type = T; };
template <class T> struct real_of<std::complex<T>> { using type = T; };
template <class T> using real_of_t = typename real_of<T>::type;

// ln Gamma(x) for x > 0.
double log_gamma(double x);
hp::Real log_gamma(const hp::Real& x);

// exp(sum ln Gamma(num) - sum ln Gamma(den)); all arguments must be positive.
double gamma_ratio(std::span<const double> num, std::span<const double> den);
hp::Real gamma_ratio(std::span<const hp::Real> num, std::span<const hp::Real> den);

// Rising factorial (a)_n as a direct product.
double pochhammer(double a, int n);
hp::Real pochhammer(const hp::Real& a, int n);

// Falling-factorial binomial x(x-1)...(x-k+1)/k!.
double gen_binomial(double x, int k);

double binomial(int n, int k);
hp::Real binomial_hp(int n, int k);
double factorial(int n);

template <class T> T pi_v() {
  if constexpr (std::is_same_v<T, double>)
    return std::numbers::pi;
  else
    return boost::math::constants::pi<T>();
}

// omega^q with omega = exp(2 pi i / r); q is reduced mod r first and the
// quarter-turn values are returned exactly.
template <class T>
std::complex<T> unit_root(long q, int r) {
  if (r < 1) throw DomainError("unit_root: r must be >= 1");
  long m = q % r;
  if (m < 0) m += r;
  if (m == 0) return {T(1), T(0)};
  if (2 * m == r) return {T(-1), T(0)};
  if (4 * m == r) return {T(0), T(1)};
  if (4 * m == 3L * r) return {T(0), T(-1)};
  T ang = 2 * pi_v<T>() * T(m) / T(r);
  using std::cos;
  using std::sin;
  return {cos(ang), sin(ang)};
}

// Dense monomial-basis polynomial; coeffs()[k] is the coefficient of x^k.
// Trailing zeros are never stored, so degree() == coeffs().size() - 1 and
// the zero polynomial has degree -1.
template <class T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : T(0);
  }
  T operator[](int k) const { return coeff(k); }

  // Drops coefficients above degree d.
  Poly truncated(int d) const {
    if (d + 1 >= static_cast<int>(c_.size())) return *this;
    if (d < 0) return Poly();
    return Poly(std::vector<T>(c_.begin(), c_.begin() + d + 1));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

// Plain Horner; generic over coefficient and argument types.
template <class T, class Z>
auto horner(const Poly<T>& p, const Z& z) {
  using R = decltype(T() * Z());
  R s = R(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * z + *it;
  return s;
}

// Compensated Horner (error-free transformations); faithful up to
// condition numbers around 1e16.
double poly_eval(const Poly<double>& p, double x);
Complex poly_eval(const Poly<double>& p, Complex z);
Complex poly_eval(const Poly<Complex>& p, Complex z);

// q(x) = p(omega^m x).
template <class T>
Poly<std::complex<real_of_t<T>>> poly_rotate(const Poly<T>& p, long m, int r) {
  using R = real_of_t<T>;
  std::vector<std::complex<R>> out(p.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = std::complex<R>(p.coeffs()[k]) * unit_root<R>(m * static_cast<long>(k), r);
  return Poly<std::complex<R>>(std::move(out));
}

template <class T>
Poly<T> poly_derivative(const Poly<T>& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Poly<T>();
  std::vector<T> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * T(static_cast<int>(k));
  return Poly<T>(std::move(d));
}

// a*p + q.
template <class T, class A>
Poly<T> poly_axpy(const A& a, const Poly<T>& p, const Poly<T>& q) {
  std::size_t len = std::max(p.coeffs().size(), q.coeffs().size());
  std::vector<T> out(len, T(0));
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[k] = T(a) * p.coeffs()[k];
  for (std::size_t k = 0; k < q.coeffs().size(); ++k) out[k] += q.coeffs()[k];
  return Poly<T>(std::move(out));
}

template <class T>
Poly<T> poly_mul(const Poly<T>& p, const Poly<T>& q) {
  if (p.is_zero() || q.is_zero()) return Poly<T>();
  std::vector<T> out(p.coeffs().size() + q.coeffs().size() - 1, T(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j)
      out[i + j] += p.coeffs()[i] * q.coeffs()[j];
  return Poly<T>(std::move(out));
}

template <class T, class S>
Poly<T> poly_scale(const Poly<T>& p, const S& s) {
  std::vector<T> out(p.coeffs());
  for (auto& c : out) c *= T(s);
  return Poly<T>(std::move(out));
}

inline double to_double(const hp::Real& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }
inline Complex to_double(const hp::Complex& z) {
  return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
}
inline Complex to_double(const Complex& z) { return z; }

template <class T>
auto to_double(const Poly<T>& p) {
  using D = decltype(to_double(std::declval<T>()));
  std::vector<D> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_double(c));
  return Poly<D>(std::move(out));
}

inline hp::Real to_hp(double x) { return hp::Real(x); }
inline hp::Complex to_hp(const Complex& z) { return {hp::Real(z.real()), hp::Real(z.imag())}; }

template <class T>
auto to_hp(const Poly<T>& p) {
  using H = decltype(to_hp(std::declval<T>()));
  std::vector<H> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_hp(c));
  return Poly<H>(std::move(out));
}

}  // namespace jacang
