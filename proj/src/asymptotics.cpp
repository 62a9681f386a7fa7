#include "jacang/asymptotics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <set>

namespace jacang {

namespace {

constexpr double kPi = std::numbers::pi;

double theta_max(int r) { return kPi / (r + 1); }

void require_r(int r) {
  if (r < 1) throw DomainError("r must be >= 1");
}

// ln(sin y / y)
double log_sinc(double y) {
  if (std::abs(y) < 0.1) {
    double t = y * y;
    return -t * (1.0 / 6 + t * (1.0 / 180 + t * (1.0 / 2835 + t * (1.0 / 37800 +
                t * (1.0 / 467775 + t * 691.0 / 3831077250)))));
  }
  return std::log(std::sin(y) / y);
}

// cot y - 1/y
double cot_minus_inv(double y) {
  if (std::abs(y) < 1e-2) {
    double y2 = y * y;
    return -y / 3 - y * y2 / 45 - 2 * y * y2 * y2 / 945;
  }
  return std::cos(y) / std::sin(y) - 1 / y;
}

void ensure_monotone(int r) {
  static std::mutex mu;
  static std::set<int> checked;
  std::lock_guard<std::mutex> lock(mu);
  if (checked.count(r)) return;
  if (!hatx_is_monotone(r)) throw std::logic_error("hatx_of_theta is not strictly decreasing");
  checked.insert(r);
}

double gk_integrate(const std::function<double(double)>& f, double a, double b) {
  if (!(b > a)) return 0;
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(f, a, b, 12, 1e-12);
}

// Coefficients of P(V) with T = zS = 1 + V/z:
//   (T + r) V^r - z^r T^{r+1} / z^r ... written out as
//   V^{r+1}/z + (r+1) V^r - sum_m C(r+1,m) V^m z^{-m}.
std::vector<Complex> v_poly(Complex z, int r) {
  std::vector<Complex> c(r + 2);
  Complex zi = 1.0 / z, zp = 1;
  for (int m = 0; m <= r + 1; ++m) {
    c[m] = -binomial(r + 1, m) * zp;
    zp *= zi;
  }
  c[r] += double(r + 1);
  c[r + 1] += zi;
  return c;
}

Complex s_from_v(Complex z, Complex v) { return (1.0 + v / z) / z; }

std::pair<Complex, Complex> eval_pd(const std::vector<Complex>& c, Complex x) {
  Complex p = c.back(), d = 0;
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
    d = d * x + p;
    p = p * x + c[k];
  }
  return {p, d};
}

Complex newton_polish(const std::vector<Complex>& c, Complex x) {
  for (int it = 0; it < 8; ++it) {
    auto [p, d] = eval_pd(c, x);
    if (d == 0.0) break;
    Complex dx = p / d;
    x -= dx;
    if (std::abs(dx) <= 1e-16 * std::abs(x)) break;
  }
  return x;
}

std::vector<Complex> general_v_roots(Complex z, int r) {
  auto c = v_poly(z, r);
  auto roots = poly_roots(c);
  for (auto& v : roots) v = newton_polish(c, v);
  return roots;
}

// V values of the three cubic roots. Cardano on the V cubic is used only for
// the largest root; the two small ones (which nearly coincide in S for large
// |z|) come from backward deflation and a cancellation-free quadratic.
std::vector<Complex> cubic_v_roots(Complex z) {
  auto c = v_poly(z, 2);
  if (std::abs(c[3]) <= 1e-14 * std::abs(c[2])) return general_v_roots(z, 2);
  Complex B = c[2] / c[3], C = c[1] / c[3], D = c[0] / c[3];
  Complex p = C - B * B / 3.0, q = 2.0 * B * B * B / 27.0 - B * C / 3.0 + D;
  Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  Complex u3 = -q / 2.0 + disc;
  Complex alt = -q / 2.0 - disc;
  if (std::abs(alt) > std::abs(u3)) u3 = alt;
  Complex u = std::pow(u3, 1.0 / 3.0);
  Complex big = 0;
  for (int k = 0; k < 3; ++k) {
    Complex uk = u * unit_root<double>(k, 3);
    Complex v = (uk == 0.0 ? Complex(0) : uk - p / (3.0 * uk)) - B / 3.0;
    if (std::abs(v) > std::abs(big)) big = v;
  }
  big = newton_polish(c, big);
  if (big == 0.0) return general_v_roots(z, 2);
  // c3 V^3 + ... + c0 = (V - big)(q2 V^2 + q1 V + q0), solved from the low end
  Complex q0 = -c[0] / big, q1 = (q0 - c[1]) / big, q2 = (q1 - c[2]) / big;
  Complex sd = std::sqrt(q1 * q1 - 4.0 * q2 * q0);
  if (std::real(std::conj(q1) * sd) < 0) sd = -sd;
  Complex w = -(q1 + sd) / 2.0;
  std::vector<Complex> out{big};
  if (w == 0.0) return general_v_roots(z, 2);
  out.push_back(newton_polish(c, w / q2));
  out.push_back(newton_polish(c, q0 / w));
  return out;
}

// Continues one root (in the V variable) from Re z + iY down to z.
template <class RootsFn>
Complex track(RootsFn roots_at, Complex z, Complex start_guess_fn_arg, bool guess_scales_with_z) {
  double x = z.real(), y1 = z.imag();
  double Y0 = 1e3 * (1 + std::abs(z));
  auto nearest = [](const std::vector<Complex>& roots, Complex target, double& ratio) {
    double d1 = INFINITY, d2 = INFINITY;
    Complex best = 0;
    for (auto v : roots) {
      double d = std::abs(v - target);
      if (d < d1) {
        d2 = d1;
        d1 = d;
        best = v;
      } else if (d < d2) {
        d2 = d;
      }
    }
    ratio = d2 > 0 ? d1 / d2 : INFINITY;
    return best;
  };
  Complex z0(x, y1 + Y0);
  Complex guess = guess_scales_with_z ? start_guess_fn_arg * z0 : start_guess_fn_arg;
  double ratio;
  Complex cur = nearest(roots_at(z0), guess, ratio);
  if (!(ratio < 0.3)) throw std::logic_error("branch start is ambiguous");
  double d = Y0;
  const double dmin = 1e-13 * (1 + std::abs(z));
  double next = d * 0.5;
  while (d > 0) {
    Complex zt(x, y1 + next);
    Complex cand = nearest(roots_at(zt), cur, ratio);
    if (ratio < 0.3) {
      cur = cand;
      d = next;
      if (d == 0) break;
      next = d < dmin ? 0 : d * 0.5;
    } else {
      double step = d - next;
      if (step < 1e-15 * (1 + std::abs(z))) throw std::logic_error("branch tracking stalled");
      next = d - step / 2;
    }
  }
  return cur;
}

// Near theta_max the map is written in delta = theta_max - theta, which stays
// representable when x^ underflows: ln x^ = (r+1) ln sin((r+1)delta) - ln c_r
// - ln sin(theta_max - delta) - r ln sin(theta_max + r delta).
double log_hatx_of_delta(double delta, int r) {
  double tm = theta_max(r), r1 = r + 1;
  double log_cr = r1 * std::log(r1) - r * std::log(double(r));
  return r1 * (std::log(r1 * delta) + log_sinc(r1 * delta)) - log_cr -
         std::log(std::sin(tm - delta)) - r * std::log(std::sin(tm + r * delta));
}

double dlog_hatx_ddelta(double delta, int r) {
  double tm = theta_max(r), r1 = r + 1;
  return r1 * (1 / delta + r1 * cot_minus_inv(r1 * delta)) + 1 / std::tan(tm - delta) -
         double(r) * r / std::tan(tm + r * delta);
}

// ln x^ at the switch between the theta and delta solvers.
double log_hatx_switch(int r) { return log_hatx_of_theta(0.5 * theta_max(r), r); }

// delta for ln x^ <= log_hatx_switch(r), by bisection in ln delta.
double delta_of_log_hatx(double log_xh, int r) {
  ensure_monotone(r);
  double lo = -2000, hi = std::log(0.5 * theta_max(r));
  while (true) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (log_hatx_of_delta(std::exp(mid), r) < log_xh)
      lo = mid;
    else
      hi = mid;
  }
  double u = 0.5 * (lo + hi), delta = std::exp(u);
  double d = delta * dlog_hatx_ddelta(delta, r);
  if (d != 0) {
    double u2 = u - (log_hatx_of_delta(delta, r) - log_xh) / d;
    if (u2 > lo && u2 < hi) delta = std::exp(u2);
  }
  return delta;
}

// u_r(x) from delta, with x^{r-1}/x^ folded into exp(-ln x).
double u_at_delta(double delta, double log_x, int r) {
  double tm = theta_max(r), th = tm - delta, r1 = r + 1;
  double s1 = std::sin(tm - delta), sr = std::sin(tm + r * delta);
  double log_sr1 = std::log(r1 * delta) + log_sinc(r1 * delta);
  Complex den = r1 * sr - double(r) * std::polar(1.0, th) * std::exp(log_sr1);
  return r * r1 / kPi * std::exp(log_sr1 - log_x) * s1 * sr / std::norm(den);
}

bool on_support(Complex z) { return z.imag() == 0 && z.real() >= 0 && z.real() <= 1; }

}  // namespace

double log_hatx_of_theta(double theta, int r) {
  require_r(r);
  return (r + 1) * log_sinc((r + 1) * theta) - log_sinc(theta) - r * log_sinc(r * theta);
}

double dlog_hatx_dtheta(double theta, int r) {
  require_r(r);
  double r1 = r + 1;
  return r1 * r1 * cot_minus_inv(r1 * theta) - cot_minus_inv(theta) -
         double(r) * r * cot_minus_inv(r * theta);
}

double hatx_of_theta(double theta, int r) {
  require_r(r);
  if (theta <= 0) return 1;
  if (theta >= theta_max(r)) return 0;
  return std::exp(log_hatx_of_theta(theta, r));
}

double hatx_of_theta(const ThetaParam& t) { return hatx_of_theta(t.theta, t.r); }

bool hatx_is_monotone(int r, int npts) {
  double prev = 1.0, tm = theta_max(r);
  for (int i = 1; i <= npts; ++i) {
    double v = log_hatx_of_theta(tm * i / (npts + 1), r);
    if (i > 1 && !(v < prev)) return false;
    prev = v;
  }
  return true;
}

double theta_of_log_hatx(double log_xh, int r) {
  require_r(r);
  if (log_xh >= 0) return 0;
  if (std::isinf(log_xh)) return theta_max(r);
  ensure_monotone(r);
  double lo = 0, hi = theta_max(r);
  while (true) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (log_hatx_of_theta(mid, r) > log_xh)
      lo = mid;
    else
      hi = mid;
  }
  double th = 0.5 * (lo + hi);
  // one safeguarded Newton step on ln x^
  double d = dlog_hatx_dtheta(th, r);
  if (d != 0) {
    double t2 = th - (log_hatx_of_theta(th, r) - log_xh) / d;
    if (t2 > lo && t2 < hi) th = t2;
  }
  return th;
}

double theta_of_hatx(double xh, int r) {
  require_r(r);
  if (xh >= 1) return 0;
  if (xh <= 0) return theta_max(r);
  return theta_of_log_hatx(std::log(xh), r);
}

double w_density_at_theta(double theta, int r) {
  double xh = hatx_of_theta(theta, r);
  double s1 = std::sin(theta), sr = std::sin(r * theta), sr1 = std::sin((r + 1) * theta);
  Complex den = double(r + 1) * sr - double(r) * std::polar(1.0, theta) * sr1;
  return (r + 1) / (kPi * xh) * s1 * sr * sr1 / std::norm(den);
}

double w_density(double xh, int r) {
  if (!(xh > 0 && xh < 1)) throw DomainError("w_density needs 0 < x^ < 1");
  return w_density_at_theta(theta_of_hatx(xh, r), r);
}

double u_density(double x, int r) {
  if (!(x > 0 && x < 1)) throw DomainError("u_density needs 0 < x < 1");
  return u_at_log_x(std::log(x), r);
}

double u_at_log_x(double log_x, int r) {
  if (!(log_x < 0)) throw DomainError("u_at_log_x needs log x < 0");
  require_r(r);
  if (r * log_x < log_hatx_switch(r)) return u_at_delta(delta_of_log_hatx(r * log_x, r), log_x, r);
  double th = theta_of_log_hatx(r * log_x, r);
  return r * std::exp((r - 1) * log_x) * w_density_at_theta(th, r);
}

double limit_cdf(double x, int r) {
  require_r(r);
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  double lx = r * std::log(x);
  if (lx < log_hatx_switch(r)) return (r + 1) * delta_of_log_hatx(lx, r) / kPi;
  return 1 - (r + 1) * theta_of_log_hatx(lx, r) / kPi;
}

double u_closed_r2(double x) {
  if (!(x > 0 && x < 1)) throw DomainError("u_closed_r2 needs 0 < x < 1");
  double s = std::sqrt((1 - x) * (1 + x));
  double plus = std::cbrt(1 + s), minus = std::cbrt(x * x / (1 + s));
  return std::sqrt(3.0) / (2 * kPi) * (plus + minus) / (std::cbrt(x) * s);
}

double u_integral(int r, double a, double b) {
  require_r(r);
  a = std::max(a, 0.0);
  b = std::min(b, 1.0);
  if (!(b > a)) return 0;
  double total = 0;
  // x = t^{r+1} near 0
  if (a < 0.5) {
    double hi = std::min(b, 0.5);
    auto f = [r](double t) {
      if (t <= 0) return 0.0;
      return u_at_log_x((r + 1) * std::log(t), r) * (r + 1) * std::pow(t, r);
    };
    total += gk_integrate(f, std::pow(a, 1.0 / (r + 1)), std::pow(hi, 1.0 / (r + 1)));
  }
  // x = 1 - s^2 near 1
  if (b > 0.5) {
    double lo = std::max(a, 0.5);
    auto f = [r](double s) {
      if (s <= 0) return 0.0;
      return u_at_log_x(std::log1p(-s * s), r) * 2 * s;
    };
    total += gk_integrate(f, std::sqrt(1 - b), std::sqrt(1 - lo));
  }
  return total;
}

std::vector<Complex> poly_roots(std::span<const Complex> coeffs) {
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  std::vector<Complex> roots;
  // roots at the origin
  std::size_t lead = 0;
  while (lead < c.size() && c[lead] == 0.0) ++lead;
  for (std::size_t i = 0; i < lead && i + 1 < c.size(); ++i) roots.push_back(0.0);
  c.erase(c.begin(), c.begin() + std::min(lead, c.size()));
  int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return roots;
  if (n == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }
  double R = std::pow(std::abs(c[0]) / std::abs(c[n]), 1.0 / n);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(R, 2 * kPi * k / n + 0.4);
  for (int it = 0; it < 1000; ++it) {
    bool done = true;
    for (int k = 0; k < n; ++k) {
      auto [p, d] = eval_pd(c, z[k]);
      if (p == 0.0) continue;
      Complex ratio = p / d;
      Complex s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      Complex w = ratio / (1.0 - ratio * s);
      z[k] -= w;
      if (std::abs(w) > 1e-15 * std::abs(z[k])) done = false;
    }
    if (done) break;
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::vector<Complex> algebraic_solutions(Complex z, int r) {
  require_r(r);
  if (z == 0.0) throw DomainError("algebraic_solutions needs z != 0");
  std::vector<Complex> out;
  for (auto v : general_v_roots(z, r)) out.push_back(s_from_v(z, v));
  return out;
}

std::array<Complex, 3> cubic_branches_r2(Complex z) {
  if (on_support(z)) throw DomainError("cubic branches are evaluated off [0,1]");
  bool lower = z.imag() < 0;
  Complex zu = lower ? std::conj(z) : z;
  double m1 = 1 / std::sqrt(3.0);
  Complex v1 = track(cubic_v_roots, zu, Complex(-3.0), true);
  Complex v2 = track(cubic_v_roots, zu, Complex(m1), false);
  Complex v3 = track(cubic_v_roots, zu, Complex(-m1), false);
  std::array<Complex, 3> s{s_from_v(zu, v1), s_from_v(zu, v2), s_from_v(zu, v3)};
  if (lower)
    for (auto& v : s) v = std::conj(v);
  return s;
}

Complex stieltjes_algebraic(Complex z, int r) {
  require_r(r);
  if (on_support(z)) throw DomainError("the Stieltjes transform is evaluated off [0,1]");
  bool lower = z.imag() < 0;
  Complex zu = lower ? std::conj(z) : z;
  double m1 = std::pow(r + 1.0, -1.0 / r);
  auto roots = [r](Complex w) { return general_v_roots(w, r); };
  Complex v = track(roots, zu, Complex(m1), false);
  Complex s = s_from_v(zu, v);
  return lower ? std::conj(s) : s;
}

AlgebraicResidual algebraic_residual(Complex z, Complex S, int r) {
  require_r(r);
  Complex T = z * S;
  Complex a = z * std::pow(S, r + 1);
  Complex b = (T + double(r)) * std::pow(T - 1.0, r);
  double sa = std::max(std::abs(a), std::abs(b));
  AlgebraicResidual res{};
  res.s_form = sa > 0 ? std::abs(a - b) / sa : 0;
  Complex W = T / (T - 1.0);
  Complex zr = std::pow(z, r);
  Complex t1 = std::pow(W, r + 1), t2 = double(r + 1) * zr * W, t3 = double(r) * zr;
  double sw = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
  res.w_form = sw > 0 ? std::abs(t1 - t2 + t3) / sw : 0;
  return res;
}

Complex binomial_sum_form(Complex z, Complex S, int r) {
  Complex T = z * S, Tl = 1, sum = 0;
  for (int l = 0; l <= r + 1; ++l) {
    double sg = ((r + l + 1) % 2) ? -1.0 : 1.0;
    sum += sg * binomial(r + 1, l) * double(r - l) * Tl;
    Tl *= T;
  }
  return sum;
}

Complex stieltjes_limit_quadrature(Complex z, int r) {
  require_r(r);
  if (on_support(z)) throw DomainError("the Stieltjes transform is evaluated off [0,1]");
  auto x_of = [r](double th) { return std::pow(hatx_of_theta(th, r), 1.0 / r); };
  auto re = [&](double th) { return (1.0 / (z - x_of(th))).real(); };
  auto im = [&](double th) { return (1.0 / (z - x_of(th))).imag(); };
  double c = (r + 1) / kPi, tm = theta_max(r);
  return c * Complex(gk_integrate(re, 0, tm), gk_integrate(im, 0, tm));
}

double stieltjes_perron_density(double x, int r) {
  if (!(x > 0 && x < 1)) throw DomainError("Stieltjes-Perron needs 0 < x < 1");
  std::array<double, 3> f{};
  for (int i = 0; i < 3; ++i)
    f[i] = -stieltjes_algebraic(Complex(x, kPerronEps[i]), r).imag() / kPi;
  // eps, eps/2, eps/4: cancels the O(eps) and O(eps^2) terms
  return (8 * f[2] - 6 * f[1] + f[0]) / 3;
}

double ks_distance(const ZeroSet& zs, int r) {
  double worst = 0;
  int n = zs.n;
  for (int i = 0; i < n; ++i) {
    double F = limit_cdf(zs.zeros[i], r);
    worst = std::max({worst, std::abs(double(i + 1) / n - F), std::abs(double(i) / n - F)});
  }
  return worst;
}

std::pair<double, double> endpoint_exponents(int r) {
  require_r(r);
  const int m = 25;
  auto slope = [](const std::vector<double>& X, const std::vector<double>& Y) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < X.size(); ++i) {
      mx += X[i];
      my += Y[i];
    }
    mx /= X.size();
    my /= Y.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < X.size(); ++i) {
      sxy += (X[i] - mx) * (Y[i] - my);
      sxx += (X[i] - mx) * (X[i] - mx);
    }
    return sxy / sxx;
  };
  std::vector<double> lx0, ly0, lx1, ly1;
  for (int i = 0; i < m; ++i) {
    double e = -6 + 3.0 * i / (m - 1);
    double t = std::pow(10.0, e);
    lx0.push_back(std::log(t));
    ly0.push_back(std::log(u_density(t, r)));
    lx1.push_back(std::log(t));
    ly1.push_back(std::log(u_at_log_x(std::log1p(-t) / r, r)));
  }
  return {slope(lx0, ly0), slope(lx1, ly1)};
}

DensityCurve density_curve_theta(int r, int samples) {
  require_r(r);
  if (samples < 2) throw DomainError("density curve needs at least 2 samples");
  DensityCurve c{r, {}, {}};
  double tm = theta_max(r);
  for (int i = samples; i >= 1; --i) {
    double s = double(i) / (samples + 1);
    double th = tm * s * s * s * (10 - 15 * s + 6 * s * s);
    double xh = hatx_of_theta(th, r);
    double x = std::pow(xh, 1.0 / r);
    double u = r * std::pow(x, r - 1) * w_density_at_theta(th, r);
    c.samples.push_back({x, u, 1 - (r + 1) * th / kPi});
    c.theta_grid.push_back(th);
  }
  return c;
}

DensityCurve density_curve_uniform(int r, int samples) {
  require_r(r);
  if (samples < 1) throw DomainError("density curve needs at least 1 sample");
  DensityCurve c{r, {}, {}};
  for (int i = 1; i <= samples; ++i) {
    double x = double(i) / (samples + 1);
    double th = theta_of_log_hatx(r * std::log(x), r);
    double u = r * std::pow(x, r - 1) * w_density_at_theta(th, r);
    c.samples.push_back({x, u, 1 - (r + 1) * th / kPi});
    c.theta_grid.push_back(th);
  }
  return c;
}

double curve_mass(const DensityCurve& c) {
  const auto& s = c.samples;
  if (s.empty()) return 0;
  double m = s.front().F + (1 - s.back().F);
  for (std::size_t i = 1; i < s.size(); ++i) m += 0.5 * (s[i].u + s[i - 1].u) * (s[i].x - s[i - 1].x);
  return m;
}

}  // namespace jacang
