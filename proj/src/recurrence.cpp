#include "jacang/recurrence.hpp"

#include <algorithm>
#include <cmath>

namespace jacang {

namespace {

using H = hp::Real;
using HC = hp::Complex;

H lg(const H& x) { return log_gamma(x); }

// Gamma with sign for the r = 2 closed forms, whose arguments may be negative.
H tg(const H& x) {
  if (x <= 0 && x == floor(x)) throw DomainError("Gamma pole in recurrence closed form");
  return boost::multiprecision::tgamma(x);
}

H coeff_a_hp(int n, const Params& P) {
  if (n < 1) throw DomainError("coeff_a needs n >= 1");
  int r = P.r;
  H al(P.alpha), be(P.beta), nn(n);
  H pre = nn * (nn + al) / ((r * nn + nn + r * al + be) * (r * nn + nn + r * al + be + 1));
  H g1 = (be + nn + 1) / r;                  // numerator Gamma
  H g2 = nn + al + (be + nn - 1) / r;        // numerator Gamma
  H d1 = (be + nn - 1) / r + 1;              // denominator Gamma
  H d2 = nn + al + (be + nn + 1) / r;        // denominator Gamma
  H lin = (r * nn + r * al + be) / r;        // (rn + r alpha + beta)/r
  H lnum;
  if (n == 1) {
    // lin == g2 here; fold lin * Gamma(g2) = Gamma(g2 + 1), since g2 may be <= 0.
    lnum = lg(g1) + lg(g2 + 1);
    return pre * exp(lnum - lg(d1) - lg(d2));
  }
  lnum = lg(g1) + lg(g2);
  return pre * lin * exp(lnum - lg(d1) - lg(d2));
}

H coeff_b_hp(int n, const Params& P) {
  if (n < 1) throw DomainError("coeff_b needs n >= 1");
  int r = P.r;
  if (r < 2) throw DomainError("coeff_b is defined only for r >= 2");
  H al(P.alpha), be(P.beta), nn(n);
  H x0 = nn + al + (nn + be - 2) / r;
  H lin = nn + al + (be - 1) / r;
  H y0 = nn + al + (nn + be - 1) / r;  // (y0) Gamma(y0) = Gamma(y0 + 1)
  H g = (nn + be - 1) / r + 1;
  H d = (nn + be - 2) / r + 1;
  H tail = lg(g) - lg(y0 + 1) - lg(d);
  if (n == 1) return exp(lg(x0 + 1) + tail);  // lin == x0
  return lin * exp(lg(x0) + tail);
}

// x A_{n,j} - A_{n-e_k,j} - b A_{n,j} - sum_l a_l A_{n+e_l,j}
double residual_impl(int n, int k, const Params& P, std::span<const Complex> points, const H& a,
                     const H& b) {
  int r = P.r;
  if (r < 2) throw DomainError("recurrence_residual needs r >= 2");
  if (n < 1) throw DomainError("recurrence_residual needs n >= 1");
  if (k < 1 || k > r) throw DomainError("ray index k must be in 1..r");
  auto diag = type1_diagonal<H>(n, P);
  auto down = type1_down<H>(n, k, P);
  std::vector<TypeIVector<H>> ups;
  for (int l = 1; l <= r; ++l) ups.push_back(type1_up<H>(n, l, P));
  HC bk = HC(b) * unit_root<H>(k - 1, r);
  std::vector<HC> al;
  for (int l = 1; l <= r; ++l) al.push_back(HC(a) * unit_root<H>(2L * (l - 1), r));

  H worst = 0, scale = 0;
  for (const Complex& zd : points) {
    HC z = to_hp(zd);
    for (int j = 0; j < r; ++j) {
      HC an = horner(diag.polys[j], z);
      HC t0 = z * an;
      HC t1 = horner(down.polys[j], z);
      HC t2 = bk * an;
      HC res = t0 - t1 - t2;
      H big = std::max({H(abs(t0)), H(abs(t1)), H(abs(t2))});
      for (int l = 0; l < r; ++l) {
        HC t = al[l] * horner(ups[l].polys[j], z);
        res -= t;
        big = std::max(big, H(abs(t)));
      }
      worst = std::max(worst, H(abs(res)));
      scale = std::max(scale, big);
    }
  }
  if (scale == 0) return 0;
  return to_double(H(worst / scale));
}

}  // namespace

Complex RecurrenceRow::a_ray(int l, int r) const {
  return a_scalar * unit_root<double>(2L * (l - 1), r);
}

Complex RecurrenceRow::b_ray(int k, int r) const {
  if (!b_scalar) throw DomainError("b is not defined for r = 1");
  return *b_scalar * unit_root<double>(k - 1, r);
}

double coeff_a(int n, const Params& P) { return to_double(coeff_a_hp(n, P)); }

double coeff_b(int n, const Params& P) { return to_double(coeff_b_hp(n, P)); }

RecurrenceRow recurrence_row(int n, const Params& P) {
  RecurrenceRow row;
  row.n = n;
  row.a_scalar = coeff_a(n, P);
  if (P.r >= 2) row.b_scalar = coeff_b(n, P);
  return row;
}

double a_limit(int r) { return r / std::pow(r + 1.0, 2.0 + 2.0 / r); }

double b_limit(int r) { return r / std::pow(r + 1.0, 1.0 + 1.0 / r); }

std::vector<Complex> ray_sample_points(int r, int per_ray) {
  if (r < 1 || per_ray < 1) throw DomainError("ray_sample_points needs r >= 1 and per_ray >= 1");
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(r) * per_ray);
  for (int j = 0; j < r; ++j) {
    Complex w = unit_root<double>(j, r);
    for (int i = 0; i < per_ray; ++i) {
      double t = 0.5 * (1 - std::cos((2 * i + 1) * std::numbers::pi / (2 * per_ray)));
      pts.push_back(t * w);
    }
  }
  return pts;
}

double recurrence_residual(int n, int k, const Params& P, std::span<const Complex> points) {
  return residual_impl(n, k, P, points, coeff_a_hp(n, P), coeff_b_hp(n, P));
}

double recurrence_residual(int n, int k, const Params& P, std::span<const Complex> points,
                           double a_scalar, double b_scalar) {
  return residual_impl(n, k, P, points, H(a_scalar), H(b_scalar));
}

double r2_a_closed(int n, double alpha, double beta) {
  if (n < 1) throw DomainError("r2_a_closed needs n >= 1");
  H nn(n), al(alpha), be(beta);
  H s = 3 * nn + 2 * al + be;
  return to_double(H(nn * (nn + al) * (2 * nn + 2 * al + be) / ((s + 1) * s * (s - 1))));
}

double r2_c_closed(int n, double alpha, double beta) {
  if (n < 1) throw DomainError("r2_c_closed needs n >= 1");
  H nn(n), al(alpha), be(beta);
  H x = nn + al + (nn + be) / 2 - 1;
  H lin = 2 * nn + 2 * al + be - 1;  // equals 2x when n = 1
  H num = (n == 1) ? H(2 * tg(x + 1)) : H(lin * tg(x));
  num *= tg((nn + be + 1) / 2);
  H den = (3 * nn + 2 * al + be - 1) * tg(nn + al + (nn + be - 1) / 2) * tg((nn + be) / 2);
  return to_double(H(num / den));
}

R2Translation r2_translation(int n, double alpha, double beta) {
  Params P(2, alpha, beta);
  double a = coeff_a(n, P);
  double b = coeff_b(n, P);
  return {a, a, -b, b};
}

}  // namespace jacang
