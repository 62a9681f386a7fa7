#include "jacang/polynomials.hpp"

#include <cmath>
#include <initializer_list>
#include <sstream>

namespace jacang {

Params::Params(int r_, double alpha_, double beta_) : r(r_), alpha(alpha_), beta(beta_) {
  if (r < 1) throw DomainError("r must be an integer >= 1");
  if (!(alpha > -1) || !std::isfinite(alpha)) throw DomainError("alpha must be finite and > -1");
  if (!(beta > -1) || !std::isfinite(beta)) throw DomainError("beta must be finite and > -1");
}

int MultiIndexTag::size(int r) const {
  switch (offset) {
    case Offset::diagonal: return r * n;
    case Offset::plus: return r * n + 1;
    case Offset::minus: return r * n - 1;
  }
  return 0;
}

int MultiIndexTag::degree(int j) const {
  switch (offset) {
    case Offset::diagonal: return n - 1;
    case Offset::plus: return j == k ? n : n - 1;
    case Offset::minus: return j == k ? n - 2 : n - 1;
  }
  return -1;
}

std::string MultiIndexTag::describe() const {
  std::ostringstream os;
  os << "level " << n;
  if (offset == Offset::plus) os << " +e" << k;
  if (offset == Offset::minus) os << " -e" << k;
  return os.str();
}

TypeIVector<double> to_double(const TypeIVector<hp::Real>& v) {
  TypeIVector<double> out{v.params, v.tag, {}, std::nullopt};
  for (const auto& p : v.polys) out.polys.push_back(to_double(p));
  if (v.base) out.base = to_double(*v.base);
  return out;
}

namespace {

using H = hp::Real;
using HC = hp::Complex;

struct SignedLogGamma {
  H log_abs;
  int sign = 1;
  bool pole = false;
};

// ln|Gamma(x)| with sign; reflection for negative non-integer x.
SignedLogGamma signed_lgamma(const H& x) {
  if (x > 0) return {log_gamma(x), 1, false};
  if (floor(x) == x) return {H(0), 0, true};
  H pi = pi_v<H>();
  H s = sin(pi * x);
  return {log(pi) - log(abs(s)) - log_gamma(1 - x), s > 0 ? 1 : -1, false};
}

// Gamma(a)/Gamma(b); zero if b is a pole, error if a is.
H gamma_quot(const H& a, const H& b) {
  auto na = signed_lgamma(a);
  auto nb = signed_lgamma(b);
  if (na.pole) throw DomainError("Gamma pole in a numerator argument");
  if (nb.pole) return H(0);
  return na.sign * nb.sign * exp(na.log_abs - nb.log_abs);
}

// Product of Gamma(num) over product of Gamma(den) with signs, in high precision;
// negative non-integer arguments are fine, a numerator pole is an error.
double signed_gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den,
                          const char* what) {
  H log_abs = 0;
  int sign = 1;
  for (double a : num) {
    auto g = signed_lgamma(H(a));
    if (g.pole) throw DomainError(std::string("Gamma pole in ") + what);
    log_abs += g.log_abs;
    sign *= g.sign;
  }
  for (double b : den) {
    auto g = signed_lgamma(H(b));
    if (g.pole) return 0;
    log_abs -= g.log_abs;
    sign *= g.sign;
  }
  return sign * to_double(exp(log_abs));
}

// Coefficients of p_n(x; alpha, beta) for raw (alpha, beta): coefficient k is
// C(n,k) (-1)^{n-k} Gamma(n+alpha+s_k+1) / (Gamma(n+alpha+1) Gamma(s_k+1)),
// s_k = (beta+k)/r. Only one Gamma quotient per residue class mod r is
// evaluated; s_{k+r} = s_k + 1 gives the rest by an exact step.
std::vector<H> base_coeffs(int n, int r, const H& alpha, const H& beta) {
  std::vector<H> ratio(n + 1);
  H na1 = n + alpha + 1;
  for (int k = 0; k <= n; ++k) {
    H s = (beta + k) / r;
    if (k >= r) {
      H sp = s - 1;
      if (sp + 1 != 0) {
        ratio[k] = ratio[k - r] * (na1 + sp) / (sp + 1);
        continue;
      }
    }
    ratio[k] = gamma_quot(na1 + s, s + 1);
  }
  auto gn = signed_lgamma(na1);
  if (gn.pole) throw DomainError("Gamma pole at n + alpha + 1");
  H inv = gn.sign * exp(-gn.log_abs);
  std::vector<H> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    H v = binomial_hp(n, k) * ratio[k] * inv;
    c[k] = ((n - k) % 2 == 0) ? v : H(-v);
  }
  return c;
}

// p_n / nu_n (monic); nu_n is never formed separately so n = 0 is exact.
std::vector<H> monic_coeffs(int n, int r, const H& alpha, const H& beta) {
  if (n == 0) return {H(1)};
  auto c = base_coeffs(n, r, alpha, beta);
  H lead = c[n];
  for (auto& x : c) x /= lead;
  c[n] = 1;
  return c;
}

std::vector<HC> rotated(const std::vector<H>& c, long m, int r) {
  std::vector<HC> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k)
    out[k] = HC(c[k]) * unit_root<H>(m * static_cast<long>(k), r);
  return out;
}

std::vector<HC> rotated(const std::vector<HC>& c, long m, int r) {
  std::vector<HC> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k)
    out[k] = c[k] * unit_root<H>(m * static_cast<long>(k), r);
  return out;
}

H norm_inf(const std::vector<HC>& c) {
  H m = 0;
  for (const auto& z : c) m = std::max(m, H(abs(z)));
  return m;
}

// Removes the coefficient that cancels by construction after checking it.
Poly<HC> with_degree(std::vector<HC> c, int deg, const char* what) {
  if (static_cast<int>(c.size()) > deg + 1) {
    H scale = norm_inf(c);
    for (std::size_t i = deg + 1; i < c.size(); ++i)
      if (abs(c[i]) > H("1e-10") * scale)
        throw std::logic_error(std::string("structural cancellation failed in ") + what);
    c.resize(deg < 0 ? 0 : deg + 1);
  }
  return Poly<HC>(std::move(c));
}

TypeIVector<H> diagonal_hp(int level, const Params& P) {
  if (level < 1) throw DomainError("diagonal level must be >= 1");
  int n = level - 1;
  check_degree_cap(n);
  int r = P.r;
  H a = P.alpha, b = P.beta;
  std::vector<H> base;
  if (n == 0) {
    // lambda_{1,r} nu_0 with x Gamma(x) folded into Gamma(x+1).
    H x = a + b / r + 1;
    base = {gamma_quot(x + 1, a + 1) / exp(log_gamma(H(b / r + 1)))};
  } else {
    H lam = pochhammer(H(r * n) + r * a + b + r, n + 1) / (r * pochhammer(H(1), n));
    base = base_coeffs(n, r, a, b);
    for (auto& c : base) c *= lam;
  }
  TypeIVector<H> v{P, MultiIndexTag::diagonal(level), {}, Poly<H>(base)};
  for (int j = 1; j <= r; ++j) v.polys.emplace_back(rotated(base, 1 - j, r));
  return v;
}

// A_l for l = 0..r-1 (up to the 1/tau factor already applied).
std::vector<std::vector<HC>> up_components(int n, const Params& P) {
  int r = P.r;
  H a = P.alpha, b = P.beta;
  H inv_tau;
  if (n == 0) {
    H s = (b + 1) / r;
    inv_tau = gamma_quot(a + 1 + s, s) / exp(log_gamma(a + 1));
  } else {
    H s = (b + n + 1) / r;
    H l = log_gamma(n + a + s) + log_gamma(H(r * n + n) + r * a + b + 2) - log(H(r)) -
          log_gamma(H(n + 1)) - log_gamma(n + a + 1) - log_gamma(s) -
          log_gamma(H(r * n) + r * a + b + 1);
    inv_tau = exp(l);
  }
  std::vector<std::vector<H>> mon(r);
  for (int j = 0; j < r; ++j) mon[j] = monic_coeffs(n, r, a, b - j);
  std::vector<std::vector<HC>> A(r, std::vector<HC>(n + 1, HC(0)));
  for (int l = 0; l < r; ++l)
    for (int j = 0; j < r; ++j) {
      HC w = unit_root<H>(static_cast<long>(l) * j, r) * inv_tau;
      for (int m = 0; m <= n; ++m) A[l][m] += w * mon[j][m];
    }
  return A;
}

TypeIVector<H> up_hp(int n, int k, const Params& P) {
  int r = P.r;
  if (n < 0) throw DomainError("type1_up: n must be >= 0");
  if (k < 1 || k > r) throw DomainError("ray index k must be in 1..r");
  check_degree_cap(n);
  auto A = up_components(n, P);
  TypeIVector<H> v{P, MultiIndexTag::plus(n, k), {}, std::nullopt};
  HC phase = unit_root<H>(1 - k, r);
  for (int j = 1; j <= r; ++j) {
    int l = ((j - k) % r + r) % r;
    auto c = rotated(A[l], 1 - j, r);
    for (auto& z : c) z *= phase;
    v.polys.push_back(with_degree(std::move(c), v.tag.degree(j), "type1_up"));
  }
  return v;
}

TypeIVector<H> down_hp(int n, int k, const Params& P) {
  int r = P.r;
  if (n < 1) throw DomainError("type1_down: n must be >= 1");
  if (k < 1 || k > r) throw DomainError("ray index k must be in 1..r");
  check_degree_cap(n);
  if (r == 1) {
    // n - e_1 is the diagonal index n - 1.
    TypeIVector<H> v{P, MultiIndexTag::minus(n, k), {}, std::nullopt};
    if (n == 1) {
      v.polys.emplace_back();
      return v;
    }
    auto d = diagonal_hp(n - 1, P);
    v.polys = d.polys;
    return v;
  }
  H a = P.alpha, b = P.beta;
  // K = nu_{n-1}^{(a,b)} nu_{n-1}^{(a,b-1)} / gamma_{n,r}, simplified so that
  // every Gamma argument is positive.
  H x0 = n + a + (b + n - 2) / r;
  H K = exp(log_gamma(x0 + 1) - log_gamma(H(n)) - log_gamma(n + a) -
            log_gamma((b + n - 2) / r + 1));
  for (int i = 0; i + 1 < n; ++i) K *= H(r * n) + r * a + b - 1 + i;
  auto P1 = monic_coeffs(n - 1, r, a, b - 1);
  auto P0 = monic_coeffs(n - 1, r, a, b);
  TypeIVector<H> v{P, MultiIndexTag::minus(n, k), {}, std::nullopt};
  HC wk = unit_root<H>(k - 1, r);
  for (int j = 1; j <= r; ++j) {
    HC wj = unit_root<H>(j - 1, r);
    std::vector<HC> c(n);
    for (int m = 0; m < n; ++m) c[m] = K * (wj * P1[m] - wk * P0[m]);
    v.polys.push_back(with_degree(rotated(c, 1 - j, r), v.tag.degree(j), "type1_down"));
  }
  return v;
}

}  // namespace

template <>
Poly<hp::Real> p_coeffs_shifted<hp::Real>(int n, int r, double alpha, double beta) {
  if (n < 0) throw DomainError("degree must be >= 0");
  if (r < 1) throw DomainError("r must be >= 1");
  check_degree_cap(n);
  return Poly<H>(base_coeffs(n, r, H(alpha), H(beta)));
}

template <>
Poly<double> p_coeffs_shifted<double>(int n, int r, double alpha, double beta) {
  return to_double(p_coeffs_shifted<H>(n, r, alpha, beta));
}

template <>
Poly<hp::Real> p_coeffs<hp::Real>(int n, const Params& P) {
  return p_coeffs_shifted<H>(n, P.r, P.alpha, P.beta);
}

template <>
Poly<double> p_coeffs<double>(int n, const Params& P) {
  return p_coeffs_shifted<double>(n, P.r, P.alpha, P.beta);
}

template <>
Poly<hp::Real> q_coeffs<hp::Real>(int n, const Params& P) {
  return p_coeffs_shifted<H>(n, P.r, P.alpha, P.beta - 1);
}

template <>
Poly<double> q_coeffs<double>(int n, const Params& P) {
  return p_coeffs_shifted<double>(n, P.r, P.alpha, P.beta - 1);
}

double leading_nu(int n, const Params& P) {
  double s = (P.beta + n) / P.r;
  return signed_gamma_ratio({n + P.alpha + s + 1}, {n + P.alpha + 1, s + 1}, "nu");
}

double lambda_const(int n, const Params& P) {
  int r = P.r;
  return pochhammer(r * n + r * P.alpha + P.beta + r, n + 1) / (r * factorial(n));
}

double tau_const(int n, const Params& P) {
  int r = P.r;
  double a = P.alpha, b = P.beta;
  if (n == 0) {
    double num[] = {(b + 1) / r, a + 1};
    double den[] = {(b + 1) / r + a + 1};
    return gamma_ratio(num, den);
  }
  double s = (b + n + 1) / r;
  double num[] = {double(n + 1), n + a + 1, s, r * n + r * a + b + 1};
  double den[] = {n + a + s, r * n + n + r * a + b + 2};
  return r * gamma_ratio(num, den);
}

double gamma_const(int n, const Params& P) {
  int r = P.r;
  double a = P.alpha, b = P.beta;
  if (n < 1) throw DomainError("gamma_{n,r} needs n >= 1");
  double x = n + a + (n + b - 1) / r;
  double poch = pochhammer(r * n + r * a + b - 1, n);
  if (poch == 0) throw DomainError("gamma_{n,r}: vanishing Pochhammer factor");
  return r * signed_gamma_ratio({double(n), x}, {n + a, (n + b - 1) / r + 1}, "gamma_{n,r}") / poch;
}

template <>
TypeIVector<hp::Real> type1_diagonal<hp::Real>(int level, const Params& P) {
  return diagonal_hp(level, P);
}

template <>
TypeIVector<double> type1_diagonal<double>(int level, const Params& P) {
  return to_double(diagonal_hp(level, P));
}

template <>
TypeIVector<hp::Real> type1_up<hp::Real>(int n, int k, const Params& P) {
  return up_hp(n, k, P);
}

template <>
TypeIVector<double> type1_up<double>(int n, int k, const Params& P) {
  return to_double(up_hp(n, k, P));
}

template <>
TypeIVector<hp::Real> type1_down<hp::Real>(int n, int k, const Params& P) {
  return down_hp(n, k, P);
}

template <>
TypeIVector<double> type1_down<double>(int n, int k, const Params& P) {
  return to_double(down_hp(n, k, P));
}

template <>
TypeIVector<hp::Real> type1_vector<hp::Real>(const MultiIndexTag& t, const Params& P) {
  switch (t.offset) {
    case Offset::diagonal: return diagonal_hp(t.n, P);
    case Offset::plus: return up_hp(t.n, t.k, P);
    case Offset::minus: return down_hp(t.n, t.k, P);
  }
  throw DomainError("unknown multi-index offset");
}

template <>
TypeIVector<double> type1_vector<double>(const MultiIndexTag& t, const Params& P) {
  return to_double(type1_vector<hp::Real>(t, P));
}

// ---- r = 2 closed forms ----

namespace {

Poly<double> reflect(const Poly<double>& p, double sign) {
  std::vector<double> c(p.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k)
    if (k % 2 == 1) c[k] = -c[k];
  for (auto& x : c) x *= sign;
  return Poly<double>(std::move(c));
}

double r2_ratio(int n, double alpha, double s) {
  return signed_gamma_ratio({n + alpha + s + 1}, {n + alpha + 1, s + 1}, "r = 2 closed form");
}

R2Pair assemble_r2(int n, R2Family which, const Poly<double>& p, const Poly<double>& q,
                   double diag_const, double nu1, double nu2, double gam) {
  R2Pair out;
  switch (which) {
    case R2Family::diag:
      out.B = poly_scale(p, diag_const);
      out.A = reflect(out.B, -1.0);
      break;
    case R2Family::up: {
      // B_{n,n+1}; A_{n,n+1}(x) = B_{n+1,n}(-x).
      out.B = poly_scale(poly_axpy(nu2, p, poly_scale(q, nu1)), 1.0 / gam);
      auto Bdown = poly_scale(poly_axpy(-nu2, p, poly_scale(q, nu1)), 1.0 / gam);
      out.A = reflect(Bdown.truncated(n - 1), 1.0);
      break;
    }
    case R2Family::down: {
      // B_{n+1,n}; A_{n+1,n}(x) = B_{n,n+1}(-x).
      out.B = poly_scale(poly_axpy(-nu2, p, poly_scale(q, nu1)), 1.0 / gam).truncated(n - 1);
      auto Bup = poly_scale(poly_axpy(nu2, p, poly_scale(q, nu1)), 1.0 / gam);
      out.A = reflect(Bup, 1.0);
      break;
    }
  }
  return out;
}

}  // namespace

Poly<double> legendre_p_r2(int n) {
  std::vector<double> c(n + 1);
  for (int k = 0; k <= n; ++k)
    c[k] = binomial(n, k) * gen_binomial(n + k / 2.0, n) * (((n - k) % 2) ? -1.0 : 1.0);
  return Poly<double>(std::move(c));
}

Poly<double> legendre_q_r2(int n) {
  std::vector<double> c(n + 1);
  for (int k = 0; k <= n; ++k)
    c[k] = binomial(n, k) * gen_binomial(n + (k - 1) / 2.0, n) * (((n - k) % 2) ? -1.0 : 1.0);
  return Poly<double>(std::move(c));
}

Poly<double> jacobi_p_r2(int n, double alpha, double beta) {
  std::vector<double> c(n + 1);
  for (int k = 0; k <= n; ++k)
    c[k] = binomial(n, k) * r2_ratio(n, alpha, (beta + k) / 2) * (((n - k) % 2) ? -1.0 : 1.0);
  return Poly<double>(std::move(c));
}

Poly<double> jacobi_q_r2(int n, double alpha, double beta) {
  std::vector<double> c(n + 1);
  for (int k = 0; k <= n; ++k)
    c[k] = binomial(n, k) * r2_ratio(n, alpha, (beta + k - 1) / 2) * (((n - k) % 2) ? -1.0 : 1.0);
  return Poly<double>(std::move(c));
}

R2Pair legendre_angelesco_r2(int n, R2Family which) {
  if (n < 0) throw DomainError("n must be >= 0");
  double diag = 0.5 * factorial(3 * n + 2) / (factorial(n) * factorial(2 * n + 1));
  double nu1 = gen_binomial(n + n / 2.0, n);
  double nu2 = gen_binomial(n + (n - 1) / 2.0, n);
  double gam = 2 * pochhammer(n / 2.0 + 1, n) * factorial(2 * n) / factorial(3 * n + 1);
  return assemble_r2(n, which, legendre_p_r2(n), legendre_q_r2(n), diag, nu1, nu2, gam);
}

R2Pair jacobi_angelesco_r2(int n, R2Family which, double alpha, double beta) {
  if (n < 0) throw DomainError("n must be >= 0");
  Params P(2, alpha, beta);
  double diag = 0.5 * pochhammer(2 * alpha + beta + 2 * n + 2, n + 1) / factorial(n);
  if (which == R2Family::diag)
    return assemble_r2(n, which, jacobi_p_r2(n, alpha, beta), Poly<double>(), diag, 0, 0, 1);
  double nu1 = r2_ratio(n, alpha, (beta + n) / 2);
  double nu2 = signed_gamma_ratio({n + alpha + (beta + n + 1) / 2},
                                  {n + alpha + 1, (beta + n + 1) / 2}, "nu_{n,2}");
  double gam = 2 * factorial(n) * nu1 / pochhammer(2 * n + 2 * alpha + beta + 1, n + 1);
  return assemble_r2(n, which, jacobi_p_r2(n, alpha, beta), jacobi_q_r2(n, alpha, beta), diag,
                     nu1, nu2, gam);
}

}  // namespace jacang
