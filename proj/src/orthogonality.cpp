#include "jacang/orthogonality.hpp"

#include <algorithm>
#include <cmath>

namespace jacang {

namespace {

template <class T>
T beta_moment(int m, const Params& P) {
  T s = (T(m) + P.beta + 1) / P.r;
  T a1 = T(P.alpha) + 1;
  return exp(log_gamma(s) + log_gamma(a1) - log_gamma(s + a1)) / P.r;
}

}  // namespace

double moment(int m, const Params& P) {
  if (m < 0) throw DomainError("moment index must be >= 0");
  double s = (m + P.beta + 1) / P.r;
  double num[] = {s, P.alpha + 1};
  double den[] = {s + P.alpha + 1};
  return gamma_ratio(num, den) / P.r;
}

hp::Real moment_hp(int m, const Params& P) {
  if (m < 0) throw DomainError("moment index must be >= 0");
  return beta_moment<hp::Real>(m, P);
}

template <class T>
MomentTable<T>::MomentTable(const Params& P, int max_m) : params_(P) {
  if (max_m < 0) max_m = 0;
  values_.resize(max_m + 1);
  int r = P.r;
  for (int m = 0; m <= max_m; ++m) {
    if (m < r) {
      if constexpr (std::is_same_v<T, double>)
        values_[m] = moment(m, P);
      else
        values_[m] = beta_moment<T>(m, P);
    } else {
      // B(s+1, a+1) = B(s, a+1) s / (s+a+1)
      T s = (T(m - r) + P.beta + 1) / r;
      values_[m] = values_[m - r] * s / (s + P.alpha + 1);
    }
  }
}

template <class T>
const T& MomentTable<T>::operator()(int m) const {
  if (m < 0 || m >= static_cast<int>(values_.size()))
    throw std::out_of_range("moment index outside the table");
  return values_[m];
}

template class MomentTable<double>;
template class MomentTable<hp::Real>;

namespace {

template <class T>
int max_moment_needed_t(const TypeIVector<T>& v) {
  int deg = -1;
  for (const auto& p : v.polys) deg = std::max(deg, p.degree());
  return v.tag.size(v.params.r) + std::max(deg, 0) + 1;
}

// value and sum of |terms| of condition k
template <class T>
std::pair<std::complex<T>, T> ray_form_terms(int k, const TypeIVector<T>& v,
                                              const MomentTable<T>& mt, bool shortcut) {
  int r = v.params.r;
  using C = std::complex<T>;
  if (shortcut && v.base) {
    if ((k + 1) % r != 0) return {C(0), T(0)};
    T s = 0, mag = 0;
    const auto& b = v.base->coeffs();
    for (std::size_t m = 0; m < b.size(); ++m) {
      T t = b[m] * mt(k + static_cast<int>(m));
      s += t;
      using std::abs;
      mag += abs(t);
    }
    return {C(T(r) * s), T(r) * mag};
  }
  C total(0);
  T mag = 0;
  for (int j = 1; j <= r; ++j) {
    const auto& c = v.polys[j - 1].coeffs();
    C inner(0);
    for (std::size_t m = 0; m < c.size(); ++m) {
      C t = c[m] * unit_root<T>(static_cast<long>(j - 1) * static_cast<long>(m), r) *
            mt(k + static_cast<int>(m));
      inner += t;
      mag += abs(t);
    }
    total += unit_root<T>(static_cast<long>(j - 1) * (k + 1), r) * inner;
  }
  return {total, mag};
}

}  // namespace

template <class T>
std::complex<T> ray_form(int k, const TypeIVector<T>& v, const MomentTable<T>& mt) {
  return ray_form_terms(k, v, mt, true).first;
}

template <class T>
std::complex<T> ray_form(int k, const TypeIVector<T>& v) {
  MomentTable<T> mt(v.params, k + max_moment_needed_t(v));
  return ray_form(k, v, mt);
}

template <class T>
std::complex<T> ray_form_direct(int k, const TypeIVector<T>& v, const MomentTable<T>& mt) {
  return ray_form_terms(k, v, mt, false).first;
}

template std::complex<double> ray_form(int, const TypeIVector<double>&, const MomentTable<double>&);
template hp::Complex ray_form(int, const TypeIVector<hp::Real>&, const MomentTable<hp::Real>&);
template std::complex<double> ray_form(int, const TypeIVector<double>&);
template hp::Complex ray_form(int, const TypeIVector<hp::Real>&);
template std::complex<double> ray_form_direct(int, const TypeIVector<double>&,
                                              const MomentTable<double>&);
template hp::Complex ray_form_direct(int, const TypeIVector<hp::Real>&,
                                     const MomentTable<hp::Real>&);

OrthoReport verify_type1(const TypeIVector<hp::Real>& v, double tol,
                         const MomentTable<hp::Real>& mt) {
  OrthoReport rep;
  int N = v.tag.size(v.params.r);
  rep.conditions = N;
  hp::Real worst = 0, worst_scaled = 0;
  for (int k = 0; k + 1 < N; ++k) {
    auto [val, mag] = ray_form_terms(k, v, mt, true);
    hp::Real a = abs(val);
    worst = std::max(worst, a);
    if (mag > 0) worst_scaled = std::max(worst_scaled, hp::Real(a / mag));
  }
  rep.max_ortho_residual = to_double(worst);
  rep.max_scaled_residual = to_double(worst_scaled);
  hp::Complex norm(1);
  if (N >= 1) norm = ray_form_terms(N - 1, v, mt, true).first;
  rep.norm_value = to_double(norm);
  double norm_err = to_double(hp::Real(abs(norm - hp::Complex(1))));
  rep.pass = rep.max_ortho_residual <= tol && norm_err <= tol;
  return rep;
}

OrthoReport verify_type1(const TypeIVector<hp::Real>& v, double tol) {
  MomentTable<hp::Real> mt(v.params, max_moment_needed_t(v));
  return verify_type1(v, tol, mt);
}

OrthoReport verify_type1(const TypeIVector<double>& v, double tol) {
  TypeIVector<hp::Real> h{v.params, v.tag, {}, std::nullopt};
  // No base: the rounded rays are summed as stored.
  for (const auto& p : v.polys) h.polys.push_back(to_hp(p));
  return verify_type1(h, tol);
}

ModrReport modr_report(int n, const Params& P) {
  if (n < 1) throw DomainError("check_modr needs n >= 1");
  int r = P.r;
  auto p = p_coeffs<hp::Real>(n, P);
  MomentTable<hp::Real> mt(P, r * (n + 1) + n);
  // int x^{q-1} p_n(x) x^beta (1-x^r)^alpha dx
  auto pairing = [&](int q) {
    hp::Real s = 0;
    for (int m = 0; m <= n; ++m) s += p.coeff(m) * mt(q - 1 + m);
    return s;
  };
  ModrReport rep;
  hp::Real worst = 0;
  for (int j = 1; j <= n; ++j) worst = std::max(worst, hp::Real(abs(pairing(r * j))));
  rep.max_residual = to_double(worst);
  // S_{n+1} - S_0 = int p_n x^{beta-1} ((1-x^r)^{n+1} - 1)(1-x^r)^alpha dx
  hp::Real diff = 0;
  for (int i = 1; i <= n + 1; ++i) {
    hp::Real t = binomial_hp(n + 1, i) * pairing(r * i);
    diff += (i % 2) ? hp::Real(-t) : t;
  }
  hp::Real expect = pochhammer(hp::Real(1), n) /
                    pochhammer(hp::Real(r * n) + r * hp::Real(P.alpha) + P.beta + r, n + 1);
  if ((n + 1) % 2) expect = -expect;
  rep.normalization_error = to_double(hp::Real(abs(diff - expect) / abs(expect)));
  return rep;
}

bool check_modr(int n, const Params& P, double tol) {
  auto rep = modr_report(n, P);
  return rep.max_residual <= tol && rep.normalization_error <= tol;
}

}  // namespace jacang
