#include "jacang/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace jacang {

namespace {

using H = hp::Real;
using Matrix = std::vector<std::vector<H>>;  // 1-based, (n+1) x (n+1)

H sign_of(const H& a, const H& b) { return b >= 0 ? H(abs(a)) : H(-abs(a)); }

// Parlett-Reinsch balancing with radix 2.
void balance(Matrix& a, int n) {
  const H radix = 2, sqrdx = 4;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 1; i <= n; ++i) {
      H r = 0, c = 0;
      for (int j = 1; j <= n; ++j)
        if (j != i) {
          c += abs(a[j][i]);
          r += abs(a[i][j]);
        }
      if (c == 0 || r == 0) continue;
      H g = r / radix, f = 1, s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < H(0.95) * s) {
        done = false;
        g = 1 / f;
        for (int j = 1; j <= n; ++j) a[i][j] *= g;
        for (int j = 1; j <= n; ++j) a[j][i] *= f;
      }
    }
  }
}

// Francis double-shift QR on an upper Hessenberg matrix; eigenvalues in
// (wr, wi), 1-based.
void hessenberg_qr(Matrix& a, int n, std::vector<H>& wr, std::vector<H>& wi) {
  const int max_its = 60;
  wr.assign(n + 1, H(0));
  wi.assign(n + 1, H(0));
  H anorm = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += abs(a[i][j]);
  int nn = n, l = 1;
  H t = 0, p = 0, q = 0, r = 0, s = 0, w = 0, x = 0, y = 0, z = 0;
  while (nn >= 1) {
    int its = 0;
    do {
      for (l = nn; l >= 2; --l) {
        s = abs(a[l - 1][l - 1]) + abs(a[l][l]);
        if (s == 0) s = anorm;
        if (H(abs(a[l][l - 1]) + s) == s) {
          a[l][l - 1] = 0;
          break;
        }
      }
      x = a[nn][nn];
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn--] = 0;
      } else {
        y = a[nn - 1][nn - 1];
        w = a[nn][nn - 1] * a[nn - 1][nn];
        if (l == nn - 1) {
          p = H(0.5) * (y - x);
          q = p * p + w;
          z = sqrt(abs(q));
          x += t;
          if (q >= 0) {
            z = p + sign_of(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn] = z;
            wi[nn - 1] = -z;
          }
          nn -= 2;
        } else {
          if (its == max_its) throw PrecisionError("Hessenberg QR did not converge", {nn - 1});
          if (its == 10 || its == 20 || its == 40) {
            // exceptional shift
            t += x;
            for (int i = 1; i <= nn; ++i) a[i][i] -= x;
            s = abs(a[nn][nn - 1]) + abs(a[nn - 1][nn - 2]);
            y = x = H(0.75) * s;
            w = H(-0.4375) * s * s;
          }
          ++its;
          int m = nn - 2;
          for (; m >= l; --m) {
            z = a[m][m];
            r = x - z;
            s = y - z;
            p = (r * s - w) / a[m + 1][m] + a[m][m + 1];
            q = a[m + 1][m + 1] - z - r - s;
            r = a[m + 2][m + 1];
            s = abs(p) + abs(q) + abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            H u = abs(a[m][m - 1]) * (abs(q) + abs(r));
            H v = abs(p) * (abs(a[m - 1][m - 1]) + abs(z) + abs(a[m + 1][m + 1]));
            if (H(u + v) == v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a[i][i - 2] = 0;
            if (i != m + 2) a[i][i - 3] = 0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a[k][k - 1];
              q = a[k + 1][k - 1];
              r = 0;
              if (k != nn - 1) r = a[k + 2][k - 1];
              x = abs(p) + abs(q) + abs(r);
              if (x != 0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            s = sign_of(sqrt(p * p + q * q + r * r), p);
            if (s != 0) {
              if (k == m) {
                if (l != m) a[k][k - 1] = -a[k][k - 1];
              } else {
                a[k][k - 1] = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                p = a[k][j] + q * a[k + 1][j];
                if (k != nn - 1) {
                  p += r * a[k + 2][j];
                  a[k + 2][j] -= p * z;
                }
                a[k + 1][j] -= p * y;
                a[k][j] -= p * x;
              }
              int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                p = x * a[i][k] + y * a[i][k + 1];
                if (k != nn - 1) {
                  p += z * a[i][k + 2];
                  a[i][k + 2] -= p * r;
                }
                a[i][k + 1] -= p * q;
                a[i][k] -= p;
              }
            }
          }
        }
      }
    } while (l < nn - 1);
  }
}

struct Eval {
  H p, d, mag;  // value, derivative, sum |c_k x^k|
};

Eval eval_with_derivative(const std::vector<H>& c, const H& x) {
  H p = c.back(), d = 0, m = abs(c.back()), ax = abs(x);
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
    d = d * x + p;
    p = p * x + c[k];
    m = m * ax + abs(c[k]);
  }
  return {p, d, m};
}

double relative_residual(const std::vector<H>& c, const H& x) {
  H s = 0, m = 0, xk = 1;
  for (const auto& ck : c) {
    H t = ck * xk;
    s += t;
    m += abs(t);
    xk *= x;
  }
  return m == 0 ? 0.0 : to_double(H(abs(s) / m));
}

std::string index_list(const std::vector<int>& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  return os.str();
}

}  // namespace

ZeroSet find_zeros(int n, const Params& P) {
  if (n < 1) throw DomainError("find_zeros needs n >= 1");
  check_degree_cap(n);
  auto p = p_coeffs<H>(n, P);
  std::vector<H> c = p.coeffs();
  H lead = c.back();
  for (auto& v : c) v /= lead;

  Matrix a(n + 1, std::vector<H>(n + 1, H(0)));
  for (int j = 1; j <= n; ++j) a[1][j] = -c[n - j];
  for (int i = 2; i <= n; ++i) a[i][i - 1] = 1;
  balance(a, n);
  std::vector<H> wr, wi;
  hessenberg_qr(a, n, wr, wi);

  std::vector<H> roots;
  std::vector<int> rejected;
  for (int i = 1; i <= n; ++i) {
    if (abs(wi[i]) <= H(1e-8) * (1 + abs(wr[i])))
      roots.push_back(wr[i]);
    else
      rejected.push_back(i - 1);
  }
  if (!rejected.empty())
    throw PrecisionError("non-real eigenvalues at " + index_list(rejected), rejected);
  std::sort(roots.begin(), roots.end());

  ZeroSet zs{P, n, {}, {}, {}};
  std::vector<int> bad;
  const H step_tol("1e-60");
  const H unit = std::numeric_limits<H>::epsilon();
  for (int i = 0; i < n; ++i) {
    H x = roots[i];
    int its = 0;
    bool converged = false;
    H bound = 0;
    for (; its < 30; ++its) {
      auto e = eval_with_derivative(c, x);
      if (e.d == 0) break;
      // rounding floor of the evaluation, mapped to x
      bound = 4 * (n + 1) * unit * e.mag / abs(e.d);
      H dx = e.p / e.d;
      x -= dx;
      if (abs(dx) <= std::max(H(step_tol * (1 + abs(x))), bound)) {
        converged = true;
        ++its;
        break;
      }
    }
    roots[i] = x;
    zs.polish_iterations.push_back(its);
    // certified far below double resolution
    if (!converged || bound > H("1e-25")) bad.push_back(i);
  }
  if (!bad.empty())
    throw PrecisionError("Newton polish did not converge at " + index_list(bad), bad);

  for (int i = 0; i < n; ++i) {
    double xd = to_double(roots[i]);
    zs.zeros.push_back(xd);
    zs.residuals.push_back(relative_residual(c, H(xd)));
  }
  for (int i = 0; i < n; ++i) {
    double x = zs.zeros[i];
    bool ok = x > 0 && x < 1 && zs.residuals[i] <= kZeroResidualTol;
    if (i + 1 < n && !(zs.zeros[i + 1] - x > kZeroSeparation)) {
      ok = false;
      bad.push_back(i + 1);
    }
    if (!ok) bad.push_back(i);
  }
  if (!bad.empty()) {
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    throw PrecisionError("zero invariants violated at " + index_list(bad), bad);
  }
  return zs;
}

double empirical_cdf(const ZeroSet& zs, double x) {
  auto it = std::upper_bound(zs.zeros.begin(), zs.zeros.end(), x);
  return static_cast<double>(it - zs.zeros.begin()) / zs.n;
}

double EmpiricalMeasure::cdf(double x) const { return empirical_cdf(*zs_, x); }

Complex stieltjes_empirical(const ZeroSet& zs, Complex z) {
  Complex s = 0;
  for (double x : zs.zeros) {
    if (std::abs(z - x) < 1e-13) throw DomainError("Stieltjes transform evaluated at a zero");
    s += 1.0 / (z - x);
  }
  return s / static_cast<double>(zs.n);
}

Complex log_derivative_over_n(int n, const Params& P, Complex z) {
  auto p = p_coeffs<H>(n, P);
  auto d = poly_derivative(p);
  hp::Complex zh = to_hp(z);
  hp::Complex v = horner(p, zh);
  hp::Complex dv = horner(d, zh);
  return to_double(hp::Complex(dv / (v * H(n))));
}

}  // namespace jacang
