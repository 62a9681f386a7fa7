#include "jacang/polynomials.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace jacang;

namespace {

// max_k |a_k - b_k| / |b_k|, with coefficients of b below 1e-14 max|b| compared absolutely.
double coeff_rel(const Poly<double>& a, const Poly<double>& b) {
  int d = std::max(a.degree(), b.degree());
  double scale = 0;
  for (int k = 0; k <= d; ++k) scale = std::max(scale, std::abs(b[k]));
  double worst = 0;
  for (int k = 0; k <= d; ++k) {
    double den = std::max(std::abs(b[k]), 1e-14 * scale);
    worst = std::max(worst, std::abs(a[k] - b[k]) / den);
  }
  return worst;
}

Poly<double> real_part(const Poly<Complex>& p, double sign = 1) {
  std::vector<double> c;
  for (const auto& z : p.coeffs()) {
    CHECK(std::abs(z.imag()) <= 1e-14 * std::max(1.0, std::abs(z.real())));
    c.push_back(sign * z.real());
  }
  return Poly<double>(std::move(c));
}

}  // namespace

TEST_CASE("p_n against reference coefficients") {
  auto p = p_coeffs<double>(2, Params(2, 0, 0));
  CHECK(p.coeffs() == std::vector<double>{1, -3.75, 3});

  auto p4 = p_coeffs<double>(4, Params(2, 0, 0));
  std::vector<double> ref4{1.0, -9.84375, 30.0, -36.09375, 15.0};
  CHECK(coeff_rel(p4, Poly<double>(ref4)) < 1e-15);

  // mpmath, r = 3, alpha = 0.5, beta = -0.25
  auto p3 = p_coeffs<double>(3, Params(3, 0.5, -0.25));
  Poly<double> ref3{-0.8445694400873229570093984, 4.719576036667469101135642,
                    -7.875651855591054370852564, 4.069289120420737883772556};
  CHECK(coeff_rel(p3, ref3) < 1e-15);
}

TEST_CASE("q_n is p_n with beta shifted by one") {
  for (int r = 1; r <= 4; ++r) {
    Params P(r, 0.3, 0.4);
    for (int n = 0; n <= 8; ++n)
      CHECK(coeff_rel(q_coeffs<double>(n, P), p_coeffs_shifted<double>(n, r, 0.3, -0.6)) < 1e-14);
  }
}

TEST_CASE("leading coefficient nu_n") {
  for (int r = 1; r <= 5; ++r)
    for (int n = 0; n <= 10; ++n) {
      Params P(r, 0.7, -0.5);
      auto p = p_coeffs<double>(n, P);
      CHECK(std::abs(p[n] / leading_nu(n, P) - 1) < 1e-13);
    }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Params(0, 0, 0), DomainError);
  CHECK_THROWS_AS(Params(2, -1, 0), DomainError);
  CHECK_THROWS_AS(Params(2, 0, -1.5), DomainError);
  CHECK_THROWS_AS(p_coeffs<double>(kDegreeCap + 1, Params(2, 0, 0)), CapExceeded);
}

TEST_CASE("degree metadata matches stored degrees") {
  for (int r = 1; r <= 5; ++r) {
    Params P(r, 0.7, 2);
    for (int n = 1; n <= 8; ++n) {
      auto d = type1_diagonal<double>(n, P);
      REQUIRE(d.polys.size() == static_cast<std::size_t>(r));
      for (int j = 1; j <= r; ++j) CHECK(d.polys[j - 1].degree() == d.tag.degree(j));
      for (int k = 1; k <= r; ++k) {
        auto u = type1_up<double>(n, k, P);
        for (int j = 1; j <= r; ++j) CHECK(u.polys[j - 1].degree() == u.tag.degree(j));
        if (r >= 2) {
          auto m = type1_down<double>(n, k, P);
          for (int j = 1; j <= r; ++j) CHECK(m.polys[j - 1].degree() == m.tag.degree(j));
        }
      }
    }
  }
}

TEST_CASE("above-diagonal entries keep the full degree n-1") {
  for (int r = 2; r <= 5; ++r)
    for (double a : {-0.5, 0.0, 0.7, 2.0})
      for (double b : {-0.5, 0.0, 0.7, 2.0}) {
        Params P(r, a, b);
        for (int n = 1; n <= 12; ++n)
          for (int k = 1; k <= r; ++k) {
            auto u = type1_up<double>(n, k, P);
            double scale = 0;
            for (const auto& p : u.polys)
              for (const auto& c : p.coeffs()) scale = std::max(scale, std::abs(c));
            for (int j = 1; j <= r; ++j)
              if (j != k) CHECK(std::abs(u.polys[j - 1][n - 1]) > 1e-10 * scale);
          }
      }
}

TEST_CASE("diagonal vector entries are rotations of one polynomial") {
  for (int r = 2; r <= 5; ++r) {
    Params P(r, 0.2, 0.9);
    for (int n = 1; n <= 6; ++n) {
      auto v = type1_diagonal<double>(n, P);
      REQUIRE(v.base);
      for (int j = 1; j <= r; ++j) {
        auto rot = poly_rotate(*v.base, 1 - j, r);
        for (int k = 0; k <= rot.degree(); ++k)
          CHECK(std::abs(rot[k] - v.polys[j - 1][k]) <= 1e-13 * std::abs(rot[k]) + 1e-300);
      }
    }
  }
}

TEST_CASE("r = 1 below-diagonal vector is the previous diagonal") {
  Params P(1, 0.5, 0.5);
  CHECK(type1_down<double>(1, 1, P).polys[0].is_zero());
  for (int n = 2; n <= 6; ++n) {
    auto d = type1_down<double>(n, 1, P);
    auto prev = type1_diagonal<double>(n - 1, P);
    CHECK(coeff_rel(real_part(d.polys[0]), real_part(prev.polys[0])) < 1e-14);
  }
}

TEST_CASE("r = 2 Legendre closed forms equal the Jacobi closed forms at alpha = beta = 0") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(coeff_rel(legendre_p_r2(n), jacobi_p_r2(n, 0, 0)) < 1e-13);
    CHECK(coeff_rel(legendre_q_r2(n), jacobi_q_r2(n, 0, 0)) < 1e-13);
    for (auto f : {R2Family::diag, R2Family::up, R2Family::down}) {
      auto l = legendre_angelesco_r2(n, f);
      auto j = jacobi_angelesco_r2(n, f, 0, 0);
      CHECK(coeff_rel(l.A, j.A) < 1e-12);
      CHECK(coeff_rel(l.B, j.B) < 1e-12);
    }
  }
}

// Ray 1 is [0,1] and carries B; ray 2 is [0,-1] and carries A with the
// opposite orientation, so A = -(ray 2 entry).
TEST_CASE("general-r construction reproduces the r = 2 closed forms") {
  for (auto [a, b] : {std::pair{0.0, 0.0}, {0.5, 0.3}, {-0.5, 2.0}, {2.0, -0.5}}) {
    Params P(2, a, b);
    for (int n = 0; n <= 10; ++n) {
      CAPTURE(n);
      auto d = jacobi_angelesco_r2(n, R2Family::diag, a, b);
      auto vd = type1_diagonal<double>(n + 1, P);
      CHECK(coeff_rel(real_part(vd.polys[0]), d.B) < 1e-12);
      CHECK(coeff_rel(real_part(vd.polys[1], -1), d.A) < 1e-12);
      CHECK(coeff_rel(p_coeffs<double>(n, P), jacobi_p_r2(n, a, b)) < 1e-12);
      if (n == 0) continue;
      auto up = jacobi_angelesco_r2(n, R2Family::up, a, b);
      auto vu = type1_up<double>(n, 1, P);
      CHECK(coeff_rel(real_part(vu.polys[0]), up.B) < 1e-12);
      CHECK(coeff_rel(real_part(vu.polys[1], -1), up.A) < 1e-12);
      auto dn = jacobi_angelesco_r2(n, R2Family::down, a, b);
      auto vm = type1_down<double>(n + 1, 1, P);
      CHECK(coeff_rel(real_part(vm.polys[0]), dn.B) < 1e-12);
      CHECK(coeff_rel(real_part(vm.polys[1], -1), dn.A) < 1e-12);
    }
  }
}

TEST_CASE("multiprecision and double constructions agree") {
  Params P(3, 0.7, -0.5);
  for (int n = 1; n <= 10; ++n) {
    auto h = to_double(type1_up<hp::Real>(n, 2, P));
    auto d = type1_up<double>(n, 2, P);
    for (std::size_t j = 0; j < d.polys.size(); ++j) CHECK(h.polys[j] == d.polys[j]);
  }
}
