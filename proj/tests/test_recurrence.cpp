#include "jacang/recurrence.hpp"

#include <doctest.h>

#include <cmath>

using namespace jacang;

TEST_CASE("r = 2 reference values") {
  Params P(2, 0, 0);
  CHECK(coeff_a(1, P) == doctest::Approx(1.0 / 12).epsilon(1e-15));
  CHECK(coeff_b(1, P) == doctest::Approx(0.5).epsilon(1e-15));
  auto row = recurrence_row(1, P);
  REQUIRE(row.b_scalar);
  CHECK(std::abs(row.b_ray(2, 2) + 0.5) < 1e-15);
  CHECK(std::abs(row.a_ray(2, 2) - 1.0 / 12) < 1e-15);
}

TEST_CASE("r = 1 has no b") {
  Params P(1, 0, 0);
  CHECK_THROWS_AS(coeff_b(3, P), DomainError);
  auto row = recurrence_row(3, P);
  CHECK_FALSE(row.b_scalar);
  CHECK_THROWS_AS(row.b_ray(1, 1), DomainError);
  // classical Jacobi on [0,1] with alpha = beta = 0: a_n -> 1/16
  CHECK(std::abs(coeff_a(400, P) - 1.0 / 16) < 1e-3);
}

TEST_CASE("nearest-neighbour relation holds on every ray") {
  for (int r = 2; r <= 4; ++r)
    for (auto [a, b] : {std::pair{0.0, 0.0}, {0.7, -0.5}, {-0.5, 2.0}}) {
      Params P(r, a, b);
      for (int n = 1; n <= 6; ++n) {
        auto pts = ray_sample_points(r, std::max(16, n + 3));
        for (int k = 1; k <= r; ++k) {
          CAPTURE(r);
          CAPTURE(n);
          CAPTURE(k);
          CHECK(recurrence_residual(n, k, P, pts) < 1e-9);
        }
      }
    }
}

TEST_CASE("residual is sensitive to the scalars") {
  Params P(3, 0.5, 0.5);
  auto pts = ray_sample_points(3, 16);
  for (int n = 1; n <= 5; ++n) {
    double a = coeff_a(n, P), b = coeff_b(n, P);
    CHECK(recurrence_residual(n, 1, P, pts, a, b) < 1e-14);
    CHECK(recurrence_residual(n, 1, P, pts, a * (1 + 1e-6), b) > 1e-9);
    CHECK(recurrence_residual(n, 1, P, pts, a, b * (1 + 1e-6)) > 1e-9);
    CHECK(recurrence_residual(n, 1, P, pts, a, -b) > 1e-3);
  }
}

TEST_CASE("ray symmetry of the residual") {
  for (int r = 2; r <= 4; ++r) {
    Params P(r, 0.3, 0.6);
    auto pts = ray_sample_points(r, 7);
    std::vector<Complex> rot;
    for (auto z : pts) rot.push_back(z * unit_root<double>(1, r));
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= r; ++k) {
        double base = recurrence_residual(n, k, P, pts);
        double shifted = recurrence_residual(n, k % r + 1, P, rot);
        CHECK(std::abs(base - shifted) < 1e-12);
      }
  }
}

TEST_CASE("approach to the limits") {
  for (int r = 2; r <= 5; ++r)
    for (double a : {0.0, 0.5})
      for (double b : {0.0, 0.5}) {
        Params P(r, a, b);
        double al = a_limit(r), bl = b_limit(r);
        double e50 = std::abs(coeff_a(50, P) - al), e200 = std::abs(coeff_a(200, P) - al);
        CHECK(e200 < 0.02 * al);
        CHECK(e200 < e50);
        CHECK(std::abs(coeff_b(200, P) - bl) < 0.02 * bl);
      }
  CHECK(a_limit(2) == doctest::Approx(2.0 / 27));
  CHECK(b_limit(2) == doctest::Approx(2.0 / std::pow(3.0, 1.5)));
}

TEST_CASE("r = 2 closed forms agree with the general coefficients") {
  for (auto [a, b] : {std::pair{0.0, 0.0}, {0.3, 0.7}, {-0.5, 2.0}, {2.0, -0.5}}) {
    Params P(2, a, b);
    for (int n = 1; n <= 50; ++n) {
      CAPTURE(n);
      CHECK(std::abs(coeff_a(n, P) / r2_a_closed(n, a, b) - 1) < 1e-12);
      CHECK(std::abs(coeff_b(n, P) / r2_c_closed(n, a, b) - 1) < 1e-12);
      auto t = r2_translation(n, a, b);
      CHECK(t.a_nn == t.b_nn);
      CHECK(t.c_prev == -t.d_prev);
    }
  }
}

// Two-interval relations on the r = 2 closed-form vectors:
//   x A_{n,n} = A_{n-1,n} + c_{n-1,n} A_{n,n} + a A_{n+1,n} + a A_{n,n+1} on [-1,0]
//   x B_{n,n} = B_{n,n-1} + d_{n,n-1} B_{n,n} + a B_{n+1,n} + a B_{n,n+1} on [0,1]
// hold with c_{n-1,n} = -r2_c_closed and d_{n,n-1} = +r2_c_closed.
TEST_CASE("sign of c in the r = 2 relation") {
  double al = 0.3, be = 0.7;
  for (int n = 2; n <= 5; ++n) {
    auto D = jacobi_angelesco_r2(n - 1, R2Family::diag, al, be);   // (A_{n,n}, B_{n,n})
    auto Mu = jacobi_angelesco_r2(n - 1, R2Family::up, al, be);    // (A_{n-1,n}, .)
    auto Md = jacobi_angelesco_r2(n - 1, R2Family::down, al, be);  // (., B_{n,n-1})
    auto Nd = jacobi_angelesco_r2(n, R2Family::down, al, be);      // (A_{n+1,n}, B_{n+1,n})
    auto Nu = jacobi_angelesco_r2(n, R2Family::up, al, be);        // (A_{n,n+1}, B_{n,n+1})
    double a = r2_a_closed(n, al, be), c = r2_c_closed(n, al, be);
    auto t = r2_translation(n, al, be);
    for (double x : {-0.3, -0.7}) {
      auto ev = [&](const Poly<double>& p) { return poly_eval(p, x); };
      double scale = std::abs(x * ev(D.A)) + std::abs(ev(Mu.A)) + std::abs(c * ev(D.A));
      double rest = x * ev(D.A) - ev(Mu.A) - a * ev(Nd.A) - a * ev(Nu.A);
      CHECK(std::abs(rest + c * ev(D.A)) < 1e-10 * scale);
      CHECK(std::abs(rest - c * ev(D.A)) > 1e-3 * scale);
      CHECK(std::abs(rest - t.c_prev * ev(D.A)) < 1e-10 * scale);
    }
    for (double x : {0.3, 0.7}) {
      auto ev = [&](const Poly<double>& p) { return poly_eval(p, x); };
      double scale = std::abs(x * ev(D.B)) + std::abs(ev(Md.B)) + std::abs(c * ev(D.B));
      double rest = x * ev(D.B) - ev(Md.B) - a * ev(Nd.B) - a * ev(Nu.B);
      CHECK(std::abs(rest - c * ev(D.B)) < 1e-10 * scale);
      CHECK(std::abs(rest - t.d_prev * ev(D.B)) < 1e-10 * scale);
    }
  }
}

TEST_CASE("argument validation") {
  Params P(3, 0, 0);
  auto pts = ray_sample_points(3, 4);
  CHECK_THROWS_AS(recurrence_residual(0, 1, P, pts), DomainError);
  CHECK_THROWS_AS(recurrence_residual(2, 4, P, pts), DomainError);
  CHECK_THROWS_AS(coeff_a(0, P), DomainError);
  CHECK(pts.size() == 12);
}
