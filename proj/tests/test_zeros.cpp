#include "jacang/zeros.hpp"

#include <doctest.h>

#include <cmath>

using namespace jacang;

TEST_CASE("zeros against reference values") {
  // mpmath at 150 digits
  const double z8[] = {0.07583988432761280558887, 0.2231345646875994241909,
                       0.3903769057773070024972,  0.5575276186740109376814,
                       0.7105768692028051126239,  0.8384899168195558248793,
                       0.9326764082180346584231,  0.9870516604180742341154};
  auto zs = find_zeros(8, Params(2, 0, 0));
  REQUIRE(zs.zeros.size() == 8);
  for (int i = 0; i < 8; ++i) CHECK(std::abs(zs.zeros[i] - z8[i]) <= 2e-16 * z8[i]);

  const double z5[] = {0.2055151576249655127144, 0.4704184118063018050942,
                       0.6931129455644593988471, 0.8606329925412689028519,
                       0.964697477685304287369};
  auto zt = find_zeros(5, Params(3, 0.5, -0.25));
  REQUIRE(zt.zeros.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(std::abs(zt.zeros[i] - z5[i]) <= 2e-16 * z5[i]);

  auto z2 = find_zeros(2, Params(2, 0, 0));
  CHECK(z2.zeros[0] == doctest::Approx((3.75 - std::sqrt(3.75 * 3.75 - 12)) / 6).epsilon(1e-15));
}

TEST_CASE("exactly n simple zeros in (0,1)") {
  for (int r = 1; r <= 5; ++r)
    for (auto [a, b] : {std::pair{0.0, 0.0}, {-0.5, 2.0}, {2.0, -0.5}})
      for (int n : {1, 2, 7, 20, 40}) {
        CAPTURE(r);
        CAPTURE(n);
        auto zs = find_zeros(n, Params(r, a, b));
        REQUIRE(zs.zeros.size() == static_cast<std::size_t>(n));
        CHECK(zs.zeros.front() > 0);
        CHECK(zs.zeros.back() < 1);
        for (int i = 1; i < n; ++i) CHECK(zs.zeros[i] - zs.zeros[i - 1] > kZeroSeparation);
        for (double res : zs.residuals) CHECK(res <= kZeroResidualTol);
      }
}

TEST_CASE("degree cap and the largest supported degree") {
  CHECK_THROWS_AS(find_zeros(kDegreeCap + 1, Params(2, 0, 0)), CapExceeded);
  auto zs = find_zeros(kDegreeCap, Params(5, 0, 0));
  CHECK(zs.zeros.size() == static_cast<std::size_t>(kDegreeCap));
}

// Zeros of consecutive degrees interlace for these cases; this is observed,
// not a property the library relies on.
TEST_CASE("interlacing of consecutive degrees") {
  int violations = 0;
  for (int r = 1; r <= 4; ++r)
    for (int n = 2; n <= 20; ++n) {
      auto a = find_zeros(n - 1, Params(r, 0.3, 0.6)).zeros;
      auto b = find_zeros(n, Params(r, 0.3, 0.6)).zeros;
      for (int i = 0; i < n - 1; ++i)
        if (!(b[i] < a[i] && a[i] < b[i + 1])) ++violations;
    }
  MESSAGE("interlacing violations: " << violations);
  CHECK(violations == 0);
}

TEST_CASE("empirical measure") {
  auto zs = find_zeros(10, Params(2, 0, 0));
  EmpiricalMeasure mu(zs);
  CHECK(mu.cdf(0) == 0);
  CHECK(mu.cdf(1) == 1);
  CHECK(empirical_cdf(zs, zs.zeros[3]) == doctest::Approx(0.4));
  CHECK(empirical_cdf(zs, std::nextafter(zs.zeros[3], 0.0)) == doctest::Approx(0.3));
}

TEST_CASE("Stieltjes transform of the zeros equals p'/(n p)") {
  for (int r = 1; r <= 4; ++r) {
    Params P(r, 0.4, 1.1);
    auto zs = find_zeros(12, P);
    for (Complex z : {Complex(2, 1), Complex(0.5, 0.3), Complex(-1, 0), Complex(0.3, -2)}) {
      Complex a = stieltjes_empirical(zs, z);
      Complex b = log_derivative_over_n(12, P, z);
      CHECK(std::abs(a - b) <= 1e-13 * std::abs(b));
    }
    CHECK_THROWS_AS(stieltjes_empirical(zs, Complex(zs.zeros[0], 0)), DomainError);
  }
}
