#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isomoment/exact.hpp"

#include <cmath>

using namespace isomoment;

TEST_CASE("make_rational normalizes sign and gcd") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(1, -2) == make_rational(-1, 2));
  CHECK(to_string(make_rational(-6, -4)) == "3/2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);

  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  // Pascal rule on a grid
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("rational_pow covers negative exponents") {
  CHECK(rational_pow(make_rational(2, 3), 3) == make_rational(8, 27));
  CHECK(rational_pow(make_rational(2, 3), 0) == 1);
  CHECK(rational_pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(rational_pow(BigRational(-2), 5) == -32);
  CHECK_THROWS_AS(rational_pow(BigRational(0), -1), std::domain_error);
}

TEST_CASE("rational string round trip") {
  for (const char* s : {"7", "-3/4", "1/15", "0"}) {
    CHECK(to_string(rational_from_string(s)) == s);
  }
  CHECK_THROWS_AS(rational_from_string("a/b"), std::invalid_argument);
}

TEST_CASE("PiScaled arithmetic tracks the sqrt(pi) power") {
  const PiScaled sqrt_pi(BigRational(1), 1);
  const PiScaled pi = sqrt_pi * sqrt_pi;
  CHECK(pi.half_pi_power() == 2);
  CHECK(pi.to_double() == doctest::Approx(M_PI).epsilon(1e-15));
  CHECK((pi / sqrt_pi).half_pi_power() == 1);
  CHECK((pi / pi) == PiScaled(BigRational(1), 0));

  // Addition is only defined for a common power of pi.
  CHECK(PiScaled(BigRational(1), 2) + PiScaled(BigRational(2), 2) ==
        PiScaled(BigRational(3), 2));
  CHECK_THROWS_AS(sqrt_pi + pi, std::domain_error);

  SUBCASE("canonical zero") {
    const PiScaled z = pi - pi;
    CHECK(z.is_zero());
    CHECK(z.half_pi_power() == 0);
    CHECK(z == PiScaled());
    // zero absorbs into any power
    CHECK(z + sqrt_pi == sqrt_pi);
  }

  SUBCASE("rendering") {
    CHECK(to_string(PiScaled(make_rational(4, 3), 2)) == "4/3*pi");
    CHECK(to_string(PiScaled(make_rational(3, 4), 1)) == "3/4*pi^(1/2)");
    CHECK(to_string(PiScaled(BigRational(2), 0)) == "2");
  }
}

TEST_CASE("gamma_half base values") {
  CHECK(gamma_half(HalfInteger{1}) == PiScaled(BigRational(1), 1));  // sqrt(pi)
  CHECK(gamma_half(whole(1)) == PiScaled(BigRational(1), 0));
  CHECK(gamma_half(HalfInteger{3}) == PiScaled(make_rational(1, 2), 1));
  CHECK(gamma_half(HalfInteger{5}) == PiScaled(make_rational(3, 4), 1));
  CHECK(gamma_half(whole(3)) == PiScaled(BigRational(2), 0));
  CHECK(gamma_half(whole(5)) == PiScaled(BigRational(24), 0));
  CHECK_THROWS_AS(gamma_half(HalfInteger{0}), std::domain_error);
  CHECK_THROWS_AS(gamma_half(HalfInteger{-3}), std::domain_error);
}

TEST_CASE("gamma_half satisfies the shift recurrence") {
  // Gamma(z+1) = z Gamma(z) for z = p/2, p = 1..40
  for (int p = 1; p <= 40; ++p) {
    const PiScaled lhs = gamma_half(HalfInteger{p + 2});
    const PiScaled rhs =
        PiScaled(make_rational(p, 2), 0) * gamma_half(HalfInteger{p});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("beta_half") {
  // B(1/2, 1/2) = pi
  CHECK(beta_half(HalfInteger{1}, HalfInteger{1}) == PiScaled(BigRational(1), 2));
  CHECK(beta_half(whole(1), whole(1)) == PiScaled(BigRational(1), 0));
  // B(3/2, 1/2) = pi/2
  CHECK(beta_half(HalfInteger{3}, HalfInteger{1}) ==
        PiScaled(make_rational(1, 2), 2));
  // symmetry
  for (int p = 1; p <= 9; ++p)
    for (int q = 1; q <= 9; ++q)
      CHECK(beta_half(HalfInteger{p}, HalfInteger{q}) ==
            beta_half(HalfInteger{q}, HalfInteger{p}));
  CHECK_THROWS_AS(beta_half(HalfInteger{0}, HalfInteger{1}), std::domain_error);
}

TEST_CASE("factorial_half") {
  CHECK(factorial_half(whole(3)) == PiScaled(BigRational(6), 0));
  CHECK(factorial_half(whole(0)) == PiScaled(BigRational(1), 0));
  // (1/2)! = Gamma(3/2) = sqrt(pi)/2
  CHECK(factorial_half(HalfInteger{1}) == PiScaled(make_rational(1, 2), 1));
}

TEST_CASE("i_mn known values") {
  CHECK(i_mn(3, 3) == 7);
  CHECK(i_mn(2, 6) == 16);
  CHECK(i_mn(1, 4) == 4);
  CHECK(i_mn(4, 5) == 33);
  // row n=3 is the odd numbers, row m=0 all ones, row m=1 is n
  for (int m = 0; m <= 50; ++m) CHECK(i_mn(m, 3) == 2 * m + 1);
  for (int n = 1; n <= 20; ++n) {
    CHECK(i_mn(0, n) == 1);
    CHECK(i_mn(1, n) == n);
  }
  CHECK_THROWS_AS(i_mn(-1, 3), std::domain_error);
  CHECK_THROWS_AS(i_mn(2, 0), std::domain_error);
}

TEST_CASE("i_mn values need not be integers") {
  // I_{2,2} = Gamma(1/2)Gamma(3)/(Gamma(5/2)Gamma(1)) = 8/3
  CHECK(i_mn(2, 2) == make_rational(8, 3));
}

TEST_CASE("closed forms agree with the Gamma ratio") {
  for (int m = 0; m <= 12; ++m)
    for (int n = 1; n <= 12; ++n)
      CHECK(i_mn_closed(m, n) == i_mn(m, n));
  // larger spot checks, one per parity branch
  CHECK(i_mn_closed(25, 8) == i_mn(25, 8));
  CHECK(i_mn_closed(25, 9) == i_mn(25, 9));
  CHECK_THROWS_AS(i_mn_closed(-1, 3), std::domain_error);
}
