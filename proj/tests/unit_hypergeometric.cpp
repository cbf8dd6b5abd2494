#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isomoment/exact.hpp"
#include "isomoment/hypergeometric.hpp"

#include <cmath>

using namespace isomoment;

TEST_CASE("pochhammer") {
  CHECK(pochhammer(BigRational(3), 0) == 1);
  CHECK(pochhammer(BigRational(3), 4) == 3 * 4 * 5 * 6);
  CHECK(pochhammer(make_rational(1, 2), 3) == make_rational(15, 8));
  CHECK(pochhammer(BigRational(-2), 4) == 0);
  CHECK_THROWS_AS(pochhammer(BigRational(1), -1), std::domain_error);
}

TEST_CASE("series specializations with elementary values") {
  SUBCASE("0F0 is the exponential") {
    PfqParams p;
    p.z = 1.0;
    CHECK(pfq(p) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    p.z = -2.5;
    CHECK(pfq(p) == doctest::Approx(std::exp(-2.5)).epsilon(1e-13));
  }

  SUBCASE("1F0 is the binomial series") {
    PfqParams p;
    p.upper = {make_rational(1, 2)};
    p.z = 0.3;  // (1-z)^(-1/2)
    CHECK(pfq(p, 1e-14, 10000) ==
          doctest::Approx(1.0 / std::sqrt(0.7)).epsilon(1e-12));
  }

  SUBCASE("2F1 at the Gauss point") {
    // 2F1(a, b; c; 1/2) with a=1, b=1, c=2: 2 log 2
    PfqParams p;
    p.upper = {BigRational(1), BigRational(1)};
    p.lower = {BigRational(2)};
    p.z = 0.5;
    CHECK(pfq(p, 1e-14, 10000) ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
  }

  SUBCASE("matched upper and lower parameters cancel") {
    // 2F2(1, 3/2; 1, 3/2; z) = e^z
    PfqParams p;
    p.upper = {BigRational(1), make_rational(3, 2)};
    p.lower = {BigRational(1), make_rational(3, 2)};
    p.z = 0.7;
    CHECK(pfq(p) == doctest::Approx(std::exp(0.7)).epsilon(1e-14));
  }
}

TEST_CASE("terminating series stop exactly") {
  // 2F1(-3, 1; 1; z) = (1-z)^3 is a polynomial; the zero factor must end
  // the series regardless of |z|.
  PfqParams p;
  p.upper = {BigRational(-3), BigRational(1)};
  p.lower = {BigRational(1)};
  p.z = 4.0;
  CHECK(p.terminates());
  int used = 0;
  const double v = pfq(p, 1e-12, 10000, &used);
  CHECK(used == 4);
  CHECK(v == doctest::Approx(std::pow(1.0 - 4.0, 3)).epsilon(1e-15));
}

TEST_CASE("z at the origin") {
  PfqParams p;
  p.upper = {BigRational(5)};
  p.lower = {BigRational(3)};
  p.z = 0.0;
  int used = -1;
  CHECK(pfq(p, 1e-12, 10000, &used) == 1.0);
  CHECK(used == 1);
}

TEST_CASE("domain validation") {
  SUBCASE("non-positive integer lower parameter") {
    PfqParams p;
    p.upper = {BigRational(1)};
    p.lower = {BigRational(-2)};
    p.z = 0.1;
    CHECK_THROWS_AS(pfq(p), std::domain_error);
  }
  SUBCASE("p = q+1 needs |z| < 1") {
    PfqParams p;
    p.upper = {BigRational(1), BigRational(2)};
    p.lower = {BigRational(3)};
    p.z = 1.0;
    CHECK_THROWS_AS(pfq(p), std::domain_error);
    p.z = 0.999;
    CHECK_NOTHROW(pfq(p, 1e-10, 100000));
  }
  SUBCASE("p > q+1 diverges unless terminating") {
    PfqParams p;
    p.upper = {BigRational(1), BigRational(1), BigRational(1)};
    p.lower = {BigRational(1)};
    p.z = 0.1;
    CHECK_THROWS_AS(pfq(p), std::domain_error);
    p.upper[0] = BigRational(-2);  // now a polynomial: fine
    CHECK_NOTHROW(pfq(p));
  }
  SUBCASE("bad controls") {
    PfqParams p;
    p.z = 1.0;
    CHECK_THROWS_AS(pfq(p, -1e-3, 100), std::domain_error);
    CHECK_THROWS_AS(pfq(p, 1e-12, 0), std::domain_error);
  }
}

TEST_CASE("max_terms exhaustion reports the partial sum") {
  PfqParams p;
  p.z = 30.0;  // e^30 needs far more than 5 terms
  try {
    pfq(p, 1e-12, 5);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.terms_used == 5);
    CHECK(e.partial_sum > 1.0);
    CHECK(e.last_term > 0.0);
  }
}

TEST_CASE("half-point identity ties the series to the exact constant") {
  for (int m = 0; m <= 6; ++m) {
    for (int n = 2; n <= 8; ++n) {
      const Check2F1Result r = check_2f1_identity(m, n, 1e-10);
      CHECK(r.pass);
      CHECK(r.rhs == to_double(i_mn(m, n)));
    }
  }
  SUBCASE("reported sides match the known integer case") {
    const Check2F1Result r = check_2f1_identity(3, 3, 1e-10);
    CHECK(r.rhs == 7.0);
    CHECK(r.lhs == doctest::Approx(7.0).epsilon(1e-10));
  }
  CHECK_THROWS_AS(check_2f1_identity(1, 1), std::domain_error);
}

TEST_CASE("alternating arguments stay accurate") {
  // 2F2(1, 3/2; 5/2, 3; -20): the partial sums peak ~1e4 above the ~0.3
  // limit; the extended-precision accumulation must keep ~12 digits.  The
  // reference is the exact rational sum of the first 200 terms (the tail
  // beyond that is below 1e-100).
  PfqParams p;
  p.upper = {BigRational(1), make_rational(3, 2)};
  p.lower = {make_rational(5, 2), BigRational(3)};
  p.z = -20.0;
  BigRational coeff = 1, sum = 0;
  for (int k = 0; k < 200; ++k) {
    sum += coeff * rational_pow(BigRational(-20), k);
    BigRational ratio = (BigRational(1) + k) * (make_rational(3, 2) + k);
    ratio /= (make_rational(5, 2) + k) * (BigRational(3) + k) * (1 + k);
    coeff *= ratio;
  }
  CHECK(pfq(p, 1e-13, 10000) ==
        doctest::Approx(to_double(sum)).epsilon(1e-12));
}
