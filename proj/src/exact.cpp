#include "isomoment/exact.hpp"

#include <stdexcept>

namespace isomoment {

PiScaled gamma_half(HalfInteger a) {
  const int p = a.twice_value;
  if (p < 1) throw std::domain_error("gamma_half: argument must be positive");
  if (p % 2 == 0) {
    // Gamma(k) = (k-1)!
    return PiScaled(BigRational(factorial(p / 2 - 1)), 0);
  }
  // Gamma(p/2) = (p/2 - 1)(p/2 - 2)...(1/2) * Gamma(1/2), Gamma(1/2) = sqrt(pi)
  BigRational c = 1;
  for (int q = p - 2; q >= 1; q -= 2) c *= make_rational(q, 2);
  return PiScaled(c, 1);
}

PiScaled beta_half(HalfInteger a, HalfInteger b) {
  if (!a.is_positive() || !b.is_positive())
    throw std::domain_error("beta_half: arguments must be positive");
  return gamma_half(a) * gamma_half(b) / gamma_half(a + b);
}

PiScaled factorial_half(HalfInteger x) {
  return gamma_half(x + whole(1));
}

BigRational i_mn(int m, int n) {
  if (m < 0 || n < 1) throw std::domain_error("i_mn: need m >= 0, n >= 1");
  const PiScaled num = gamma_half(HalfInteger{1}) * gamma_half(whole(m) + HalfInteger{n});
  const PiScaled den = gamma_half(whole(m) + HalfInteger{1}) * gamma_half(HalfInteger{n});
  const PiScaled ratio = num / den;
  if (!ratio.is_rational())
    throw std::logic_error("i_mn: sqrt(pi) factors failed to cancel");
  return ratio.coeff();
}

BigRational i_mn_closed(int m, int n) {
  if (m < 0 || n < 1) throw std::domain_error("i_mn_closed: need m >= 0, n >= 1");
  if (m == 0 || n == 1) return i_mn(m, n);
  if (n % 2 == 0) {
    // 2^(2m-1) (m + n/2 - 1)! (m-1)! / ((2m-1)! (n/2 - 1)!)
    const PiScaled v = PiScaled(BigRational(BigInt(1) << (2 * m - 1)), 0) *
                       factorial_half(whole(m + n / 2 - 1)) *
                       factorial_half(whole(m - 1)) /
                       (factorial_half(whole(2 * m - 1)) *
                        factorial_half(whole(n / 2 - 1)));
    return v.coeff();
  }
  // (2m+n-2)! (m-1)! ((n-3)/2)! / (2 (2m-1)! (n-2)! (m + (n-3)/2)!)
  const PiScaled v = factorial_half(whole(2 * m + n - 2)) *
                     factorial_half(whole(m - 1)) *
                     factorial_half(whole((n - 3) / 2)) /
                     (PiScaled(BigRational(2), 0) *
                      factorial_half(whole(2 * m - 1)) *
                      factorial_half(whole(n - 2)) *
                      factorial_half(whole(m + (n - 3) / 2)));
  return v.coeff();
}

}  // namespace isomoment
