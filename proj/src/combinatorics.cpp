#include "isomoment/combinatorics.hpp"

#include <stdexcept>

namespace isomoment {

BigInt multinomial(int total, const std::vector<int>& parts) {
  BigInt num = factorial(total);
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    num /= factorial(p);
    sum += p;
  }
  if (sum != total) throw std::invalid_argument("multinomial: parts must sum to total");
  return num;
}

BigRational mixed_moment(const MultiIndex& r) {
  const int deg = r.degree();
  if (deg % 2 != 0)
    throw std::domain_error("mixed_moment: total degree must be even");
  if (!r.all_even()) return 0;
  const int m = deg / 2;
  BigInt num = factorial(m);
  BigInt den = factorial(deg);
  for (int i = 0; i < r.size(); ++i) {
    num *= factorial(r[i]);
    den *= factorial(r[i] / 2);
  }
  return make_rational(num, den);
}

BigRational i_mn_expand(int m, int n) {
  if (m < 0 || n < 1)
    throw std::domain_error("i_mn_expand: need m >= 0, n >= 1");
  BigRational sum = 0;
  for (MultiIndex s : compositions(m, n))
    sum += BigRational(multinomial(m, s.parts())) * mixed_moment(s.doubled());
  return sum;
}

}  // namespace isomoment
