#ifndef ISOMOMENT_PI_SCALED_HPP
#define ISOMOMENT_PI_SCALED_HPP

#include "isomoment/rational.hpp"

#include <string>

namespace isomoment {

/// Exact half-integer p/2, stored as p.
struct HalfInteger {
  int twice_value = 0;

  constexpr bool is_integer() const { return twice_value % 2 == 0; }
  constexpr bool is_positive() const { return twice_value > 0; }
  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return HalfInteger{a.twice_value + b.twice_value};
  }
};

/// HalfInteger holding the integer k.
constexpr HalfInteger whole(int k) { return HalfInteger{2 * k}; }

// Exact value coeff * pi^(h/2) with rational coeff and integer h.  Keeping the
// sqrt(pi) exponent symbolic means a result that should be rational comes out
// with h == 0 by construction, not by floating-point cancellation.
//
// Multiplication and division add/subtract h.  Addition is defined only for
// matching h (or a zero operand); mixed powers of pi throw.  The canonical
// zero is (0, h=0).
class PiScaled {
 public:
  PiScaled() = default;  // zero
  PiScaled(BigRational coeff, int half_pi_power);

  const BigRational& coeff() const { return coeff_; }
  int half_pi_power() const { return half_pi_power_; }

  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const { return half_pi_power_ == 0; }

  double to_double() const;

  PiScaled& operator*=(const PiScaled& o);
  PiScaled& operator/=(const PiScaled& o);

  friend PiScaled operator*(PiScaled a, const PiScaled& b) { return a *= b; }
  friend PiScaled operator/(PiScaled a, const PiScaled& b) { return a /= b; }
  friend PiScaled operator+(const PiScaled& a, const PiScaled& b);
  friend PiScaled operator-(const PiScaled& a, const PiScaled& b);
  friend bool operator==(const PiScaled& a, const PiScaled& b) = default;

 private:
  BigRational coeff_;
  int half_pi_power_ = 0;
};

/// e.g. "4/3*pi", "3/4*pi^(1/2)", "2".
std::string to_string(const PiScaled& v);

}  // namespace isomoment

#endif
