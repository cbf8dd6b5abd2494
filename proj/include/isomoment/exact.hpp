#ifndef ISOMOMENT_EXACT_HPP
#define ISOMOMENT_EXACT_HPP

#include "isomoment/pi_scaled.hpp"
#include "isomoment/rational.hpp"

namespace isomoment {

/// Gamma(p/2) for p >= 1, exact.  The result carries sqrt(pi) (h == 1)
/// exactly when p is odd.
PiScaled gamma_half(HalfInteger a);

/// Euler Beta B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), both arguments
/// positive half-integers.
PiScaled beta_half(HalfInteger a, HalfInteger b);

/// x! = Gamma(x + 1) for half-integer x >= 0.
PiScaled factorial_half(HalfInteger x);

// The moment constant
//
//   I_{m,n} = Gamma(1/2) Gamma(m + n/2) / (Gamma(m + 1/2) Gamma(n/2)),
//
// the exact ratio of the norm moment to the projected moment whenever the
// projected moment integral is direction-independent.  All sqrt(pi) factors
// cancel; the rationality of the result is checked, not assumed.
BigRational i_mn(int m, int n);

/// I_{m,n} through the factorial closed forms (separate even-n / odd-n
/// branches).  m == 0 and n == 1 delegate to i_mn: the closed forms use
/// (m-1)! and, at n == 1, a ratio of Gamma poles.
BigRational i_mn_closed(int m, int n);

}  // namespace isomoment

#endif
