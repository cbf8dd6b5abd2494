#ifndef ISOMOMENT_COMBINATORICS_HPP
#define ISOMOMENT_COMBINATORICS_HPP

#include "isomoment/multi_index.hpp"
#include "isomoment/rational.hpp"

#include <vector>

namespace isomoment {

/// total! / (parts_1! ... parts_k!); the parts must sum to total.
BigInt multinomial(int total, const std::vector<int>& parts);

// The mixed homogeneous moment int J_1^{r_1} ... J_n^{r_n} implied by the
// isotropy hypothesis with normalization C = 1, obtained by matching the
// v-monomial coefficients of
//
//   int (v_1 J_1 + ... + v_n J_n)^{2m} = (v_1^2 + ... + v_n^2)^m.
//
// The left coefficient is (2m)!/prod r_j! times the moment; the right one is
// m!/prod (r_j/2)! when every r_j is even and 0 otherwise.  Hence the moment
// is m! prod r_j! / ((2m)! prod (r_j/2)!), or 0 if any r_j is odd.
//
// Odd total degree is outside the matching's scope and is rejected.
BigRational mixed_moment(const MultiIndex& r);

/// I_{m,n} rebuilt by multinomial expansion of (J_1^2 + ... + J_n^2)^m with
/// mixed_moment as the moment oracle: sums multinomial(m, s) *
/// mixed_moment(2s) over all n-part compositions s of m.
BigRational i_mn_expand(int m, int n);

}  // namespace isomoment

#endif
