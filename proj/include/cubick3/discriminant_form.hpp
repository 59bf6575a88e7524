#pragma once

#include "cubick3/lattice.hpp"

namespace cubick3 {

inline constexpr long kDefaultFormSearchCap = 10000;

/* Brute-force isomorphism test of finite bilinear (and, when both carry
 * q_values, quadratic) forms: generator images are searched element by
 * element with pruning on orders, q and b.  Throws SearchCapExceeded when
 * either group has more than `cap` elements. */
bool isomorphic_discriminant_forms(DiscGroup const & a, DiscGroup const & b,
                                   long cap = kDefaultFormSearchCap);

} // namespace cubick3
