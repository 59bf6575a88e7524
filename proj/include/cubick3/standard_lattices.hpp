#pragma once

#include <cstddef>
#include <string_view>

#include "cubick3/lattice.hpp"

namespace cubick3 {

/*
 * Frozen basis orderings.  Every named vector of the library is a coordinate
 * tuple against these.
 *
 *   E           = E8(-1) + E8(-1)                          slots  0..15
 *   LambdaTilde = E + U1 + U2 + U3 + U4   (rank 24)       e_i, f_i at 16+2(i-1), 17+2(i-1)
 *   Lambda      = E + U1 + U2 + U3        (rank 22)
 *   Gammabar    = E + U1 + U2 + I(0,3)    (rank 23)       I(0,3) at 20..22, h^2 = (1,1,1)
 *   Gamma       = E + U1 + U2 + A2(-1)    (rank 22)       A2(-1) basis (mu1, mu2) at 20, 21
 *   LambdaD(d)  = E + U + U + Z(-d)       (rank 21)
 *
 * (e_i . f_i) = 1 except (e_4 . f_4) = -1.  E8 uses the Bourbaki Cartan matrix.
 */
enum class Frame { Gammabar, Gamma, Lambda, LambdaTilde };

inline constexpr std::size_t kEBlock = 0;
inline constexpr std::size_t kERank = 16;

std::size_t frame_rank(Frame frame);
GramLattice frame_lattice(Frame frame);

/* Names: U, E8, E, A2, A2m, I03, Gammabar, Gamma, Lambda, LambdaTilde, LambdaD(<d>). */
GramLattice standard_lattice(std::string_view name);
GramLattice lambda_d(long d);

/* e_i / f_i of the i-th hyperbolic plane (1-based) in the given frame. */
IntVector basis_e(Frame frame, int i);
IntVector basis_f(Frame frame, int i);

IntVector h_squared();    // Gammabar
IntVector lambda1();      // LambdaTilde: e4 - f4
IntVector lambda2();      // LambdaTilde: e3 + f3 + f4
IntVector mu1();          // LambdaTilde: e3 - f3
IntVector mu2();          // LambdaTilde: -e3 - e4 - f4
IntVector gamma_mu1();    // Gamma coordinates of mu1
IntVector gamma_mu2();    // Gamma coordinates of mu2

/* Rows are images of the Gamma basis.  Into Gammabar: mu1 -> (1,-1,0),
 * mu2 -> (0,1,-1) in I(0,3), identity elsewhere.  Into LambdaTilde: onto A2^perp. */
IntMatrix gamma_into_gammabar();
IntMatrix gamma_into_lambda_tilde();

/* ell = e2 + (d/2) f2 in Lambda, and the embedding of the abstract LambdaD(d)
 * onto ell^perp (E, U1, U3 identical; the Z(-d) generator maps to e2 - (d/2) f2). */
IntVector ell(long d);
IntMatrix lambda_d_into_lambda(long d);

} // namespace cubick3
