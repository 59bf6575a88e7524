#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cubick3 {

/* Simple continued fraction of sqrt(D) for non-square D > 0:
 * sqrt(D) = [a0; a1, ..., a_period, a1, ...]. */
struct SqrtContinuedFraction {
    mpz_class a0;
    std::vector<mpz_class> period;
};

SqrtContinuedFraction sqrt_continued_fraction(mpz_class const & D);

/* Least solution of x^2 - D y^2 = 1 with y > 0 (D positive non-square). */
std::pair<mpz_class, mpz_class> fundamental_unit(mpz_class const & D);

/*
 * Least solution (by y, then x) of x^2 - D y^2 = N with x >= 0, y > 0, or nullopt
 * when the equation has no such integer solution.  The answer is a decision, not
 * a bounded search:
 *   - D a perfect square: factor N over (x - s y)(x + s y);
 *   - |N| < sqrt(D): every primitive solution is a convergent of sqrt(D), and the
 *     residues p_k^2 - D q_k^2 repeat with period 2 * period length;
 *   - otherwise: Nagell's bound on fundamental solutions, which relies on the
 *     fundamental unit of x^2 - D y^2 = 1.
 * Non-primitive solutions are handled by recursing on N / g^2.
 */
std::optional<std::pair<mpz_class, mpz_class>> solve_generalized_pell(mpz_class const & D,
                                                                       mpz_class const & N);

} // namespace cubick3
