#pragma once

#include <optional>
#include <vector>

#include "cubick3/int_matrix.hpp"

namespace cubick3 {

/*
 * Smith normal form with both transforms and their inverses:
 *     left * input * right == diagonal
 * where left, right are unimodular.  The nonzero diagonal entries are
 * positive and satisfy d_1 | d_2 | ... | d_rank; they occupy the first
 * `rank` diagonal positions.
 */
struct SmithForm {
    IntMatrix diagonal;
    IntMatrix left, left_inverse;
    IntMatrix right, right_inverse;
    std::size_t rank = 0;

    std::vector<mpz_class> invariant_factors() const;
};

SmithForm smith_normal_form(IntMatrix const & a);

/* Row-style Hermite normal form of the row lattice; zero rows are dropped,
 * pivots are positive and entries above each pivot are reduced into [0, pivot). */
IntMatrix hermite_normal_form(IntMatrix const & a);

/* Basis (as rows) of { x in Z^cols : a * x = 0 }, in Hermite normal form. */
IntMatrix integer_kernel(IntMatrix const & a);

std::size_t rank(IntMatrix const & a);

/* Bareiss fraction-free elimination. */
mpz_class determinant(IntMatrix const & a);

/* Inverse over Q by Gauss-Jordan; nullopt when singular. */
std::optional<std::vector<RatVector>> rational_inverse(IntMatrix const & a);

/* Solves coeffs * rows == target over Q (rows must be independent); nullopt when
 * target is outside the rational row span. */
std::optional<RatVector> solve_in_row_span(IntMatrix const & rows, RatVector const & target);

} // namespace cubick3
