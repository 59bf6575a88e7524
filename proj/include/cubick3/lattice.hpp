#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubick3/int_matrix.hpp"

namespace cubick3 {

/* A finite-rank integral lattice given by a symmetric Gram matrix in a fixed basis.
 * Degenerate Gram matrices are accepted; operations that need a nondegenerate
 * form check for it. */
class GramLattice
{
    IntMatrix gram_;
    std::string label_;

  public:
    GramLattice() = default;
    explicit GramLattice(IntMatrix gram, std::string label = {});

    std::size_t rank() const { return gram_.rows(); }
    IntMatrix const & gram() const { return gram_; }
    std::string const & label() const { return label_; }
    bool is_even() const;

    mpz_class pair(IntVector const & u, IntVector const & v) const;
    mpz_class square(IntVector const & v) const { return pair(v, v); }
    /* (v . b_i) for every basis vector b_i */
    IntVector pairings(IntVector const & v) const;
    RatVector pairings(RatVector const & v) const;
    mpq_class pair(RatVector const & u, RatVector const & v) const;

    GramLattice relabeled(std::string label) const;
};

struct Signature {
    std::size_t pos = 0;
    std::size_t neg = 0;
    std::size_t null = 0;

    friend bool operator==(Signature const &, Signature const &) = default;
};

Signature operator+(Signature const & a, Signature const & b);
std::string to_string(Signature const & s);

/* k linearly independent vectors of an ambient lattice, as rows in ambient coordinates. */
class Sublattice
{
    GramLattice ambient_;
    IntMatrix basis_;
    IntMatrix gram_;

  public:
    Sublattice(GramLattice ambient, IntMatrix basis);

    GramLattice const & ambient() const { return ambient_; }
    IntMatrix const & basis() const { return basis_; }
    IntMatrix const & gram() const { return gram_; }
    std::size_t rank() const { return basis_.rows(); }
    GramLattice as_lattice(std::string label = {}) const { return GramLattice(gram_, std::move(label)); }

    /* Coordinates of x in this basis when x lies in the sublattice. */
    std::optional<IntVector> coordinates_of(RatVector const & x) const;
    bool contains(RatVector const & x) const { return coordinates_of(x).has_value(); }
    bool contains(IntVector const & x) const { return contains(to_rational(x)); }
};

/* Invariant factors d_1 | d_2 | ... of A_L = L^dual / L (unit factors dropped).
 * Generators are rational coordinate vectors in the lattice basis; generator i has
 * order invariant_factors[i].  Bilinear values b(g_i, g_j) are reduced into [0, 1);
 * quadratic values q(g_i) = (g_i . g_i) into [0, 2), present only for even lattices. */
struct DiscGroup {
    std::vector<mpz_class> invariant_factors;
    std::vector<RatVector> generators;
    std::vector<std::vector<mpq_class>> b_values;
    std::optional<std::vector<mpq_class>> q_values;

    mpz_class order() const;
    bool is_cyclic() const { return invariant_factors.size() <= 1; }
};

/* x reduced into [0, m) */
mpq_class reduce_mod(mpq_class const & x, mpz_class const & m);

GramLattice direct_sum(std::span<GramLattice const> parts, std::span<long const> twists = {},
                       std::string label = {});
Signature signature(GramLattice const & lattice);
mpz_class determinant(GramLattice const & lattice);
DiscGroup disc_group(GramLattice const & lattice);
/* q(g) recomputed through the rational inverse of the Gram matrix:
 * with w = G g (an integer vector), q(g) = w^T G^{-1} w. */
std::vector<mpq_class> q_values_via_inverse(GramLattice const & lattice, DiscGroup const & group);

Sublattice span_sublattice(GramLattice const & ambient, std::span<IntVector const> vectors);

struct Saturation {
    Sublattice lattice;
    mpz_class index;
};
Saturation saturation(Sublattice const & s);

Sublattice orthogonal_complement(GramLattice const & ambient, std::span<IntVector const> vectors);
mpz_class divisibility(GramLattice const & ambient, IntVector const & v);
bool is_primitive(GramLattice const & ambient, IntVector const & v);

/* Image of a sublattice under an isometric embedding given as rows (images of the
 * source basis in target coordinates). */
IntVector embed(IntMatrix const & embedding, IntVector const & v);

} // namespace cubick3
