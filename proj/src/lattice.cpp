#include "cubick3/lattice.hpp"

#include <utility>

#include "cubick3/error.hpp"
#include "cubick3/normal_form.hpp"

namespace cubick3 {

GramLattice::GramLattice(IntMatrix gram, std::string label)
    : gram_(std::move(gram))
    , label_(std::move(label))
{
    if (!gram_.is_symmetric())
        throw LatticeError(ErrorKind::InvalidGram, "Gram matrix must be square and symmetric");
}

bool GramLattice::is_even() const
{
    for (std::size_t i = 0; i < rank(); ++i)
        if (mpz_odd_p(gram_(i, i).get_mpz_t()))
            return false;
    return true;
}

IntVector GramLattice::pairings(IntVector const & v) const
{
    if (v.size() != rank())
        throw LatticeError(ErrorKind::DimensionMismatch,
                           "vector of length " + std::to_string(v.size()) + " in lattice of rank "
                               + std::to_string(rank()));
    return gram_ * v;
}

RatVector GramLattice::pairings(RatVector const & v) const
{
    if (v.size() != rank())
        throw LatticeError(ErrorKind::DimensionMismatch, "vector length differs from rank");
    RatVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            if (gram_(i, j) != 0)
                r[i] += mpq_class(gram_(i, j)) * v[j];
    return r;
}

mpz_class GramLattice::pair(IntVector const & u, IntVector const & v) const
{
    return dot(u, pairings(v));
}

mpq_class GramLattice::pair(RatVector const & u, RatVector const & v) const
{
    RatVector const gv = pairings(v);
    mpq_class s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        s += u[i] * gv[i];
    return s;
}

GramLattice GramLattice::relabeled(std::string label) const
{
    return GramLattice(gram_, std::move(label));
}

Signature operator+(Signature const & a, Signature const & b)
{
    return {a.pos + b.pos, a.neg + b.neg, a.null + b.null};
}

std::string to_string(Signature const & s)
{
    return "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + "," + std::to_string(s.null)
           + ")";
}

Sublattice::Sublattice(GramLattice ambient, IntMatrix basis)
    : ambient_(std::move(ambient))
    , basis_(std::move(basis))
{
    if (basis_.rows() && basis_.cols() != ambient_.rank())
        throw LatticeError(ErrorKind::DimensionMismatch, "basis vectors must live in the ambient lattice");
    if (basis_.rows() == 0)
        basis_ = IntMatrix(0, ambient_.rank());
    gram_ = basis_ * ambient_.gram() * basis_.transposed();
}

std::optional<IntVector> Sublattice::coordinates_of(RatVector const & x) const
{
    auto coeffs = solve_in_row_span(basis_, x);
    if (!coeffs)
        return std::nullopt;
    IntVector c = to_integral(*coeffs);
    if (c.size() != coeffs->size())
        return std::nullopt;
    return c;
}

mpz_class DiscGroup::order() const
{
    mpz_class n = 1;
    for (auto const & d : invariant_factors)
        n *= d;
    return n;
}

mpq_class reduce_mod(mpq_class const & x, mpz_class const & m)
{
    // x - m * floor(x / m)
    mpq_class const t = x / m;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    mpq_class r = x - mpq_class(fl * m);
    r.canonicalize();
    return r;
}

GramLattice direct_sum(std::span<GramLattice const> parts, std::span<long const> twists,
                       std::string label)
{
    if (parts.empty())
        throw LatticeError(ErrorKind::DimensionMismatch, "direct sum of no lattices");
    if (!twists.empty() && twists.size() != parts.size())
        throw LatticeError(ErrorKind::DimensionMismatch, "one twist per summand required");
    std::vector<IntMatrix> blocks;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        long const k = twists.empty() ? 1 : twists[i];
        if (k == 0)
            throw LatticeError(ErrorKind::InvalidTwist, "twist must be nonzero");
        blocks.push_back(scaled(parts[i].gram(), k));
    }
    return GramLattice(block_diagonal(blocks), std::move(label));
}

Signature signature(GramLattice const & lattice)
{
    std::size_t const n = lattice.rank();
    std::vector<RatVector> a(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = lattice.gram()(i, j);

    Signature s;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < n && a[j][j] == 0)
                ++j;
            if (j < n) {
                std::swap(a[k], a[j]);
                for (auto & row : a)
                    std::swap(row[k], row[j]);
            } else {
                // all remaining diagonal entries vanish: fold a hyperbolic partner into k
                j = k + 1;
                while (j < n && a[k][j] == 0)
                    ++j;
                if (j == n) {
                    ++s.null;
                    continue;
                }
                for (std::size_t c = 0; c < n; ++c)
                    a[k][c] += a[j][c];
                for (std::size_t r = 0; r < n; ++r)
                    a[r][k] += a[r][j];
            }
        }
        mpq_class const p = a[k][k];
        (p > 0 ? s.pos : s.neg) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0)
                continue;
            mpq_class const f = a[i][k] / p;
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] -= f * a[k][j];
            a[i][k] = 0;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            a[k][i] = 0;
    }
    return s;
}

mpz_class determinant(GramLattice const & lattice)
{
    return determinant(lattice.gram());
}

DiscGroup disc_group(GramLattice const & lattice)
{
    if (determinant(lattice) == 0)
        throw LatticeError(ErrorKind::DegenerateLattice,
                           "discriminant group of a degenerate lattice" + (lattice.label().empty() ? std::string() : " " + lattice.label()));
    std::size_t const n = lattice.rank();
    SmithForm const snf = smith_normal_form(lattice.gram());

    DiscGroup g;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class const & d = snf.diagonal(i, i);
        if (d == 1)
            continue;
        g.invariant_factors.push_back(d);
        // G (R e_i / d_i) = L^{-1} e_i, so R e_i / d_i is a dual vector of order d_i.
        RatVector gen(n);
        for (std::size_t r = 0; r < n; ++r)
            gen[r] = mpq_class(snf.right(r, i), d);
        for (auto & x : gen)
            x.canonicalize();
        g.generators.push_back(std::move(gen));
    }
    std::size_t const k = g.generators.size();
    g.b_values.assign(k, std::vector<mpq_class>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            g.b_values[i][j] = reduce_mod(lattice.pair(g.generators[i], g.generators[j]), 1);
    if (lattice.is_even()) {
        std::vector<mpq_class> q;
        for (auto const & gen : g.generators)
            q.push_back(reduce_mod(lattice.pair(gen, gen), 2));
        g.q_values = std::move(q);
    }
    return g;
}

std::vector<mpq_class> q_values_via_inverse(GramLattice const & lattice, DiscGroup const & group)
{
    auto const inv = rational_inverse(lattice.gram());
    if (!inv)
        throw LatticeError(ErrorKind::DegenerateLattice, "Gram matrix is singular");
    std::size_t const n = lattice.rank();
    std::vector<mpq_class> q;
    for (auto const & gen : group.generators) {
        RatVector const w = lattice.pairings(gen);
        mpq_class s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s += w[i] * (*inv)[i][j] * w[j];
        q.push_back(reduce_mod(s, 2));
    }
    return q;
}

Sublattice span_sublattice(GramLattice const & ambient, std::span<IntVector const> vectors)
{
    IntMatrix basis = IntMatrix::from_rows(vectors, ambient.rank());
    if (rank(basis) != vectors.size())
        throw LatticeError(ErrorKind::DependentGenerators,
                           "generators are linearly dependent over Q");
    return Sublattice(ambient, std::move(basis));
}

Saturation saturation(Sublattice const & s)
{
    std::size_t const k = s.rank();
    std::size_t const n = s.ambient().rank();
    if (k == 0)
        return {s, 1};
    SmithForm const snf = smith_normal_form(s.basis());
    // rowspace_Q(B) = rowspace_Q(D R^{-1}) = span of the first k rows of R^{-1}
    IntMatrix rows(k, n);
    mpz_class index = 1;
    for (std::size_t i = 0; i < k; ++i) {
        index *= snf.diagonal(i, i);
        for (std::size_t j = 0; j < n; ++j)
            rows(i, j) = snf.right_inverse(i, j);
    }
    return {Sublattice(s.ambient(), hermite_normal_form(rows)), index};
}

Sublattice orthogonal_complement(GramLattice const & ambient, std::span<IntVector const> vectors)
{
    IntMatrix const v = IntMatrix::from_rows(vectors, ambient.rank());
    return Sublattice(ambient, integer_kernel(v * ambient.gram()));
}

mpz_class divisibility(GramLattice const & ambient, IntVector const & v)
{
    if (is_zero(v))
        throw LatticeError(ErrorKind::ZeroVector, "divisibility of the zero vector");
    mpz_class const n = content(ambient.pairings(v));
    if (n == 0)
        throw LatticeError(ErrorKind::DegenerateLattice, "vector lies in the kernel of the form");
    return n;
}

bool is_primitive(GramLattice const & ambient, IntVector const & v)
{
    if (v.size() != ambient.rank())
        throw LatticeError(ErrorKind::DimensionMismatch, "vector length differs from rank");
    if (is_zero(v))
        throw LatticeError(ErrorKind::ZeroVector, "primitivity of the zero vector");
    return content(v) == 1;
}

IntVector embed(IntMatrix const & embedding, IntVector const & v)
{
    return embedding.transposed() * v;
}

} // namespace cubick3
