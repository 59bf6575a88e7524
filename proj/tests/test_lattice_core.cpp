#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "cubick3/error.hpp"
#include "cubick3/lattice.hpp"
#include "cubick3/normal_form.hpp"
#include "cubick3/standard_lattices.hpp"

using namespace cubick3;

namespace {

// Oracles, deliberately naive.

mpq_class rational_det(IntMatrix const & a)
{
    std::size_t const n = a.rows();
    std::vector<RatVector> m(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a(i, j);
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            mpq_class const f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

Signature eigen_signature(IntMatrix const & g)
{
    std::size_t const n = g.rows();
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = g(i, j).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Signature s;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double const x = es.eigenvalues()[i];
        if (x > 1e-8)
            ++s.pos;
        else if (x < -1e-8)
            ++s.neg;
        else
            ++s.null;
    }
    return s;
}

// gcd of all k x k minors of a k x n matrix = index of its row lattice in the saturation
mpz_class minors_gcd(IntMatrix const & b)
{
    std::size_t const k = b.rows(), n = b.cols();
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    mpz_class g = 0;
    for (;;) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                sub(i, j) = b(i, idx[j]);
        mpq_class const d = rational_det(sub);
        g = gcd(g, mpz_class(d.get_num()));
        std::size_t p = k;
        while (p > 0 && idx[p - 1] == n - k + p - 1)
            --p;
        if (p == 0)
            return g;
        ++idx[p - 1];
        for (std::size_t j = p; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

IntMatrix random_matrix(std::mt19937 & rng, std::size_t r, std::size_t c, int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = dist(rng);
    return m;
}

IntMatrix random_symmetric(std::mt19937 & rng, std::size_t n, int lo, int hi)
{
    IntMatrix m = random_matrix(rng, n, n, lo, hi);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            m(i, j) = m(j, i);
    return m;
}

GramLattice lat(std::string_view name)
{
    return standard_lattice(name);
}

template <class F>
ErrorKind error_kind(F && f)
{
    try {
        f();
    } catch (LatticeError const & e) {
        return e.kind();
    }
    FAIL("expected a LatticeError");
    return ErrorKind::InvalidGram;
}

} // namespace

TEST_SUITE("normal forms")
{
    TEST_CASE("smith form transforms and divisibility chain")
    {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t const r = 1 + rng() % 5, c = 1 + rng() % 5;
            IntMatrix const a = random_matrix(rng, r, c, -6, 6);
            SmithForm const s = smith_normal_form(a);
            CHECK(s.left * a * s.right == s.diagonal);
            CHECK(s.left * s.left_inverse == IntMatrix::identity(r));
            CHECK(s.right * s.right_inverse == IntMatrix::identity(c));
            for (std::size_t i = 0; i + 1 < s.rank; ++i)
                CHECK(s.diagonal(i + 1, i + 1) % s.diagonal(i, i) == 0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    if (i != j || i >= s.rank)
                        CHECK(s.diagonal(i, j) == 0);
            if (r == c) {
                mpz_class prod = s.rank == r ? 1 : 0;
                for (std::size_t i = 0; i < s.rank; ++i)
                    prod *= s.diagonal(i, i);
                CHECK(prod == abs(mpz_class(rational_det(a).get_num())));
            }
        }
    }

    TEST_CASE("determinant against rational elimination")
    {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t const n = 1 + rng() % 6;
            IntMatrix const m = random_matrix(rng, n, n, -9, 9);
            CHECK(mpq_class(determinant(m)) == rational_det(m));
        }
        CHECK(determinant(IntMatrix{{-3, 1}, {1, -5}}) == 14);
    }

    TEST_CASE("kernel and hermite form")
    {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t const r = 1 + rng() % 4, c = 1 + rng() % 6;
            IntMatrix const a = random_matrix(rng, r, c, -4, 4);
            IntMatrix const k = integer_kernel(a);
            CHECK(k.rows() + rank(a) == c);
            for (std::size_t i = 0; i < k.rows(); ++i)
                CHECK(is_zero(a * k.row(i)));
            IntMatrix const h = hermite_normal_form(a);
            CHECK(h.rows() == rank(a));
            CHECK(hermite_normal_form(h) == h);
        }
    }
}

TEST_SUITE("lattice core")
{
    TEST_CASE("direct sums")
    {
        GramLattice const u = lat("U");
        std::vector<GramLattice> const uu{u, u};
        long const ones[] = {1, 1};
        GramLattice const s = direct_sum(uu, ones);
        CHECK(s.rank() == 4);
        CHECK(abs(determinant(s)) == 1);

        std::vector<GramLattice> const parts{lat("E"), u, u, lat("I03")};
        GramLattice const gb = direct_sum(parts);
        CHECK(gb.rank() == 23);
        CHECK(signature(gb) == Signature{2, 21, 0});

        std::vector<GramLattice> const a2{lat("A2")};
        long const minus[] = {-1};
        CHECK(direct_sum(a2, minus).gram() == IntMatrix{{-2, 1}, {1, -2}});

        long const zero[] = {0};
        CHECK(error_kind([&] { direct_sum(a2, zero); }) == ErrorKind::InvalidTwist);
        CHECK(error_kind([&] { GramLattice(IntMatrix{{0, 1}, {2, 0}}); }) == ErrorKind::InvalidGram);
    }

    TEST_CASE("signatures")
    {
        CHECK(signature(lat("A2")) == Signature{2, 0, 0});
        CHECK(signature(lambda_d(14)) == Signature{2, 19, 0});
        CHECK(signature(GramLattice(IntMatrix{{-4, -1, 0}, {-1, 2, -1}, {0, -1, 2}})) == Signature{2, 1, 0});
        CHECK(signature(GramLattice(IntMatrix{{0, 0}, {0, 0}})) == Signature{0, 0, 2});
        CHECK(signature(GramLattice(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}})) == Signature{1, 1, 1});

        std::mt19937 rng(3);
        for (int trial = 0; trial < 300; ++trial) {
            IntMatrix const g = random_symmetric(rng, 1 + rng() % 6, -3, 3);
            CHECK(signature(GramLattice(g)) == eigen_signature(g));
        }
        for (auto name : {"U", "E8", "E", "A2", "A2m", "I03", "Gammabar", "Gamma", "Lambda", "LambdaTilde"})
            CHECK(signature(lat(name)) == eigen_signature(lat(name).gram()));
    }

    TEST_CASE("signature is additive, negation swaps")
    {
        std::mt19937 rng(4);
        for (int trial = 0; trial < 50; ++trial) {
            GramLattice const a(random_symmetric(rng, 1 + rng() % 3, -3, 3));
            GramLattice const b(random_symmetric(rng, 1 + rng() % 3, -3, 3));
            std::vector<GramLattice> const ab{a, b};
            long const tw[] = {1, -1};
            Signature const sb = signature(b);
            CHECK(signature(direct_sum(ab, tw)) == signature(a) + Signature{sb.neg, sb.pos, sb.null});
        }
    }

    TEST_CASE("determinants")
    {
        CHECK(determinant(lat("A2")) == 3);
        CHECK(determinant(lat("U")) == -1);
        CHECK(determinant(lat("E8")) == 1);
        CHECK(abs(determinant(lat("LambdaTilde"))) == 1);
        CHECK(abs(determinant(lat("Gamma"))) == 3);
    }

    TEST_CASE("discriminant groups")
    {
        DiscGroup const k12 = disc_group(GramLattice(IntMatrix{{-3, 0}, {0, -4}}));
        CHECK(k12.invariant_factors == std::vector<mpz_class>{12});
        CHECK(k12.is_cyclic());
        DiscGroup const k18 = disc_group(GramLattice(IntMatrix{{-3, 0}, {0, -6}}));
        CHECK(k18.invariant_factors == std::vector<mpz_class>{3, 6});
        DiscGroup const a2 = disc_group(lat("A2"));
        REQUIRE(a2.invariant_factors == std::vector<mpz_class>{3});
        REQUIRE(a2.q_values);
        // generator class is +-(1/3)(2,1) or (1/3)(1,2); q = 2/3 either way
        CHECK((*a2.q_values)[0] == mpq_class(2, 3));
        CHECK(!disc_group(lat("I03")).q_values);
        CHECK(error_kind([&] { disc_group(GramLattice(IntMatrix{{1, 1}, {1, 1}})); })
              == ErrorKind::DegenerateLattice);
        CHECK(disc_group(lat("E8")).invariant_factors.empty());
    }

    TEST_CASE("disc group properties on random even lattices")
    {
        std::mt19937 rng(9);
        int seen = 0;
        while (seen < 200) {
            IntMatrix g = random_symmetric(rng, 1 + rng() % 4, -4, 4);
            for (std::size_t i = 0; i < g.rows(); ++i)
                g(i, i) = 2 * g(i, i);
            GramLattice const l(g);
            mpz_class const det = determinant(l);
            if (det == 0)
                continue;
            ++seen;
            DiscGroup const dg = disc_group(l);
            CHECK(dg.order() == abs(det));
            for (std::size_t i = 0; i < dg.generators.size(); ++i) {
                RatVector scaled = dg.generators[i];
                for (auto & x : scaled)
                    x *= dg.invariant_factors[i];
                CHECK(!to_integral(scaled).empty());
                CHECK(reduce_mod(l.pair(dg.generators[i], dg.generators[i]), 2) == (*dg.q_values)[i]);
            }
            CHECK(q_values_via_inverse(l, dg) == *dg.q_values);
        }
    }

    TEST_CASE("sublattices, saturation and complements")
    {
        GramLattice const lt = lat("LambdaTilde");
        std::vector<IntVector> const lambdas{lambda1(), lambda2()};
        CHECK(span_sublattice(lt, lambdas).gram() == IntMatrix{{2, -1}, {-1, 2}});

        GramLattice const u = lat("U");
        std::vector<IntVector> const epf{make_vector({1, 1})};
        CHECK(span_sublattice(u, epf).gram() == IntMatrix{{2}});

        std::vector<IntVector> const two_e{make_vector({2, 0})};
        Saturation const s = saturation(span_sublattice(u, two_e));
        CHECK(s.index == 2);
        CHECK(s.lattice.basis() == IntMatrix{{1, 0}});

        std::vector<IntVector> const dependent{make_vector({1, 0}), make_vector({2, 0})};
        CHECK(error_kind([&] { span_sublattice(u, dependent); }) == ErrorKind::DependentGenerators);

        Sublattice const a2perp = orthogonal_complement(lt, lambdas);
        CHECK(a2perp.rank() == 22);
        CHECK(abs(determinant(a2perp.as_lattice())) == 3);
        std::vector<IntVector> const l1{lambda1()};
        Sublattice const l1perp = orthogonal_complement(lt, l1);
        CHECK(l1perp.rank() == 23);
        CHECK(abs(determinant(l1perp.as_lattice())) == 2);

        for (long d : {2L, 8L, 14L, 42L}) {
            std::vector<IntVector> const l{ell(d)};
            Sublattice const perp = orthogonal_complement(lat("Lambda"), l);
            CHECK(perp.rank() == 21);
            CHECK(abs(determinant(perp.as_lattice())) == d);
            CHECK(signature(perp.as_lattice()) == Signature{2, 19, 0});
            Sublattice const image(lat("Lambda"), lambda_d_into_lambda(d));
            CHECK(image.gram() == lambda_d(d).gram());
            for (std::size_t i = 0; i < image.rank(); ++i)
                CHECK(perp.contains(image.basis().row(i)));
        }
    }

    TEST_CASE("divisibility and primitivity")
    {
        GramLattice const u = lat("U");
        CHECK(divisibility(u, make_vector({1, 0})) == 1);
        CHECK(error_kind([&] { divisibility(u, make_vector({0, 0})); }) == ErrorKind::ZeroVector);
        CHECK(!is_primitive(u, make_vector({2, 0})));
        CHECK(is_primitive(lat("Gammabar"), h_squared()));
        CHECK(is_primitive(lat("LambdaTilde"), basis_e(Frame::LambdaTilde, 3) + basis_f(Frame::LambdaTilde, 4)));
        CHECK(error_kind([&] { is_primitive(u, make_vector({0, 0})); }) == ErrorKind::ZeroVector);
    }

    TEST_CASE("saturation index equals gcd of maximal minors")
    {
        std::mt19937 rng(13);
        GramLattice const u2 = direct_sum(std::vector<GramLattice>{lat("U"), lat("U"), lat("A2")});
        int seen = 0;
        while (seen < 150) {
            IntMatrix const b = random_matrix(rng, 1 + rng() % 3, 6, -5, 5);
            if (rank(b) != b.rows())
                continue;
            ++seen;
            Saturation const s = saturation(Sublattice(u2, b));
            CHECK(s.index == minors_gcd(b));
            CHECK(saturation(s.lattice).index == 1);
            for (std::size_t i = 0; i < b.rows(); ++i)
                CHECK(s.lattice.contains(b.row(i)));
            CHECK(determinant(Sublattice(u2, b).as_lattice())
                  == s.index * s.index * determinant(s.lattice.as_lattice()));
            std::vector<IntVector> rows;
            for (std::size_t i = 0; i < b.rows(); ++i)
                rows.push_back(b.row(i));
            CHECK(saturation(orthogonal_complement(u2, rows)).index == 1);
        }
    }

    TEST_CASE("standard lattices")
    {
        CHECK(lat("Gamma").rank() == 22);
        CHECK(signature(lat("Gamma")) == Signature{2, 20, 0});
        CHECK(lat("LambdaTilde").rank() == 24);
        CHECK(lat("LambdaTilde").is_even());
        CHECK(lat("Gammabar").rank() == 23);
        CHECK(!lat("Gammabar").is_even());
        CHECK(signature(lat("Gammabar")) == Signature{2, 21, 0});
        CHECK(lat("LambdaD(10)").gram() == lambda_d(10).gram());
        CHECK(error_kind([] { standard_lattice("K3"); }) == ErrorKind::UnknownLattice);
        CHECK(error_kind([] { standard_lattice("LambdaD(7)"); }) == ErrorKind::InvalidDegree);

        GramLattice const lt = lat("LambdaTilde");
        for (int i = 1; i <= 4; ++i)
            CHECK(lt.pair(basis_e(Frame::LambdaTilde, i), basis_f(Frame::LambdaTilde, i)) == (i == 4 ? -1 : 1));
        CHECK(lat("Gammabar").square(h_squared()) == -3);
        CHECK(lt.square(mu1()) == -2);
        CHECK(lt.pair(mu1(), mu2()) == 1);
        // both embeddings of Gamma are isometric
        CHECK(Sublattice(lat("Gammabar"), gamma_into_gammabar()).gram() == lat("Gamma").gram());
        CHECK(Sublattice(lt, gamma_into_lambda_tilde()).gram() == lat("Gamma").gram());
    }
}
