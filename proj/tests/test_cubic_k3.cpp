#include <doctest.h>

#include "cubick3/cubic_k3.hpp"
#include "cubick3/error.hpp"
#include "cubick3/normal_form.hpp"

using namespace cubick3;

namespace {

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

IntVector gamma_e(int i)
{
    return basis_e(Frame::Gamma, i);
}

IntVector gamma_f(int i)
{
    return basis_f(Frame::Gamma, i);
}

IntVector lt_e(int i)
{
    return basis_e(Frame::LambdaTilde, i);
}

IntVector lt_f(int i)
{
    return basis_f(Frame::LambdaTilde, i);
}

} // namespace

TEST_CASE("canonical embedding")
{
    CanonicalEmbeddingReport const r = canonical_embedding_report();
    for (auto const & c : r.checks) {
        INFO(c.id << ": expected " << c.expected << ", got " << c.actual);
        CHECK(c.passed());
    }
    CHECK(r.all_passed());
    CHECK(r.lambda_gram == IntMatrix{{2, -1}, {-1, 2}});
    CHECK(r.mu_gram == IntMatrix{{-2, 1}, {1, -2}});
    CHECK(r.glue_identity);
    CHECK(r.fano_class_square == 6);
    CHECK(r.fano_sublattice_det == 18);
    CHECK(r.fano_sublattice_index == 3);
    CHECK(r.lambda1_perp_det == 2);
    CHECK(r.a2_perp_det == 3);
    CHECK(r.a2_sum_index == 3);
    CHECK(r.a2_sum_saturation_det == 1);
    CHECK(r.gamma_matches_a2_perp);

    // independent recomputation of the glue identity
    IntVector const lhs = mpz_class(3) * (lt_e(3) + lt_f(4));
    CHECK(lhs == mu1() - mu2() - lambda1() + lambda2());
}

TEST_CASE("NL vectors")
{
    GramLattice const g = standard_lattice("Gamma");
    CHECK(nl_vector(12) == gamma_e(1) - mpz_class(2) * gamma_f(1));
    CHECK(g.square(nl_vector(12)) == -4);
    IntVector const v14 = mpz_class(3) * (gamma_e(1) - mpz_class(2) * gamma_f(1)) + gamma_mu1() - gamma_mu2();
    CHECK(nl_vector(14) == v14);
    CHECK(g.square(v14) == -42);
    CHECK(g.square(nl_vector(8)) == -24);
    for (long d = 8; d <= 200; d += 2) {
        if (d % 6 == 4) {
            CHECK(error_kind([d] { nl_vector(d); }) == ErrorKind::NotSpecialDiscriminant);
            continue;
        }
        IntVector const v = nl_vector(d);
        CHECK(is_primitive(g, v));
        CHECK(g.square(v) == (d % 6 == 0 ? -d / 3 : -3 * d));
    }
    CHECK(error_kind([] { nl_vector(9); }) == ErrorKind::NotSpecialDiscriminant);
}

TEST_CASE("classification of NL vectors")
{
    for (long d = 8; d <= 200; d += 2) {
        if (d % 6 == 4)
            continue;
        NLClassification const c = classify_nl_vector(nl_vector(d));
        CHECK(c.d == d);
        CHECK(c.nl_case == (d % 6 == 0 ? NLCase::Saturated : NLCase::IndexThree));
    }
    // any (-2)-vector: d = 6
    NLClassification const c = classify_nl_vector(gamma_e(1) - gamma_f(1));
    CHECK(c.nl_case == NLCase::Saturated);
    CHECK(c.d == 6);
    CHECK(classify_nl_vector(gamma_mu1()).d == 6);

    CHECK(error_kind([] { classify_nl_vector(mpz_class(2) * nl_vector(12)); }) == ErrorKind::InvalidNLVector);
    CHECK(error_kind([] { classify_nl_vector(gamma_e(1)); }) == ErrorKind::InvalidNLVector);
    CHECK(error_kind([] { classify_nl_vector(gamma_e(1) + gamma_f(1)); }) == ErrorKind::InvalidNLVector);
}

TEST_CASE("hassett triples")
{
    NLVectorReport const r14 = hassett_triple(14);
    CHECK(r14.nl_case == NLCase::IndexThree);
    CHECK(binary_forms_equivalent(r14.gram_K, IntMatrix{{-3, 1}, {1, -5}}));
    CHECK(abs(determinant(r14.gram_K)) == 14);
    CHECK(abs(determinant(r14.gram_L)) == 14);
    CHECK(r14.disc_K.invariant_factors == std::vector<mpz_class>{14});
    CHECK(r14.index_K == 3);

    NLVectorReport const r12 = hassett_triple(12);
    CHECK(binary_forms_equivalent(r12.gram_K, IntMatrix{{-3, 0}, {0, -4}}));
    CHECK(r12.index_K == 1);
    // Gamma_12 contains e1 + 2 f1 of square 4
    IntVector const extra = gamma_e(1) + mpz_class(2) * gamma_f(1);
    CHECK(standard_lattice("Gamma").square(extra) == 4);
    CHECK(Sublattice(standard_lattice("Gamma"), r12.basis_Gamma_d).contains(extra));

    for (long d = 8; d <= 80; d += 2) {
        if (d % 6 == 4)
            continue;
        NLVectorReport const r = hassett_triple(d);
        CHECK(abs(determinant(r.gram_K)) == d);
        CHECK(abs(determinant(r.gram_L)) == d);
        CHECK(r.gram_Gamma_d == expected_gamma_d_gram(d));
        CHECK(binary_forms_equivalent(r.gram_K, expected_k_gram(d)));
        std::vector<mpz_class> shape{d};
        if (d % 9 == 0)
            shape = {3, d / 3};
        CHECK(r.disc_K.invariant_factors == shape);
        CHECK(r.disc_Gamma_d.invariant_factors == shape);
        CHECK(r.disc_K.is_cyclic() == (d % 9 != 0));
        CHECK(signature(GramLattice(r.gram_Gamma_d)) == Signature{2, 19, 0});
        CHECK(signature(GramLattice(r.gram_K)) == Signature{0, 2, 0});
    }
    CHECK(error_kind([] { hassett_triple(10); }) == ErrorKind::NotSpecialDiscriminant);
}

TEST_CASE("complements of K_d and L_d share genus invariants")
{
    for (long d : {8L, 12L, 14L, 18L, 26L}) {
        NLVectorReport const r = hassett_triple(d);
        auto rows = [](IntMatrix const & m) {
            std::vector<IntVector> v;
            for (std::size_t i = 0; i < m.rows(); ++i)
                v.push_back(m.row(i));
            return v;
        };
        GramLattice const kp = orthogonal_complement(standard_lattice("Gammabar"), rows(r.basis_K)).as_lattice();
        GramLattice const lp = orthogonal_complement(standard_lattice("LambdaTilde"), rows(r.basis_L)).as_lattice();
        CHECK(kp.rank() == lp.rank());
        CHECK(signature(kp) == signature(lp));
        CHECK(abs(determinant(kp)) == abs(determinant(lp)));
        CHECK(disc_group(kp).invariant_factors == disc_group(lp).invariant_factors);
    }
}

TEST_CASE("binary forms")
{
    CHECK(binary_forms_equivalent(IntMatrix{{-3, 1}, {1, -5}}, IntMatrix{{-5, 1}, {1, -3}}));
    CHECK(binary_forms_equivalent(IntMatrix{{-3, 1}, {1, -5}}, IntMatrix{{-3, -2}, {-2, -6}}));
    CHECK(!binary_forms_equivalent(IntMatrix{{-2, 1}, {1, -8}}, IntMatrix{{-3, 1}, {1, -5}}));
    CHECK(!binary_forms_equivalent(IntMatrix{{-2, 0}, {0, -6}}, IntMatrix{{-3, 0}, {0, -4}}));
}

TEST_CASE("Eichler invariants")
{
    EichlerInvariant const e14 = eichler_invariants(nl_vector(14));
    CHECK(e14.square == -42);
    CHECK(e14.div == 3);
    CHECK(std::abs(e14.disc_class) == 1);
    EichlerInvariant const e12 = eichler_invariants(nl_vector(12));
    CHECK(e12.square == -4);
    CHECK(e12.div == 1);
    CHECK(e12.disc_class == 0);

    IntVector const alt = gamma_e(1) - mpz_class(3) * gamma_f(1);
    IntVector alt_u2 = gamma_e(2) - mpz_class(3) * gamma_f(2);
    CHECK(eichler_invariants(nl_vector(18)).equivalent_up_to_sign(eichler_invariants(alt)));
    CHECK(eichler_invariants(nl_vector(18)).equivalent_up_to_sign(eichler_invariants(alt_u2)));
    CHECK(eichler_invariants(nl_vector(14)).equivalent_up_to_sign(eichler_invariants(-nl_vector(14))));
    for (long d = 8; d <= 100; d += 2) {
        if (d % 6 == 4)
            continue;
        EichlerInvariant const e = eichler_invariants(nl_vector(d));
        CHECK((e.div == 1 || e.div == 3));
        if (e.div == 1)
            CHECK(e.disc_class == 0);
    }
    CHECK(error_kind([] { eichler_invariants(IntVector(22)); }) == ErrorKind::ZeroVector);
}

TEST_CASE("kdoo index")
{
    GramLattice const gb = standard_lattice("Gammabar");
    for (long d : {12L, 18L, 24L}) {
        KdooWitness const w = kdoo_index(d);
        CHECK(w.index == 2);
        REQUIRE(w.involution);
        IntMatrix const & g = *w.involution;
        CHECK(g * gb.gram() * g.transposed() == gb.gram());
        CHECK(w.involution_preserves_gram);
        CHECK(w.involution_fixes_h2);
        CHECK(w.involution_negates_v);
    }
    for (long d : {14L, 20L, 26L}) {
        KdooWitness const w = kdoo_index(d);
        CHECK(w.index == 1);
        CHECK(!w.involution);
        CHECK(w.plus_third_in_K);
        CHECK(!w.minus_third_in_K);
    }
    CHECK(error_kind([] { kdoo_index(16); }) == ErrorKind::NotSpecialDiscriminant);
}

TEST_CASE("boundary witnesses")
{
    GramLattice const l = standard_lattice("Lambda");
    for (long d = 2; d <= 100; d += 2) {
        BoundaryWitnesses const b = boundary_witnesses(d);
        CHECK(b.delta1.has_value() == ((d / 2) % 4 == 1));
        CHECK(check_boundary_witness(d, b.delta0).passed());
        if (b.delta1) {
            CHECK(check_boundary_witness(d, *b.delta1).passed());
            CHECK(l.square(*b.delta1) == -2);
            CHECK(l.pair(*b.delta1, ell(d)) == 0);
        }
    }
    IntVector const e1 = basis_e(Frame::Lambda, 1), f1 = basis_f(Frame::Lambda, 1);
    IntVector const e2 = basis_e(Frame::Lambda, 2), f2 = basis_f(Frame::Lambda, 2);
    BoundaryWitnesses const b10 = boundary_witnesses(10);
    CHECK(b10.delta0 == e1 - f1);
    REQUIRE(b10.delta1);
    CHECK(*b10.delta1 == mpz_class(2) * e1 + mpz_class(2) * f1 + e2 - mpz_class(5) * f2);
    CHECK(!boundary_witnesses(8).delta1);
    CHECK(!check_boundary_witness(10, e1).passed());
    CHECK(error_kind([] { boundary_witnesses(7); }) == ErrorKind::InvalidDegree);
}

TEST_CASE("genus comparison")
{
    CHECK(genus_compare(14));
    CHECK(!genus_compare(8));
    CHECK(!genus_compare(12));
    CHECK(genus_compare(26));
    CHECK(error_kind([] { genus_compare(14, 5); }) == ErrorKind::SearchCapExceeded);
}

TEST_CASE("hyperbolic planes through A2")
{
    GramLattice const lt = standard_lattice("LambdaTilde");
    for (int i = 1; i <= 4; ++i) {
        HyperbolicPair const p = find_hyperbolic_AT(lt_e(i), lt_f(i));
        HyperbolicCheck const c = check_hyperbolic_AT(lt_e(i), lt_f(i), p);
        CHECK(c.isotropic);
        CHECK(c.unit_pairing);
        CHECK(c.rank_three);
        CHECK(c.in_saturation);
        CHECK(lt.square(p.e) == 0);
        CHECK(lt.square(p.f) == 0);
        CHECK(lt.pair(p.e, p.f) == 1);
    }
    // the example pair for U1
    HyperbolicPair const ex{lambda1() + lt_e(1) - lt_f(1), lambda2() - lt_e(1) + lt_f(1)};
    CHECK(check_hyperbolic_AT(lt_e(1), lt_f(1), ex).passed());
    CHECK(error_kind([] { find_hyperbolic_AT(lt_e(1), lt_e(2)); }) == ErrorKind::NotHyperbolicPair);
    CHECK(error_kind([] { find_hyperbolic_AT(lt_e(1), lt_f(1) + lt_f(1)); }) == ErrorKind::NotHyperbolicPair);
}
