#pragma once

#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "cubick3/discriminant_form.hpp"
#include "cubick3/lattice.hpp"
#include "cubick3/standard_lattices.hpp"

namespace cubick3 {

struct SelfCheck {
    std::string id;
    std::string expected;
    std::string actual;

    bool passed() const { return expected == actual; }
};

/* The fixed-vector identities around A2 = <lambda1, lambda2> in LambdaTilde. */
struct CanonicalEmbeddingReport {
    IntMatrix lambda_gram;
    IntMatrix mu_gram;
    bool glue_identity = false; // 3 (e3 + f4) == mu1 - mu2 - lambda1 + lambda2
    mpz_class a2_mu_index;      // [sat(A2 + A2(-1)) : A2 + A2(-1)] inside U3 + U4
    mpz_class a2_sum_index;     // [sat(A2 + A2perp) : A2 + A2perp]
    mpz_class a2_sum_saturation_det;
    std::size_t a2_perp_rank = 0;
    mpz_class a2_perp_det;
    std::size_t lambda1_perp_rank = 0;
    mpz_class lambda1_perp_det;
    mpz_class fano_class_square;     // (lambda1 + 2 lambda2)^2
    mpz_class fano_sublattice_det;   // |det| (A2perp + Z(lambda1 + 2 lambda2))
    mpz_class fano_sublattice_index; // its index in lambda1perp
    bool gamma_matches_a2_perp = false;
    std::vector<SelfCheck> checks;

    bool all_passed() const;
};

CanonicalEmbeddingReport canonical_embedding_report();

enum class NLCase { Saturated, IndexThree };
std::string to_string(NLCase c);

/* Vectors below live in Gamma coordinates unless stated otherwise. */
IntVector nl_vector(long d);

struct NLVectorReport {
    long d = 0;
    IntVector v;
    mpz_class v_square;
    NLCase nl_case = NLCase::Saturated;
    IntMatrix basis_K; // Gammabar coordinates
    IntMatrix basis_L; // LambdaTilde coordinates
    IntMatrix basis_Gamma_d;
    IntMatrix gram_K, gram_L, gram_Gamma_d;
    mpz_class index_K, index_L;
    DiscGroup disc_K, disc_Gamma_d;
    bool excluded_from_smooth_image = false; // d = 2, 6
};

NLVectorReport hassett_triple(long d);

/* Displayed shapes: K_d for d = 2 (6) is equivalent to [[-3,1],[1,-(d+1)/3]];
 * Gamma_d has an explicit basis with block Gram E + U + A (d = 2 (6)) or
 * E + U + A2(-1) + <d/3> (d = 0 (6)). */
IntMatrix expected_k_gram(long d);
IntMatrix explicit_gamma_d_basis(long d);
IntMatrix expected_gamma_d_gram(long d);

/* Canonical representative (a, b, c) of a definite binary form [[a,b],[b,c]] under
 * GL2(Z): the sign is normalized to positive definite, then Gauss-reduced. */
std::array<mpz_class, 3> reduced_binary_form(IntMatrix const & gram);
bool binary_forms_equivalent(IntMatrix const & a, IntMatrix const & b);

struct NLClassification {
    NLCase nl_case;
    long d;
};
NLClassification classify_nl_vector(IntVector const & v);

struct EichlerInvariant {
    mpz_class square;
    mpz_class div;
    int disc_class = 0; // 0 or +-1, sign relative to a fixed generator of A_Gamma = Z/3

    bool equivalent_up_to_sign(EichlerInvariant const & o) const
    {
        return square == o.square && div == o.div && std::abs(disc_class) == std::abs(o.disc_class);
    }
};
EichlerInvariant eichler_invariants(IntVector const & v);

/* Index of the stabilizer of v_d in the stabilizer of K_d, with its witness:
 * an involution of Gammabar (d = 0 (6)) or the membership asymmetry of
 * (1/3)(+-v_d - h^2) in K_d (d = 2 (6)). */
struct KdooWitness {
    int index = 0;
    std::optional<IntMatrix> involution;
    bool involution_preserves_gram = false;
    bool involution_fixes_h2 = false;
    bool involution_negates_v = false;
    bool plus_third_in_K = false;  // (1/3)(v_d - h^2) in K_d
    bool minus_third_in_K = false; // (1/3)(-v_d - h^2) in K_d
};
KdooWitness kdoo_index(long d);

/* Lambda coordinates. */
struct BoundaryWitnesses {
    IntVector delta0;
    std::optional<IntVector> delta1;
};
BoundaryWitnesses boundary_witnesses(long d);

struct BoundaryCheck {
    mpz_class square;
    mpz_class pairing_with_ell;
    bool primitive_in_lambda_d = false;

    bool passed() const { return square == -2 && pairing_with_ell == 0 && primitive_in_lambda_d; }
};
BoundaryCheck check_boundary_witness(long d, IntVector const & delta);

/* Gamma_d and LambdaD(d): equal rank, signature and isomorphic discriminant forms. */
bool genus_compare(long d, long cap = kDefaultFormSearchCap);

inline constexpr long kDefaultHyperbolicBound = 4;

/* LambdaTilde coordinates. */
struct HyperbolicPair {
    IntVector e;
    IntVector f;
};
struct HyperbolicCheck {
    bool isotropic = false;
    bool unit_pairing = false;
    bool rank_three = false;
    bool in_saturation = false;

    bool passed() const { return isotropic && unit_pairing && rank_three && in_saturation; }
};
HyperbolicPair find_hyperbolic_AT(IntVector const & e, IntVector const & f,
                                  long bound = kDefaultHyperbolicBound);
HyperbolicCheck check_hyperbolic_AT(IntVector const & e, IntVector const & f,
                                    HyperbolicPair const & candidate);

} // namespace cubick3
