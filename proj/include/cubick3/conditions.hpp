#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cubick3 {

/* Residue of d mod 6 for special discriminants; NotSpecial otherwise. */
enum class CaseMod6 { Zero, Two, NotSpecial };
std::string to_string(CaseMod6 c);

struct Witness {
    mpz_class n;
    mpz_class a;

    friend bool operator==(Witness const &, Witness const &) = default;
};

struct ConditionFlags {
    long d = 0;
    bool star = false;
    bool starstar_prime = false;
    bool starstar = false;
    bool starstarstar = false;
    CaseMod6 case_mod6 = CaseMod6::NotSpecial;
    std::optional<Witness> ss_witness;
    std::optional<Witness> sss_witness;
    bool excluded_from_smooth_image = false; // d = 2, 6

    bool chain_holds() const
    {
        return (!starstarstar || starstar) && (!starstar || starstar_prime) && (!starstar_prime || star);
    }
};

struct PellSolution {
    std::string equation;
    std::optional<std::pair<mpz_class, mpz_class>> solution;
    /* The decision is exact; this records the largest y examined by the solver
     * (0 when solved through convergents). */
    mpz_class bound_searched;
};

struct A2Vector {
    long x = 0;
    long y = 0;
    bool primitive = false;

    friend bool operator==(A2Vector const &, A2Vector const &) = default;
};

/* Factorization of n > 0 by trial division, as (prime, exponent) pairs. */
std::vector<std::pair<mpz_class, unsigned>> factorize(mpz_class n);

/* Whether A2 represents d (primitively): criteria on the factorization of d/2. */
bool a2_represents(long d, bool primitive);
/* All (x, y) with 2x^2 - 2xy + 2y^2 = d, |x|, |y| <= ceil(sqrt(d)). */
std::vector<A2Vector> a2_bruteforce(long d);

/* (n, a) with d a^2 = 2n^2 + 2n + 2, from x^2 - 2d y^2 = -3 (x = 2n + 1, y = a). */
std::optional<Witness> witness_sss(long d);
/* Least n in [0, 2d] with d | 2(n^2 + n + 1), a = 2(n^2 + n + 1) / d. */
std::optional<Witness> witness_ss(long d);

ConditionFlags condition_flags(long d);
int boundary_count(long d);
/* 3p^2 - (d/6) q^2 = -1 for d = 0 (mod 6). */
PellSolution pell_brakkee(long d);

/* Flags of every special d in [from, max_d], ascending. */
std::vector<ConditionFlags> table(long max_d, long from = 8);

} // namespace cubick3
