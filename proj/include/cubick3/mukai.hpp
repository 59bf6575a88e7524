#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

namespace cubick3 {

/*
 * A class a0 + a1 h + a2 h^2 + a3 h^3 + a4 h^4 in the algebraic cohomology of a
 * cubic fourfold, with h^5 = 0 and integral(h^4) = 3.
 */
class CohClass
{
    std::array<mpq_class, 5> c_{};

  public:
    CohClass() = default;
    CohClass(std::array<mpq_class, 5> coeffs);
    /* from "p/q" strings */
    static CohClass parse(std::array<char const *, 5> coeffs);
    static CohClass power_of_h(int k, mpq_class const & coeff = 1);

    mpq_class const & operator[](std::size_t i) const { return c_[i]; }
    mpq_class & operator[](std::size_t i) { return c_[i]; }
    std::array<mpq_class, 5> const & coefficients() const { return c_; }

    /* negates odd-degree coefficients */
    CohClass dual() const;
    mpq_class integral() const { return 3 * c_[4]; }
    bool is_zero() const;

    friend bool operator==(CohClass const &, CohClass const &) = default;
    friend CohClass operator+(CohClass const & a, CohClass const & b);
    friend CohClass operator-(CohClass const & a, CohClass const & b);
    friend CohClass operator*(CohClass const & a, CohClass const & b); // truncated cup product
    friend CohClass operator*(mpq_class const & k, CohClass const & a);
};

std::string to_string(CohClass const & a);

/* exp(k h) truncated */
CohClass exp_h(mpq_class const & k);
/* multiplicative inverse of a class with nonzero constant term */
CohClass series_inverse(CohClass const & a);
/* square root with constant term 1, by Newton iteration s <- (s + a / s) / 2 */
CohClass series_sqrt(CohClass const & a);

struct CharacteristicClasses {
    CohClass chern;
    CohClass todd;
    CohClass sqrt_todd;
};
CharacteristicClasses characteristic_classes();

CohClass mukai_vector_line(long k);
std::array<CohClass, 2> u_classes();

/* -integral(exp(3h/2) * a^dual * b); not symmetric */
mpq_class mukai_pairing(CohClass const & a, CohClass const & b);

/* chi(X, O(k)) = C(k+5, 5) - C(k+2, 5) */
mpz_class euler_line(long k);
/* generalized binomial C(n, k) for integer n, k >= 0 */
mpz_class binomial(long n, unsigned k);

/* The class a - c0 w0 - c1 w1 - c2 w2 right-orthogonal to w0, w1, w2. */
CohClass project_right(CohClass const & a);
/* Same projection against an explicit triple (used to audit alternative w's). */
CohClass project_right(CohClass const & a, std::array<CohClass, 3> const & w);

struct MukaiSet {
    CohClass w0, w1, w2, u1, u2, vl1, vl2;
};
MukaiSet mukai_set();

/* Mukai pairing on (v(lambda1), v(lambda2)).  With the pairing as defined above
 * (so that (w_i.w_j) = -chi(O(j-i))) this is the A2 Gram [[2,-1],[-1,2]]; its
 * negative is A2(-1). */
std::array<std::array<mpq_class, 2>, 2> a2_mukai_gram();

} // namespace cubick3
