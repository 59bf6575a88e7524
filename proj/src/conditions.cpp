#include "cubick3/conditions.hpp"

#include <cmath>
#include <numeric>

#include "cubick3/error.hpp"
#include "cubick3/pell.hpp"

namespace cubick3 {

namespace {

void require_even_positive(long d)
{
    if (d <= 0)
        throw LatticeError(ErrorKind::InvalidDegree, "d must be positive, got " + std::to_string(d));
    if (d % 2 != 0)
        throw LatticeError(ErrorKind::InvalidParity, "d must be even, got " + std::to_string(d));
}

} // namespace

std::string to_string(CaseMod6 c)
{
    switch (c) {
    case CaseMod6::Zero: return "0";
    case CaseMod6::Two: return "2";
    case CaseMod6::NotSpecial: return "NotSpecial";
    }
    return "NotSpecial";
}

std::vector<std::pair<mpz_class, unsigned>> factorize(mpz_class n)
{
    if (n <= 0)
        throw std::invalid_argument("factorize needs a positive integer");
    std::vector<std::pair<mpz_class, unsigned>> f;
    for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e)
            f.emplace_back(p, e);
    }
    if (n > 1)
        f.emplace_back(n, 1);
    return f;
}

bool a2_represents(long d, bool primitive)
{
    require_even_positive(d);
    for (auto const & [p, e] : factorize(d / 2)) {
        bool const two_mod_three = p % 3 == 2;
        if (primitive) {
            if (two_mod_three || (p == 3 && e > 1))
                return false;
        } else if (two_mod_three && e % 2 != 0) {
            return false;
        }
    }
    return true;
}

std::vector<A2Vector> a2_bruteforce(long d)
{
    require_even_positive(d);
    long r = static_cast<long>(std::sqrt(static_cast<double>(d)));
    while (r * r < d)
        ++r;
    std::vector<A2Vector> out;
    for (long x = -r; x <= r; ++x)
        for (long y = -r; y <= r; ++y)
            if (2 * x * x - 2 * x * y + 2 * y * y == d)
                out.push_back({x, y, std::gcd(x, y) == 1});
    return out;
}

std::optional<Witness> witness_sss(long d)
{
    require_even_positive(d);
    auto const sol = solve_generalized_pell(mpz_class(2 * d), mpz_class(-3));
    if (!sol)
        return std::nullopt;
    // x is odd since x^2 = 2 d y^2 - 3
    return Witness{(sol->first - 1) / 2, sol->second};
}

std::optional<Witness> witness_ss(long d)
{
    require_even_positive(d);
    for (long n = 0; n <= 2 * d; ++n) {
        mpz_class const value = 2 * (mpz_class(n) * n + n + 1);
        if (value % d == 0)
            return Witness{n, value / d};
    }
    return std::nullopt;
}

ConditionFlags condition_flags(long d)
{
    require_even_positive(d);
    ConditionFlags f;
    f.d = d;
    f.case_mod6 = d % 6 == 0 ? CaseMod6::Zero : d % 6 == 2 ? CaseMod6::Two : CaseMod6::NotSpecial;
    f.star = f.case_mod6 != CaseMod6::NotSpecial;
    f.starstar_prime = f.star && a2_represents(d, false);
    f.starstar = f.starstar_prime && a2_represents(d, true);
    if (f.starstar) {
        f.ss_witness = witness_ss(d);
        f.sss_witness = witness_sss(d);
    }
    f.starstarstar = f.starstar && f.sss_witness.has_value();
    f.excluded_from_smooth_image = d == 2 || d == 6;
    return f;
}

int boundary_count(long d)
{
    require_even_positive(d);
    return (d / 2) % 4 == 1 ? 2 : 1;
}

PellSolution pell_brakkee(long d)
{
    if (d <= 0 || d % 6 != 0)
        throw LatticeError(ErrorKind::InvalidDegree, "3p^2 - (d/6)q^2 = -1 needs d = 0 (mod 6), got "
                                                         + std::to_string(d));
    // times 3: (3p)^2 - (d/2) q^2 = -3, and 3 | d/2 forces 3 | X
    PellSolution s;
    s.equation = "3p^2 - " + std::to_string(d / 6) + "q^2 = -1";
    mpz_class const D = d / 2;
    auto const sol = solve_generalized_pell(D, mpz_class(-3));
    if (sol)
        s.solution = std::pair{sol->first / 3, sol->second};
    mpz_class root = sqrt(D);
    if (root * root != D)
        s.bound_searched = 2 * sqrt_continued_fraction(D).period.size();
    return s;
}

std::vector<ConditionFlags> table(long max_d, long from)
{
    if (max_d < 8)
        throw LatticeError(ErrorKind::InvalidDegree, "table needs max_d >= 8");
    if (from < 2)
        throw LatticeError(ErrorKind::InvalidDegree, "table needs from >= 2");
    std::vector<ConditionFlags> rows;
    for (long d = from + (from % 2); d <= max_d; d += 2) {
        ConditionFlags f = condition_flags(d);
        if (f.star)
            rows.push_back(std::move(f));
    }
    return rows;
}

} // namespace cubick3
