#include "cubick3/pell.hpp"

#include <stdexcept>

namespace cubick3 {

namespace {

bool is_square(mpz_class const & n, mpz_class & root)
{
    if (n < 0)
        return false;
    root = sqrt(n);
    return root * root == n;
}

using Solution = std::pair<mpz_class, mpz_class>;

void keep_least(std::optional<Solution> & best, mpz_class x, mpz_class const & y)
{
    if (y <= 0)
        return;
    x = abs(x);
    if (!best || y < best->second || (y == best->second && x < best->first))
        best = Solution{x, y};
}

std::optional<Solution> solve_square_modulus(mpz_class const & s, mpz_class const & N)
{
    // (x - s y)(x + s y) = N
    std::optional<Solution> best;
    mpz_class const m = abs(N);
    for (mpz_class a = 1; a * a <= m; ++a) {
        if (m % a != 0)
            continue;
        for (mpz_class const & u : {mpz_class(a), mpz_class(m / a)})
            for (int sign : {1, -1}) {
                mpz_class const lo = sign * u;
                mpz_class const hi = N / lo;
                mpz_class const xs = lo + hi, ys = hi - lo;
                if (xs % 2 != 0 || ys % (2 * s) != 0)
                    continue;
                keep_least(best, xs / 2, ys / (2 * s));
            }
    }
    return best;
}

// |N| < sqrt(D): the primitive solutions are exactly the convergents hitting N.
std::optional<Solution> solve_by_convergents(mpz_class const & D, mpz_class const & N)
{
    SqrtContinuedFraction const cf = sqrt_continued_fraction(D);
    std::size_t const len = cf.period.size();
    mpz_class p_prev = 1, p = cf.a0;
    mpz_class q_prev = 0, q = 1;
    for (std::size_t k = 0; k < 2 * len; ++k) {
        if (p * p - D * q * q == N)
            return Solution{p, q};
        mpz_class const & a = cf.period[k % len];
        mpz_class const p_next = a * p + p_prev;
        mpz_class const q_next = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
    return std::nullopt;
}

std::optional<Solution> solve_by_nagell_bound(mpz_class const & D, mpz_class const & N)
{
    auto const [x1, y1] = fundamental_unit(D);
    // N > 0: 0 <= y <= y1 sqrt(N / (2 (x1 + 1)));  N < 0: y <= y1 sqrt(|N| / (2 (x1 - 1)))
    mpz_class const lhs_scale = N > 0 ? mpz_class(2 * (x1 + 1)) : mpz_class(2 * (x1 - 1));
    mpz_class const rhs = y1 * y1 * abs(N);
    std::optional<Solution> best;
    for (mpz_class y = 0; lhs_scale * y * y <= rhs; ++y) {
        mpz_class x;
        if (!is_square(D * y * y + N, x))
            continue;
        for (mpz_class const & sx : {x, mpz_class(-x)})
            for (mpz_class const & sy : {y, mpz_class(-y)}) {
                keep_least(best, sx, sy);
                // one step along the unit in either direction covers classes with y = 0
                keep_least(best, sx * x1 + D * sy * y1, sx * y1 + sy * x1);
                keep_least(best, sx * x1 - D * sy * y1, -sx * y1 + sy * x1);
            }
    }
    return best;
}

std::optional<Solution> solve_primitive_range(mpz_class const & D, mpz_class const & N)
{
    mpz_class const r = sqrt(D);
    if (abs(N) <= r && abs(N) * abs(N) < D)
        return solve_by_convergents(D, N);
    return solve_by_nagell_bound(D, N);
}

} // namespace

SqrtContinuedFraction sqrt_continued_fraction(mpz_class const & D)
{
    mpz_class root;
    if (D <= 0 || is_square(D, root))
        throw std::invalid_argument("continued fraction needs a positive non-square, got " + D.get_str());
    SqrtContinuedFraction cf;
    cf.a0 = root;
    mpz_class m = 0, d = 1, a = root;
    do {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (cf.a0 + m) / d;
        cf.period.push_back(a);
    } while (a != 2 * cf.a0);
    return cf;
}

std::pair<mpz_class, mpz_class> fundamental_unit(mpz_class const & D)
{
    SqrtContinuedFraction const cf = sqrt_continued_fraction(D);
    std::size_t const len = cf.period.size();
    mpz_class p_prev = 1, p = cf.a0;
    mpz_class q_prev = 0, q = 1;
    for (std::size_t k = 0;; ++k) {
        if (p * p - D * q * q == 1)
            return {p, q};
        mpz_class const & a = cf.period[k % len];
        mpz_class const p_next = a * p + p_prev;
        mpz_class const q_next = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
}

std::optional<std::pair<mpz_class, mpz_class>> solve_generalized_pell(mpz_class const & D,
                                                                       mpz_class const & N)
{
    if (D <= 0)
        throw std::invalid_argument("generalized Pell equation needs D > 0");
    if (N == 0)
        throw std::invalid_argument("generalized Pell equation needs N != 0");
    mpz_class s;
    if (is_square(D, s))
        return solve_square_modulus(s, N);

    std::optional<Solution> best;
    for (mpz_class g = 1; g * g <= abs(N); ++g) {
        if (N % (g * g) != 0)
            continue;
        auto const sol = solve_primitive_range(D, N / (g * g));
        if (sol)
            keep_least(best, g * sol->first, g * sol->second);
    }
    return best;
}

} // namespace cubick3
