#include "cubick3/normal_form.hpp"

#include <utility>

#include "cubick3/error.hpp"

namespace cubick3 {

std::vector<mpz_class> SmithForm::invariant_factors() const
{
    std::vector<mpz_class> f;
    for (std::size_t i = 0; i < rank; ++i)
        f.push_back(diagonal(i, i));
    return f;
}

namespace {

/* Working state of the Smith reduction; every elementary operation on the
 * matrix is mirrored on the transforms and (inversely) on their inverses. */
struct SmithState {
    IntMatrix a, left, left_inv, right, right_inv;

    void row_add(std::size_t dst, std::size_t src, mpz_class const & c)
    {
        a.add_row_multiple(dst, src, c);
        left.add_row_multiple(dst, src, c);
        left_inv.add_col_multiple(src, dst, -c);
    }
    void col_add(std::size_t dst, std::size_t src, mpz_class const & c)
    {
        a.add_col_multiple(dst, src, c);
        right.add_col_multiple(dst, src, c);
        right_inv.add_row_multiple(src, dst, -c);
    }
    void row_swap(std::size_t i, std::size_t j)
    {
        a.swap_rows(i, j);
        left.swap_rows(i, j);
        left_inv.swap_cols(i, j);
    }
    void col_swap(std::size_t i, std::size_t j)
    {
        a.swap_cols(i, j);
        right.swap_cols(i, j);
        right_inv.swap_rows(i, j);
    }
    void row_negate(std::size_t i)
    {
        a.negate_row(i);
        left.negate_row(i);
        left_inv.negate_col(i);
    }
};

mpz_class tdiv(mpz_class const & n, mpz_class const & d)
{
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

mpz_class fdiv(mpz_class const & n, mpz_class const & d)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

} // namespace

SmithForm smith_normal_form(IntMatrix const & input)
{
    std::size_t const m = input.rows();
    std::size_t const n = input.cols();
    SmithState s{input, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n),
                 IntMatrix::identity(n)};
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        for (;;) {
            // pivot: smallest nonzero |entry| of the trailing block
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (s.a(i, j) != 0
                        && (pi == m || abs(s.a(i, j)) < abs(s.a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m)
                goto finished;
            s.row_swap(t, pi);
            s.col_swap(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s.a(i, t) == 0)
                    continue;
                s.row_add(i, t, -tdiv(s.a(i, t), s.a(t, t)));
                if (s.a(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s.a(t, j) == 0)
                    continue;
                s.col_add(j, t, -tdiv(s.a(t, j), s.a(t, t)));
                if (s.a(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(s.a(i, j).get_mpz_t(), s.a(t, t).get_mpz_t())) {
                        s.row_add(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (s.a(t, t) < 0)
            s.row_negate(t);
    }
finished:
    SmithForm f;
    f.rank = t;
    f.diagonal = std::move(s.a);
    f.left = std::move(s.left);
    f.left_inverse = std::move(s.left_inv);
    f.right = std::move(s.right);
    f.right_inverse = std::move(s.right_inv);
    return f;
}

IntMatrix hermite_normal_form(IntMatrix const & input)
{
    IntMatrix a = input;
    std::size_t const m = a.rows();
    std::size_t const n = a.cols();
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        for (;;) {
            std::size_t p = m;
            for (std::size_t i = r; i < m; ++i)
                if (a(i, j) != 0 && (p == m || abs(a(i, j)) < abs(a(p, j))))
                    p = i;
            if (p == m)
                break;
            a.swap_rows(r, p);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a(i, j) == 0)
                    continue;
                a.add_row_multiple(i, r, -tdiv(a(i, j), a(r, j)));
                if (a(i, j) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (a(r, j) == 0)
            continue;
        if (a(r, j) < 0)
            a.negate_row(r);
        for (std::size_t i = 0; i < r; ++i)
            a.add_row_multiple(i, r, -fdiv(a(i, j), a(r, j)));
        ++r;
    }
    IntMatrix h(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = a(i, j);
    return h;
}

IntMatrix integer_kernel(IntMatrix const & a)
{
    SmithForm f = smith_normal_form(a);
    std::size_t const n = a.cols();
    IntMatrix k(n - f.rank, n);
    for (std::size_t c = f.rank; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i)
            k(c - f.rank, i) = f.right(i, c);
    return k.rows() ? hermite_normal_form(k) : k;
}

std::size_t rank(IntMatrix const & input)
{
    IntMatrix a = input;
    std::size_t const m = a.rows();
    std::size_t const n = a.cols();
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        std::size_t p = r;
        while (p < m && a(p, j) == 0)
            ++p;
        if (p == m)
            continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (a(i, j) == 0)
                continue;
            mpz_class const g = gcd(a(i, j), a(r, j));
            mpz_class const ci = a(r, j) / g;
            mpz_class const cr = a(i, j) / g;
            for (std::size_t k = j; k < n; ++k)
                a(i, k) = ci * a(i, k) - cr * a(r, k);
        }
        ++r;
    }
    return r;
}

mpz_class determinant(IntMatrix const & input)
{
    if (input.rows() != input.cols())
        throw LatticeError(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    std::size_t const n = input.rows();
    if (n == 0)
        return 1;
    IntMatrix a = input;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(v);
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::optional<std::vector<RatVector>> rational_inverse(IntMatrix const & input)
{
    if (input.rows() != input.cols())
        throw LatticeError(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    std::size_t const n = input.rows();
    std::vector<RatVector> a(n, RatVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = input(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(a[c], a[p]);
        mpq_class const inv = 1 / a[c][c];
        for (auto & x : a[c])
            x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            mpq_class const f = a[i][c];
            for (std::size_t j = c; j < 2 * n; ++j)
                a[i][j] -= f * a[c][j];
        }
    }
    std::vector<RatVector> inv(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = a[i][n + j];
    return inv;
}

std::optional<RatVector> solve_in_row_span(IntMatrix const & rows, RatVector const & target)
{
    // Transposed system: columns are the basis rows, augmented by the target.
    std::size_t const k = rows.rows();
    std::size_t const n = rows.cols();
    if (target.size() != n)
        throw LatticeError(ErrorKind::DimensionMismatch, "target length differs from ambient rank");
    std::vector<RatVector> a(n, RatVector(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            a[i][j] = rows(j, i);
        a[i][k] = target[i];
    }
    std::vector<std::size_t> pivot_row(k, n);
    std::size_t r = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = r;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw LatticeError(ErrorKind::DependentGenerators, "basis rows are dependent");
        std::swap(a[r], a[p]);
        mpq_class const inv = 1 / a[r][c];
        for (auto & x : a[r])
            x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            mpq_class const f = a[i][c];
            for (std::size_t j = c; j <= k; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivot_row[c] = r++;
    }
    for (std::size_t i = r; i < n; ++i)
        if (a[i][k] != 0)
            return std::nullopt;
    RatVector coeffs(k);
    for (std::size_t c = 0; c < k; ++c)
        coeffs[c] = a[pivot_row[c]][k];
    return coeffs;
}

} // namespace cubick3
