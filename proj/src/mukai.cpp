#include "cubick3/mukai.hpp"

#include <stdexcept>
#include <vector>

#include "cubick3/normal_form.hpp"

namespace cubick3 {

CohClass::CohClass(std::array<mpq_class, 5> coeffs)
    : c_(std::move(coeffs))
{
    for (auto & x : c_)
        x.canonicalize();
}

CohClass CohClass::parse(std::array<char const *, 5> coeffs)
{
    std::array<mpq_class, 5> c;
    for (std::size_t i = 0; i < 5; ++i)
        c[i] = mpq_class(coeffs[i]);
    return CohClass(c);
}

CohClass CohClass::power_of_h(int k, mpq_class const & coeff)
{
    CohClass a;
    if (k >= 0 && k < 5)
        a.c_[k] = coeff;
    return a;
}

CohClass CohClass::dual() const
{
    CohClass a = *this;
    a.c_[1] = -a.c_[1];
    a.c_[3] = -a.c_[3];
    return a;
}

bool CohClass::is_zero() const
{
    for (auto const & x : c_)
        if (x != 0)
            return false;
    return true;
}

CohClass operator+(CohClass const & a, CohClass const & b)
{
    CohClass r;
    for (std::size_t i = 0; i < 5; ++i)
        r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

CohClass operator-(CohClass const & a, CohClass const & b)
{
    return a + mpq_class(-1) * b;
}

CohClass operator*(CohClass const & a, CohClass const & b)
{
    CohClass r;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; i + j < 5; ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
}

CohClass operator*(mpq_class const & k, CohClass const & a)
{
    CohClass r;
    for (std::size_t i = 0; i < 5; ++i)
        r.c_[i] = k * a.c_[i];
    return r;
}

std::string to_string(CohClass const & a)
{
    std::string s = "(";
    for (std::size_t i = 0; i < 5; ++i)
        s += (i ? ", " : "") + a[i].get_str();
    return s + ")";
}

CohClass exp_h(mpq_class const & k)
{
    CohClass r;
    mpq_class term = 1;
    for (int i = 0; i < 5; ++i) {
        r[i] = term;
        term = term * k / (i + 1);
    }
    return r;
}

CohClass series_inverse(CohClass const & a)
{
    if (a[0] == 0)
        throw std::domain_error("series inverse needs a nonzero constant term");
    CohClass r;
    r[0] = 1 / a[0];
    for (std::size_t n = 1; n < 5; ++n) {
        mpq_class s = 0;
        for (std::size_t i = 1; i <= n; ++i)
            s += a[i] * r[n - i];
        r[n] = -s / a[0];
    }
    return r;
}

CohClass series_sqrt(CohClass const & a)
{
    if (a[0] != 1)
        throw std::domain_error("series square root expects constant term 1");
    CohClass s = CohClass::power_of_h(0);
    mpq_class const half(1, 2);
    for (;;) {
        CohClass const next = half * (s + a * series_inverse(s));
        if (next == s)
            return s;
        s = next;
    }
}

CharacteristicClasses characteristic_classes()
{
    // c(X) = (1 + h)^6 / (1 + 3h)
    CohClass one_plus_h{{1, 1, 0, 0, 0}};
    CohClass power = CohClass::power_of_h(0);
    for (int i = 0; i < 6; ++i)
        power = power * one_plus_h;
    CohClass const chern = power * series_inverse(CohClass{{1, 3, 0, 0, 0}});

    CohClass const c1 = CohClass::power_of_h(1, chern[1]);
    CohClass const c2 = CohClass::power_of_h(2, chern[2]);
    CohClass const c3 = CohClass::power_of_h(3, chern[3]);
    CohClass const c4 = CohClass::power_of_h(4, chern[4]);
    // td = 1 + c1/2 + (c1^2 + c2)/12 + c1 c2/24 + (-c1^4 + 4 c1^2 c2 + 3 c2^2 + c1 c3 - c4)/720
    CohClass const c1sq = c1 * c1;
    CohClass todd = CohClass::power_of_h(0) + mpq_class(1, 2) * c1 + mpq_class(1, 12) * (c1sq + c2)
                    + mpq_class(1, 24) * (c1 * c2)
                    + mpq_class(1, 720)
                          * (mpq_class(-1) * (c1sq * c1sq) + mpq_class(4) * (c1sq * c2)
                             + mpq_class(3) * (c2 * c2) + c1 * c3 - c4);
    return {chern, todd, series_sqrt(todd)};
}

CohClass mukai_vector_line(long k)
{
    static CohClass const sqrt_td = characteristic_classes().sqrt_todd;
    return exp_h(mpq_class(k)) * sqrt_td;
}

std::array<CohClass, 2> u_classes()
{
    return {CohClass{{0, 0, 0, mpq_class(1, 3), mpq_class(5, 12)}},
            CohClass{{0, 0, 0, mpq_class(1, 3), mpq_class(9, 12)}}};
}

mpq_class mukai_pairing(CohClass const & a, CohClass const & b)
{
    return -(exp_h(mpq_class(3, 2)) * a.dual() * b).integral();
}

mpz_class binomial(long n, unsigned k)
{
    mpz_class num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n - static_cast<long>(i);
        den *= i + 1;
    }
    return num / den;
}

mpz_class euler_line(long k)
{
    return binomial(k + 5, 5) - binomial(k + 2, 5);
}

CohClass project_right(CohClass const & a, std::array<CohClass, 3> const & w)
{
    // sum_j c_j (w_i . w_j) = (w_i . a)
    std::vector<RatVector> m(3, RatVector(4));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j)
            m[i][j] = mukai_pairing(w[i], w[j]);
        m[i][3] = mukai_pairing(w[i], a);
    }
    for (std::size_t c = 0; c < 3; ++c) {
        std::size_t p = c;
        while (p < 3 && m[p][c] == 0)
            ++p;
        if (p == 3)
            throw std::domain_error("Mukai pairing is degenerate on the projection span");
        std::swap(m[c], m[p]);
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            mpq_class const f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < 4; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    CohClass r = a;
    for (std::size_t i = 0; i < 3; ++i)
        r = r - (m[i][3] / m[i][i]) * w[i];
    return r;
}

CohClass project_right(CohClass const & a)
{
    return project_right(a, {mukai_vector_line(0), mukai_vector_line(1), mukai_vector_line(2)});
}

MukaiSet mukai_set()
{
    MukaiSet s;
    s.w0 = mukai_vector_line(0);
    s.w1 = mukai_vector_line(1);
    s.w2 = mukai_vector_line(2);
    auto const u = u_classes();
    s.u1 = u[0];
    s.u2 = u[1];
    s.vl1 = project_right(s.u1);
    s.vl2 = project_right(s.u2);
    return s;
}

std::array<std::array<mpq_class, 2>, 2> a2_mukai_gram()
{
    MukaiSet const s = mukai_set();
    CohClass const v[2] = {s.vl1, s.vl2};
    for (auto const & w : {s.w0, s.w1, s.w2})
        for (auto const & x : v)
            if (mukai_pairing(w, x) != 0)
                throw std::logic_error("v(lambda) is not right-orthogonal to w0, w1, w2");
    std::array<std::array<mpq_class, 2>, 2> g;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            g[i][j] = mukai_pairing(v[i], v[j]);
    if (g[0][1] != g[1][0])
        throw std::logic_error("Mukai pairing is not symmetric on v(lambda1), v(lambda2)");
    return g;
}

} // namespace cubick3
