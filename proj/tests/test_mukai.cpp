#include <doctest.h>

#include <set>

#include "cubick3/mukai.hpp"
#include "cubick3/verify.hpp"

using namespace cubick3;

namespace {

CohClass cls(std::array<char const *, 5> c)
{
    return CohClass::parse(c);
}

// chi(O(k)) by counting monomials: h^0(P^5, O(k)) - h^0(P^5, O(k-3)) for k >= 0
long euler_by_count(long k)
{
    auto monomials = [](long deg) -> long {
        if (deg < 0)
            return 0;
        long c = 1;
        for (long i = 1; i <= 5; ++i)
            c = c * (deg + i) / i;
        return c;
    };
    return monomials(k) - monomials(k - 3);
}

} // namespace

TEST_CASE("cohomology arithmetic")
{
    CohClass const h = CohClass::power_of_h(1);
    CHECK((h * h * h * h * h).is_zero());
    CHECK((h * h * h * h).integral() == 3);
    CHECK(cls({"1", "2", "3", "4", "5"}).dual() == cls({"1", "-2", "3", "-4", "5"}));
    CHECK(exp_h(1) == cls({"1", "1", "1/2", "1/6", "1/24"}));
    CHECK(exp_h(2) * exp_h(-2) == CohClass::power_of_h(0));
    CohClass const a = cls({"2", "1/3", "-5", "7/2", "1"});
    CHECK(a * series_inverse(a) == CohClass::power_of_h(0));
    CohClass const b = cls({"1", "3", "-1/7", "2", "9"});
    CohClass const s = series_sqrt(b);
    CHECK(s * s == b);
    CHECK(to_string(cls({"1", "3/4", "0", "-1", "1/2"})) == "(1, 3/4, 0, -1, 1/2)");
}

TEST_CASE("characteristic classes")
{
    CharacteristicClasses const c = characteristic_classes();
    CHECK(c.chern == cls({"1", "3", "6", "2", "9"}));
    CHECK(c.chern.integral() == 27);
    CHECK(c.todd.integral() == 1);
    CHECK(c.sqrt_todd == cls({"1", "3/4", "11/32", "15/128", "121/6144"}));
    CHECK(c.sqrt_todd * c.sqrt_todd == c.todd);
    // chern = (1+h)^6 / (1+3h)
    CohClass const one_h = cls({"1", "1", "0", "0", "0"});
    CohClass p = CohClass::power_of_h(0);
    for (int i = 0; i < 6; ++i)
        p = p * one_h;
    CHECK(c.chern * cls({"1", "3", "0", "0", "0"}) == p);
}

TEST_CASE("Hirzebruch-Riemann-Roch against monomial counts")
{
    CohClass const td = characteristic_classes().todd;
    for (long k = -8; k <= 8; ++k) {
        CHECK((exp_h(k) * td).integral() == mpq_class(euler_line(k)));
        if (k >= 0)
            CHECK(euler_line(k) == euler_by_count(k));
    }
    CHECK(euler_line(0) == 1);
    CHECK(euler_line(1) == 6);
    CHECK(euler_line(-3) == 1);
    CHECK(euler_line(-1) == 0);
    CHECK(binomial(-1, 5) == -1);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(7, 3) == 35);
}

TEST_CASE("Mukai vectors of line bundles")
{
    CohClass const w0 = mukai_vector_line(0);
    CHECK(w0 == characteristic_classes().sqrt_todd);
    CHECK(mukai_vector_line(1) == cls({"1", "7/4", "51/32", "385/384", "2921/6144"}));
    CohClass const w2 = mukai_vector_line(2);
    CHECK(w2 == cls({"1", "11/4", "123/32", "1397/384", "16025/6144"}));
    for (long i = -3; i <= 3; ++i)
        for (long j = -3; j <= 3; ++j)
            CHECK(mukai_pairing(mukai_vector_line(i), mukai_vector_line(j)) == -mpq_class(euler_line(j - i)));
}

TEST_CASE("Mukai pairing")
{
    CohClass const w0 = mukai_vector_line(0), w1 = mukai_vector_line(1);
    CHECK(mukai_pairing(w0, w0) == -1);
    CHECK(mukai_pairing(w0, w1) == -6);
    CHECK(mukai_pairing(w1, w0) == 0);
    auto const [u1, u2] = u_classes();
    CHECK(u1 == cls({"0", "0", "0", "1/3", "5/12"}));
    CHECK(u2 == cls({"0", "0", "0", "1/3", "9/12"}));
    CHECK(mukai_pairing(w0, u1) == -2);
    CHECK(mukai_pairing(u1, u2) == 0);
    CHECK(mukai_pairing(u2, u1) == 0);
    CHECK(mukai_pairing(u1, u1) == 0);
    for (long i = 0; i <= 2; ++i)
        for (long j = 1; j <= 2; ++j) {
            CohClass const w = mukai_vector_line(i), u = (j == 1 ? u1 : u2);
            // chi(O(i), O_L(j)) = j - i + 1 and chi(O_L(j), O(i)) = j - i - 2 on a line
            CHECK(mukai_pairing(w, u) == -(j - i + 1));
            CHECK(mukai_pairing(u, w) == -(j - i - 2));
        }
}

TEST_CASE("right projection")
{
    MukaiSet const m = mukai_set();
    CHECK(project_right(m.u1) == cls({"3", "5/4", "-7/32", "-77/384", "41/2048"}));
    CHECK(project_right(m.u1) == m.vl1);
    CHECK(m.vl1 == m.u1 - m.w1 + mpq_class(4) * m.w0);
    CHECK(m.vl2 == m.u2 - m.w2 + mpq_class(4) * m.w1 - mpq_class(6) * m.w0);
    CHECK(project_right(m.u2) == m.vl2);
    CHECK(project_right(m.w2).is_zero());
    CHECK(project_right(m.vl1) == m.vl1);
    for (auto const & w : {m.w0, m.w1, m.w2})
        for (auto const & v : {m.vl1, m.vl2})
            CHECK(mukai_pairing(w, v) == 0);
    CohClass const x = cls({"1/2", "-3", "5/7", "1", "-2/3"});
    CHECK(project_right(project_right(x)) == project_right(x));
}

TEST_CASE("A2 Gram of the projected classes")
{
    auto const g = a2_mukai_gram();
    CHECK(g[0][0] == 2);
    CHECK(g[0][1] == -1);
    CHECK(g[1][0] == -1);
    CHECK(g[1][1] == 2);
    MukaiSet const m = mukai_set();
    CHECK(mukai_pairing(m.vl1, m.vl1) == 2);
}

TEST_CASE("verify suite")
{
    VerifySummary const s = run_verify();
    for (auto const & c : s.failures())
        INFO(c.id << ": expected " << c.expected << ", got " << c.actual);
    CHECK(s.ok());
    CHECK(s.checks_run() > 100);

    VerifyOptions bad;
    bad.w2_h2_override = mpq_class(132, 32);
    VerifySummary const t = run_verify(bad);
    std::set<std::string> failed;
    for (auto const & c : t.failures())
        failed.insert(c.id);
    CHECK(failed.count("mukai.pairing.w0.w2"));
    CHECK(failed.count("mukai.pairing.w1.w2"));
    CHECK(failed.count("mukai.pairing.w2.w2"));
    CHECK(!failed.count("mukai.pairing.w0.w1"));
    CHECK(!t.ok());
}
