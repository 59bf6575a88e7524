#include "cubick3/cubic_k3.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cubick3/error.hpp"
#include "cubick3/normal_form.hpp"

namespace cubick3 {

namespace {

void require_special(long d)
{
    if (d <= 0 || d % 2 != 0 || d % 6 == 4)
        throw LatticeError(ErrorKind::NotSpecialDiscriminant,
                           "d = " + std::to_string(d) + " is not an even positive d = 0, 2 (mod 6)");
}

mpz_class abs_det(IntMatrix const & m)
{
    return abs(determinant(m));
}

SelfCheck check(std::string id, std::string expected, std::string actual)
{
    return {std::move(id), std::move(expected), std::move(actual)};
}

std::string str(mpz_class const & x) { return x.get_str(); }
std::string str(bool b) { return b ? "true" : "false"; }

Sublattice span_of(GramLattice const & ambient, std::vector<IntVector> const & gens)
{
    return span_sublattice(ambient, gens);
}

// a inside b with equal |det| of the induced forms
bool same_lattice(Sublattice const & a, Sublattice const & b)
{
    if (a.rank() != b.rank())
        return false;
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (!b.contains(a.basis().row(i)))
            return false;
    return abs(determinant(a.as_lattice())) == abs(determinant(b.as_lattice()));
}

} // namespace

bool CanonicalEmbeddingReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](SelfCheck const & c) { return c.passed(); });
}

CanonicalEmbeddingReport canonical_embedding_report()
{
    GramLattice const lt = frame_lattice(Frame::LambdaTilde);
    CanonicalEmbeddingReport r;
    std::vector<IntVector> const lambdas{lambda1(), lambda2()};
    std::vector<IntVector> const mus{mu1(), mu2()};
    r.lambda_gram = span_of(lt, lambdas).gram();
    r.mu_gram = span_of(lt, mus).gram();

    bool orthogonal = true;
    for (auto const & l : lambdas)
        for (auto const & m : mus)
            orthogonal = orthogonal && lt.pair(l, m) == 0;

    auto const t = Frame::LambdaTilde;
    r.glue_identity = mpz_class(3) * (basis_e(t, 3) + basis_f(t, 4))
                      == mu1() - mu2() - lambda1() + lambda2();

    Saturation const a2_mu = saturation(span_of(lt, {lambda1(), lambda2(), mu1(), mu2()}));
    r.a2_mu_index = a2_mu.index;
    Sublattice const u34 = span_of(lt, {basis_e(t, 3), basis_f(t, 3), basis_e(t, 4), basis_f(t, 4)});
    bool const a2_mu_is_u34 = hermite_normal_form(a2_mu.lattice.basis()) == hermite_normal_form(u34.basis());

    Sublattice const a2_perp = orthogonal_complement(lt, lambdas);
    r.a2_perp_rank = a2_perp.rank();
    r.a2_perp_det = abs_det(a2_perp.gram());

    std::vector<IntVector> sum_gens = lambdas;
    for (std::size_t i = 0; i < a2_perp.rank(); ++i)
        sum_gens.push_back(a2_perp.basis().row(i));
    Saturation const a2_sum = saturation(span_of(lt, sum_gens));
    r.a2_sum_index = a2_sum.index;
    r.a2_sum_saturation_det = abs_det(a2_sum.lattice.gram());

    std::vector<IntVector> const l1{lambda1()};
    Sublattice const l1_perp = orthogonal_complement(lt, l1);
    r.lambda1_perp_rank = l1_perp.rank();
    r.lambda1_perp_det = abs_det(l1_perp.gram());

    IntVector const fano = lambda1() + mpz_class(2) * lambda2();
    r.fano_class_square = lt.square(fano);
    std::vector<IntVector> fano_gens;
    for (std::size_t i = 0; i < a2_perp.rank(); ++i)
        fano_gens.push_back(a2_perp.basis().row(i));
    fano_gens.push_back(fano);
    Sublattice const fano_sub = span_of(lt, fano_gens);
    r.fano_sublattice_det = abs_det(fano_sub.gram());
    Saturation const fano_sat = saturation(fano_sub);
    r.fano_sublattice_index = fano_sat.index;
    bool const fano_sat_is_l1_perp = fano_sat.lattice.basis() == l1_perp.basis();

    // Gamma is isometric to A2perp (LambdaTilde) and to (h^2)perp (Gammabar)
    GramLattice const gamma = frame_lattice(Frame::Gamma);
    IntMatrix const into_lt = gamma_into_lambda_tilde();
    IntMatrix const into_gb = gamma_into_gammabar();
    GramLattice const gb = frame_lattice(Frame::Gammabar);
    std::vector<IntVector> const h2{h_squared()};
    r.gamma_matches_a2_perp = into_lt * lt.gram() * into_lt.transposed() == gamma.gram()
                              && hermite_normal_form(into_lt) == a2_perp.basis();
    bool const gamma_matches_h2_perp = into_gb * gb.gram() * into_gb.transposed() == gamma.gram()
                                       && hermite_normal_form(into_gb)
                                              == orthogonal_complement(gb, h2).basis();

    r.checks = {
        check("lattice.lambda_gram", "[[2,-1],[-1,2]]", to_string(r.lambda_gram)),
        check("lattice.mu_gram", "[[-2,1],[1,-2]]", to_string(r.mu_gram)),
        check("lattice.lambda_mu_orthogonal", "true", str(orthogonal)),
        check("lattice.glue_identity", "true", str(r.glue_identity)),
        check("lattice.a2_mu_index", "3", str(r.a2_mu_index)),
        check("lattice.a2_mu_saturation_is_U3U4", "true", str(a2_mu_is_u34)),
        check("lattice.a2_perp_rank", "22", std::to_string(r.a2_perp_rank)),
        check("lattice.a2_perp_det", "3", str(r.a2_perp_det)),
        check("lattice.a2_sum_index", "3", str(r.a2_sum_index)),
        check("lattice.a2_sum_saturation_det", "1", str(r.a2_sum_saturation_det)),
        check("lattice.lambda1_perp_rank", "23", std::to_string(r.lambda1_perp_rank)),
        check("lattice.lambda1_perp_det", "2", str(r.lambda1_perp_det)),
        check("lattice.fano_class_square", "6", str(r.fano_class_square)),
        check("lattice.fano_sublattice_det", "18", str(r.fano_sublattice_det)),
        check("lattice.fano_sublattice_index", "3", str(r.fano_sublattice_index)),
        check("lattice.fano_saturation_is_lambda1_perp", "true", str(fano_sat_is_l1_perp)),
        check("lattice.gamma_is_a2_perp", "true", str(r.gamma_matches_a2_perp)),
        check("lattice.gamma_is_h2_perp", "true", str(gamma_matches_h2_perp)),
    };
    return r;
}

std::string to_string(NLCase c)
{
    return c == NLCase::Saturated ? "saturated" : "index3";
}

IntVector nl_vector(long d)
{
    require_special(d);
    auto const g = Frame::Gamma;
    if (d % 6 == 0)
        return basis_e(g, 1) - mpz_class(d / 6) * basis_f(g, 1);
    mpz_class const k = (d - 2) / 6;
    return mpz_class(3) * (basis_e(g, 1) - k * basis_f(g, 1)) + gamma_mu1() - gamma_mu2();
}

NLVectorReport hassett_triple(long d)
{
    NLVectorReport r;
    r.d = d;
    r.v = nl_vector(d);
    r.nl_case = d % 6 == 0 ? NLCase::Saturated : NLCase::IndexThree;
    r.excluded_from_smooth_image = d == 2 || d == 6;

    GramLattice const gamma = frame_lattice(Frame::Gamma);
    r.v_square = gamma.square(r.v);

    Saturation const k = saturation(
        span_of(frame_lattice(Frame::Gammabar), {h_squared(), embed(gamma_into_gammabar(), r.v)}));
    Saturation const l = saturation(span_of(frame_lattice(Frame::LambdaTilde),
                                            {lambda1(), lambda2(), embed(gamma_into_lambda_tilde(), r.v)}));
    std::vector<IntVector> const vs{r.v};
    Sublattice const gd = orthogonal_complement(gamma, vs);

    // K_d and Gamma_d are reported in the displayed bases, once these are confirmed to
    // span the computed lattices
    GramLattice const gammabar = frame_lattice(Frame::Gammabar);
    IntVector second = embed(gamma_into_gammabar(), r.v);
    if (d % 6 != 0) {
        second = second - h_squared();
        for (auto & x : second)
            mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 3);
    }
    Sublattice const k_shown = span_of(gammabar, {h_squared(), second});
    Sublattice const gd_shown(gamma, explicit_gamma_d_basis(d));
    if (!same_lattice(k_shown, k.lattice) || !same_lattice(gd_shown, gd))
        throw std::logic_error("displayed bases do not span K_d, Gamma_d for d = " + std::to_string(d));

    r.basis_K = k_shown.basis();
    r.basis_L = l.lattice.basis();
    r.basis_Gamma_d = gd_shown.basis();
    r.gram_K = k_shown.gram();
    r.gram_L = l.lattice.gram();
    r.gram_Gamma_d = gd_shown.gram();
    r.index_K = k.index;
    r.index_L = l.index;
    r.disc_K = disc_group(k.lattice.as_lattice("K_" + std::to_string(d)));
    r.disc_Gamma_d = disc_group(gd.as_lattice("Gamma_" + std::to_string(d)));
    return r;
}

IntMatrix expected_k_gram(long d)
{
    require_special(d);
    if (d % 6 == 0)
        return IntMatrix{{-3, 0}, {0, -d / 3}};
    return IntMatrix{{-3, 1}, {1, -(d + 1) / 3}};
}

IntMatrix explicit_gamma_d_basis(long d)
{
    require_special(d);
    auto const g = Frame::Gamma;
    IntMatrix b(21, 22);
    for (std::size_t i = 0; i < kERank; ++i)
        b(i, i) = 1;
    b.set_row(16, basis_e(g, 2));
    b.set_row(17, basis_f(g, 2));
    if (d % 6 == 0) {
        b.set_row(18, gamma_mu1());
        b.set_row(19, gamma_mu2());
        b.set_row(20, basis_e(g, 1) + mpz_class(d / 6) * basis_f(g, 1));
    } else {
        mpz_class const k = (d - 2) / 6;
        b.set_row(18, gamma_mu1() + gamma_mu2());
        b.set_row(19, -basis_f(g, 1) - gamma_mu1());
        b.set_row(20, -basis_e(g, 1) - k * basis_f(g, 1));
    }
    return b;
}

IntMatrix expected_gamma_d_gram(long d)
{
    require_special(d);
    std::vector<IntMatrix> blocks{standard_lattice("E").gram(), standard_lattice("U").gram()};
    if (d % 6 == 0) {
        blocks.push_back(standard_lattice("A2m").gram());
        blocks.push_back(IntMatrix{{d / 3}});
    } else {
        blocks.push_back(IntMatrix{{-2, 1, 0}, {1, -2, 1}, {0, 1, (d - 2) / 3}});
    }
    return block_diagonal(blocks);
}

std::array<mpz_class, 3> reduced_binary_form(IntMatrix const & gram)
{
    if (gram.rows() != 2 || !gram.is_symmetric())
        throw LatticeError(ErrorKind::DimensionMismatch, "binary form needs a symmetric 2x2 Gram");
    mpz_class a = gram(0, 0), b = 2 * gram(0, 1), c = gram(1, 1);
    if (b * b - 4 * a * c >= 0)
        throw LatticeError(ErrorKind::DegenerateLattice, "binary form is not definite");
    if (a < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    // Gauss reduction of a x^2 + b xy + c y^2: |b| <= a <= c
    for (;;) {
        if (c < a) {
            std::swap(a, c);
            b = -b;
        }
        if (abs(b) <= a)
            break;
        // x -> x - t y with t = round(b / 2a)
        mpz_class t;
        mpz_class const num = b + a;
        mpz_class const den = 2 * a;
        mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        mpz_class const b2 = b - 2 * a * t;
        c = c - b * t + a * t * t;
        b = b2;
    }
    // GL2(Z) also allows y -> -y
    return {a, abs(b) / 2, c};
}

bool binary_forms_equivalent(IntMatrix const & x, IntMatrix const & y)
{
    return reduced_binary_form(x) == reduced_binary_form(y) && (x(0, 0) > 0) == (y(0, 0) > 0);
}

NLClassification classify_nl_vector(IntVector const & v)
{
    GramLattice const gamma = frame_lattice(Frame::Gamma);
    if (v.size() != gamma.rank() || is_zero(v) || !is_primitive(gamma, v))
        throw LatticeError(ErrorKind::InvalidNLVector, "vector must be primitive in Gamma");
    mpz_class const sq = gamma.square(v);
    if (sq >= 0)
        throw LatticeError(ErrorKind::InvalidNLVector, "vector must have negative square");
    Saturation const k = saturation(
        span_of(frame_lattice(Frame::Gammabar), {h_squared(), embed(gamma_into_gammabar(), v)}));
    if (k.index == 1)
        return {NLCase::Saturated, mpz_class(-3 * sq).get_si()};
    if (k.index == 3)
        return {NLCase::IndexThree, mpz_class(-sq / 3).get_si()};
    throw std::logic_error("saturation index of <h^2, v> is " + k.index.get_str()
                           + ", expected 1 or 3");
}

EichlerInvariant eichler_invariants(IntVector const & v)
{
    static GramLattice const gamma = frame_lattice(Frame::Gamma);
    static DiscGroup const a_gamma = disc_group(gamma);
    if (is_zero(v))
        throw LatticeError(ErrorKind::ZeroVector, "Eichler invariants of the zero vector");
    EichlerInvariant inv;
    inv.square = gamma.square(v);
    inv.div = divisibility(gamma, v);
    if (inv.div == 1)
        return inv;
    // (1/div) v is a dual vector; identify its class with c * generator, c in {1, 2}
    RatVector y(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        y[i] = mpq_class(v[i], inv.div);
    for (auto & x : y)
        x.canonicalize();
    RatVector const & g = a_gamma.generators.front();
    for (int c = 0; c < 3; ++c) {
        RatVector diff(y.size());
        for (std::size_t i = 0; i < y.size(); ++i)
            diff[i] = y[i] - c * g[i];
        if (to_integral(diff).size() == diff.size()) {
            inv.disc_class = c == 2 ? -1 : c;
            return inv;
        }
    }
    throw std::logic_error("divisibility " + inv.div.get_str() + " not compatible with A_Gamma = Z/3");
}

KdooWitness kdoo_index(long d)
{
    require_special(d);
    GramLattice const gb = frame_lattice(Frame::Gammabar);
    IntVector const v = embed(gamma_into_gammabar(), nl_vector(d));
    IntVector const h2 = h_squared();
    Saturation const k = saturation(span_of(gb, {h2, v}));

    KdooWitness w;
    auto third = [](IntVector const & x) {
        RatVector r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            r[i] = mpq_class(x[i], 3);
        for (auto & q : r)
            q.canonicalize();
        return r;
    };
    w.plus_third_in_K = k.lattice.contains(third(v - h2));
    w.minus_third_in_K = k.lattice.contains(third(-v - h2));

    if (d % 6 == 0) {
        IntMatrix g = IntMatrix::identity(gb.rank());
        g(16, 16) = -1; // -id on U1
        g(17, 17) = -1;
        w.involution_preserves_gram = g.transposed() * gb.gram() * g == gb.gram();
        w.involution_fixes_h2 = g * h2 == h2;
        w.involution_negates_v = g * v == -v;
        w.involution = std::move(g);
        if (w.involution_preserves_gram && w.involution_fixes_h2 && w.involution_negates_v)
            w.index = 2;
    } else if (w.plus_third_in_K && !w.minus_third_in_K) {
        w.index = 1;
    }
    if (w.index == 0)
        throw std::logic_error("no stabilizer-index witness verified for d = " + std::to_string(d));
    return w;
}

BoundaryWitnesses boundary_witnesses(long d)
{
    if (d < 2 || d % 2 != 0)
        throw LatticeError(ErrorKind::InvalidDegree, "boundary witnesses need an even d >= 2");
    auto const l = Frame::Lambda;
    BoundaryWitnesses w;
    w.delta0 = basis_e(l, 1) - basis_f(l, 1);
    long const half = d / 2;
    if (half % 4 == 1)
        w.delta1 = mpz_class(2) * basis_e(l, 1) + mpz_class((half - 1) / 2) * basis_f(l, 1)
                   + basis_e(l, 2) - mpz_class(half) * basis_f(l, 2);
    return w;
}

BoundaryCheck check_boundary_witness(long d, IntVector const & delta)
{
    GramLattice const lambda = frame_lattice(Frame::Lambda);
    BoundaryCheck c;
    c.square = lambda.square(delta);
    c.pairing_with_ell = lambda.pair(delta, ell(d));
    Sublattice const ld(lambda, lambda_d_into_lambda(d));
    auto const coords = ld.coordinates_of(to_rational(delta));
    c.primitive_in_lambda_d = coords && content(*coords) == 1;
    return c;
}

bool genus_compare(long d, long cap)
{
    require_special(d);
    GramLattice const gamma = frame_lattice(Frame::Gamma);
    std::vector<IntVector> const v{nl_vector(d)};
    GramLattice const gd = orthogonal_complement(gamma, v).as_lattice("Gamma_" + std::to_string(d));
    GramLattice const ld = lambda_d(d);
    if (gd.rank() != ld.rank() || !(signature(gd) == signature(ld)))
        return false;
    DiscGroup const a = disc_group(gd);
    DiscGroup const b = disc_group(ld);
    if (a.order() > cap || b.order() > cap)
        throw LatticeError(ErrorKind::SearchCapExceeded,
                           "discriminant group order exceeds search cap " + std::to_string(cap));
    return isomorphic_discriminant_forms(a, b, cap);
}

namespace {

Saturation hyperbolic_saturation(GramLattice const & lt, IntVector const & e, IntVector const & f)
{
    IntMatrix gens = IntMatrix::from_rows(std::vector<IntVector>{lambda1(), lambda2(), e, f}, lt.rank());
    return saturation(Sublattice(lt, hermite_normal_form(gens)));
}

bool spans_rank_three(IntVector const & e, IntVector const & f)
{
    return rank(IntMatrix::from_rows(std::vector<IntVector>{lambda1(), lambda2(), e, f}, e.size())) == 3;
}

// Returns f, or -f when (e.f) = -1 (the convention on U4).
IntVector require_hyperbolic(GramLattice const & lt, IntVector const & e, IntVector const & f)
{
    if (e.size() != lt.rank() || f.size() != lt.rank())
        throw LatticeError(ErrorKind::DimensionMismatch, "hyperbolic pair must live in LambdaTilde");
    mpz_class const ef = lt.pair(e, f);
    if (lt.square(e) != 0 || lt.square(f) != 0 || abs(ef) != 1)
        throw LatticeError(ErrorKind::NotHyperbolicPair,
                           "need (e.e) = (f.f) = 0 and (e.f) = +-1");
    return ef == 1 ? f : -f;
}

} // namespace

HyperbolicCheck check_hyperbolic_AT(IntVector const & e, IntVector const & f,
                                    HyperbolicPair const & candidate)
{
    GramLattice const lt = frame_lattice(Frame::LambdaTilde);
    Saturation const t = hyperbolic_saturation(lt, e, f);
    HyperbolicCheck c;
    c.isotropic = lt.square(candidate.e) == 0 && lt.square(candidate.f) == 0;
    c.unit_pairing = lt.pair(candidate.e, candidate.f) == 1;
    c.rank_three = spans_rank_three(candidate.e, candidate.f);
    c.in_saturation = t.lattice.contains(candidate.e) && t.lattice.contains(candidate.f);
    return c;
}

HyperbolicPair find_hyperbolic_AT(IntVector const & e, IntVector const & f, long bound)
{
    GramLattice const lt = frame_lattice(Frame::LambdaTilde);
    IntVector const f1 = require_hyperbolic(lt, e, f);
    if (bound <= 0)
        throw LatticeError(ErrorKind::SearchExhausted, "search bound must be positive");
    if (spans_rank_three(e, f1))
        return {e, f1};

    Saturation const t = hyperbolic_saturation(lt, e, f1);
    IntMatrix const & basis = t.lattice.basis();
    IntMatrix const & gram = t.lattice.gram();
    std::size_t const r = basis.rows();

    // isotropic coefficient vectors in lexicographic order
    std::vector<IntVector> isotropic;
    IntVector c(r, mpz_class(-bound));
    for (;;) {
        if (!is_zero(c) && dot(c, gram * c) == 0)
            isotropic.push_back(c);
        std::size_t k = r;
        while (k > 0) {
            --k;
            if (c[k] < bound) {
                ++c[k];
                break;
            }
            c[k] = -bound;
            if (k == 0)
                goto enumerated;
        }
    }
enumerated:
    auto to_ambient = [&](IntVector const & coeffs) { return embed(basis, coeffs); };
    for (auto const & ce : isotropic) {
        IntVector const gce = gram * ce;
        for (auto const & cf : isotropic) {
            if (dot(gce, cf) != 1)
                continue;
            IntVector ee = to_ambient(ce), ff = to_ambient(cf);
            if (spans_rank_three(ee, ff))
                return {std::move(ee), std::move(ff)};
        }
    }
    throw LatticeError(ErrorKind::SearchExhausted,
                       "no hyperbolic pair with coordinates bounded by " + std::to_string(bound));
}

} // namespace cubick3
