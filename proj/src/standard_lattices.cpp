#include "cubick3/standard_lattices.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "cubick3/error.hpp"

namespace cubick3 {

namespace {

IntMatrix hyperbolic(long sign = 1)
{
    return IntMatrix{{0, sign}, {sign, 0}};
}

IntMatrix e8()
{
    // Bourbaki labelling: chain 1-3-4-5-6-7-8, node 2 attached to 4.
    static constexpr int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    IntMatrix m(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        m(i, i) = 2;
    for (auto const & e : edges) {
        m(e[0], e[1]) = -1;
        m(e[1], e[0]) = -1;
    }
    return m;
}

IntMatrix a2() { return IntMatrix{{2, -1}, {-1, 2}}; }

IntMatrix e_block()
{
    IntMatrix const neg = -e8();
    std::vector<IntMatrix> blocks{neg, neg};
    return block_diagonal(blocks);
}

IntMatrix assemble(std::vector<IntMatrix> const & blocks)
{
    return block_diagonal(blocks);
}

std::size_t plane_offset(Frame frame, int i)
{
    int const planes = frame == Frame::LambdaTilde ? 4 : frame == Frame::Lambda ? 3 : 2;
    if (i < 1 || i > planes)
        throw LatticeError(ErrorKind::UnknownLattice,
                           "hyperbolic plane U" + std::to_string(i) + " is not part of this frame");
    return kERank + 2 * static_cast<std::size_t>(i - 1);
}

IntVector unit(std::size_t n, std::size_t at, long value = 1)
{
    IntVector v(n);
    v[at] = value;
    return v;
}

} // namespace

std::size_t frame_rank(Frame frame)
{
    switch (frame) {
    case Frame::Gammabar: return 23;
    case Frame::Gamma: return 22;
    case Frame::Lambda: return 22;
    case Frame::LambdaTilde: return 24;
    }
    return 0;
}

GramLattice frame_lattice(Frame frame)
{
    switch (frame) {
    case Frame::Gammabar:
        return GramLattice(assemble({e_block(), hyperbolic(), hyperbolic(), -IntMatrix::identity(3)}),
                           "Gammabar");
    case Frame::Gamma:
        return GramLattice(assemble({e_block(), hyperbolic(), hyperbolic(), -a2()}), "Gamma");
    case Frame::Lambda:
        return GramLattice(assemble({e_block(), hyperbolic(), hyperbolic(), hyperbolic()}), "Lambda");
    case Frame::LambdaTilde:
        return GramLattice(
            assemble({e_block(), hyperbolic(), hyperbolic(), hyperbolic(), hyperbolic(-1)}),
            "LambdaTilde");
    }
    throw LatticeError(ErrorKind::UnknownLattice, "unknown frame");
}

GramLattice lambda_d(long d)
{
    if (d <= 0 || d % 2 != 0)
        throw LatticeError(ErrorKind::InvalidDegree, "LambdaD needs an even positive degree, got "
                                                         + std::to_string(d));
    IntMatrix last(1, 1);
    last(0, 0) = -d;
    return GramLattice(assemble({e_block(), hyperbolic(), hyperbolic(), last}),
                       "LambdaD(" + std::to_string(d) + ")");
}

GramLattice standard_lattice(std::string_view name)
{
    if (name == "U")
        return GramLattice(hyperbolic(), "U");
    if (name == "E8")
        return GramLattice(e8(), "E8");
    if (name == "E")
        return GramLattice(e_block(), "E");
    if (name == "A2")
        return GramLattice(a2(), "A2");
    if (name == "A2m")
        return GramLattice(-a2(), "A2m");
    if (name == "I03")
        return GramLattice(-IntMatrix::identity(3), "I03");
    if (name == "Gammabar")
        return frame_lattice(Frame::Gammabar);
    if (name == "Gamma")
        return frame_lattice(Frame::Gamma);
    if (name == "Lambda")
        return frame_lattice(Frame::Lambda);
    if (name == "LambdaTilde")
        return frame_lattice(Frame::LambdaTilde);
    if (name.starts_with("LambdaD(") && name.ends_with(")")) {
        std::string_view const digits = name.substr(8, name.size() - 9);
        long d = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
        if (ec == std::errc() && ptr == digits.data() + digits.size())
            return lambda_d(d);
    }
    throw LatticeError(ErrorKind::UnknownLattice, "no standard lattice named '" + std::string(name) + "'");
}

IntVector basis_e(Frame frame, int i)
{
    return unit(frame_rank(frame), plane_offset(frame, i));
}

IntVector basis_f(Frame frame, int i)
{
    return unit(frame_rank(frame), plane_offset(frame, i) + 1);
}

IntVector h_squared()
{
    IntVector h(23);
    h[20] = h[21] = h[22] = 1;
    return h;
}

IntVector lambda1()
{
    auto const t = Frame::LambdaTilde;
    return basis_e(t, 4) - basis_f(t, 4);
}

IntVector lambda2()
{
    auto const t = Frame::LambdaTilde;
    return basis_e(t, 3) + basis_f(t, 3) + basis_f(t, 4);
}

IntVector mu1()
{
    auto const t = Frame::LambdaTilde;
    return basis_e(t, 3) - basis_f(t, 3);
}

IntVector mu2()
{
    auto const t = Frame::LambdaTilde;
    return -(basis_e(t, 3) + basis_e(t, 4) + basis_f(t, 4));
}

IntVector gamma_mu1() { return unit(22, 20); }
IntVector gamma_mu2() { return unit(22, 21); }

IntMatrix gamma_into_gammabar()
{
    IntMatrix m(22, 23);
    for (std::size_t i = 0; i < 20; ++i)
        m(i, i) = 1;
    m(20, 20) = 1;
    m(20, 21) = -1;
    m(21, 21) = 1;
    m(21, 22) = -1;
    return m;
}

IntMatrix gamma_into_lambda_tilde()
{
    IntMatrix m(22, 24);
    for (std::size_t i = 0; i < 20; ++i)
        m(i, i) = 1;
    m.set_row(20, mu1());
    m.set_row(21, mu2());
    return m;
}

IntVector ell(long d)
{
    if (d <= 0 || d % 2 != 0)
        throw LatticeError(ErrorKind::InvalidDegree, "polarization degree must be even and positive");
    return basis_e(Frame::Lambda, 2) + mpz_class(d / 2) * basis_f(Frame::Lambda, 2);
}

IntMatrix lambda_d_into_lambda(long d)
{
    if (d <= 0 || d % 2 != 0)
        throw LatticeError(ErrorKind::InvalidDegree, "polarization degree must be even and positive");
    IntMatrix m(21, 22);
    for (std::size_t i = 0; i < 18; ++i)
        m(i, i) = 1; // E and U1
    m(18, 20) = 1;   // U (second) -> U3
    m(19, 21) = 1;
    m.set_row(20, basis_e(Frame::Lambda, 2) - mpz_class(d / 2) * basis_f(Frame::Lambda, 2));
    return m;
}

} // namespace cubick3
