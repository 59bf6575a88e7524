#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubick3 {

enum class ErrorKind {
    InvalidGram,
    InvalidTwist,
    DimensionMismatch,
    DegenerateLattice,
    DependentGenerators,
    ZeroVector,
    UnknownLattice,
    NotSpecialDiscriminant,
    InvalidNLVector,
    InvalidDegree,
    InvalidParity,
    SearchCapExceeded,
    NotHyperbolicPair,
    SearchExhausted,
};

std::string_view to_string(ErrorKind kind);

/* All recoverable failures of the library surface as this exception; the
 * kind is what callers (and tests) dispatch on. */
class LatticeError : public std::runtime_error
{
    ErrorKind kind_;

  public:
    LatticeError(ErrorKind kind, std::string const & what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what)
        , kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
};

} // namespace cubick3
