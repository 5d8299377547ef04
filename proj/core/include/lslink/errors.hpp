#pragma once

#include <stdexcept>
#include <string>

namespace lslink {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// lattice_poly
struct NonIntegralExponents : Error { using Error::Error; };
struct TailNotRecognized : Error { using Error::Error; };
struct InvalidTorusParameters : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// h_engine
struct NotLSpaceConsistent : Error { using Error::Error; };
struct AmbiguousSign : Error { using Error::Error; };
struct NonZeroLinking : Error { using Error::Error; };
struct TrivialLink : Error { using Error::Error; };
struct ComponentNotUnknot : Error { using Error::Error; };

// surgery_d
struct InvalidSpinc : Error { using Error::Error; };
struct ZeroFraming : Error { using Error::Error; };

// cw_oracle
struct TruncationTooSmall : Error { using Error::Error; };

// invariants
struct TorsionUnknown : Error { using Error::Error; };
struct LabelMismatch : Error { using Error::Error; };

}  // namespace lslink
