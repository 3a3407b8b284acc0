#pragma once

#include <stdexcept>
#include <string>

namespace trigopt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Root system construction and geometry.
struct UnsupportedType : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// Weyl group generation.
struct GroupTooLarge : Error { using Error::Error; };

// Polynomials and Toeplitz encoding.
struct ZeroPolynomial : Error { using Error::Error; };
struct SupportTooLarge : Error { using Error::Error; };
struct NotConjugateSymmetric : Error { using Error::Error; };

// Representation theory.
struct WeightSetNotStable : Error { using Error::Error; };
struct UnsupportedGroup : Error { using Error::Error; };
struct NonIntegralMultiplicity : Error { using Error::Error; };
struct RankDeficiency : Error { using Error::Error; };
struct NotInvariant : Error { using Error::Error; };

// SDP assembly and certification.
struct DegreeTooSmall : Error { using Error::Error; };
struct BasisMismatch : Error { using Error::Error; };
struct InfeasibleCertificate : Error { using Error::Error; };

// Input handling.
struct ParseError : Error { using Error::Error; };

}  // namespace trigopt
