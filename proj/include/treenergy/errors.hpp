#pragma once

#include <stdexcept>
#include <string>

namespace treenergy {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph construction / lookup
struct InvalidSpec : Error { using Error::Error; };
struct NotAForest : Error { using Error::Error; };
struct EdgeNotPresent : Error { using Error::Error; };
struct VertexNotPresent : Error { using Error::Error; };
struct SameVertex : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };

// polynomial comparison
struct DegreeMismatch : Error { using Error::Error; };
struct NotMonic : Error { using Error::Error; };
struct NegativeCoefficient : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };

// numerics
struct QuadratureFailure : Error { using Error::Error; };

// enumeration / ranking / verification
struct CapExceeded : Error { using Error::Error; };
struct UnresolvedTie : Error { using Error::Error; };
struct InvalidOrder : Error { using Error::Error; };
struct RangeViolation : Error { using Error::Error; };
struct VerificationFailure : Error { using Error::Error; };

}  // namespace treenergy
