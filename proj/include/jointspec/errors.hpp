#pragma once

#include <stdexcept>
#include <string>

namespace jointspec {

// Base of every error raised by the library. Subclasses name the failing contract.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParameterMismatch : public Error { using Error::Error; };
class DimensionMismatch : public Error { using Error::Error; };
class InvalidArgument : public Error { using Error::Error; };
class DegreeCapExceeded : public Error { using Error::Error; };
class TruncationTooSmall : public Error { using Error::Error; };
class NonCommuting : public Error { using Error::Error; };
class ConfigurationError : public Error { using Error::Error; };
class CollisionError : public Error { using Error::Error; };
class EmptyWindow : public Error { using Error::Error; };
class WindowExceeded : public Error { using Error::Error; };
class NonFinite : public Error { using Error::Error; };
class SimplicityViolation : public Error { using Error::Error; };
class InsufficientPoints : public Error { using Error::Error; };
class NotALattice : public Error { using Error::Error; };
class ExtrapolationError : public Error { using Error::Error; };
class RoundingFailure : public Error { using Error::Error; };
class NonRational : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };
class IoError : public Error { using Error::Error; };

}  // namespace jointspec
