#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace esum {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotOddPrimePower : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };
struct NotAdmissible : Error { using Error::Error; };
struct OrderDoesNotDivide : Error { using Error::Error; };
struct DivisionByZeroPolynomial : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct RangeInconsistent : Error { using Error::Error; };
struct ModeRequiresCoprime : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct EmptyCloud : Error { using Error::Error; };
struct ResolutionTooLow : Error { using Error::Error; };

}  // namespace esum
