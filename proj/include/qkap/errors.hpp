#pragma once

#include <stdexcept>

namespace qkap {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// polynomial arithmetic
struct DivisionByZeroError : Error { using Error::Error; };
struct NonDivisibleError : Error { using Error::Error; };
struct ZeroPolynomialError : Error { using Error::Error; };

// q-series families
struct OutOfRangeError : Error { using Error::Error; };

// word families
struct InvalidFamilyError : Error { using Error::Error; };

// bijections
struct NotInImageError : Error { using Error::Error; };

// partitions
struct OutOfBoxError : Error { using Error::Error; };

// difference polynomials
struct InvalidSpecError : Error { using Error::Error; };

// checker
struct UnknownCheckError : Error { using Error::Error; };
struct BoundsTooLargeError : Error { using Error::Error; };

}  // namespace qkap
