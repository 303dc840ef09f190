#ifndef BIQO_ERRORS_HPP
#define BIQO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace biqo {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Shape or dimension mismatch between operands.
class DimensionError : public Error {
public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation
// (overlap outside [0,1], non-Hermitian input, invalid probability, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// Numerical failure at runtime (rank deficiency, non-finite objective,
// failed internal cross-check).
class NumericError : public Error {
public:
  using Error::Error;
};

} // namespace biqo

#endif
