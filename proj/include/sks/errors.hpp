#ifndef SKS_ERRORS_HPP
#define SKS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sks {

// Base for all library errors. Each subclass maps 1:1 onto a C API status
// code (see skspline.h).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

// Generator (or shape) matrix singular, or condition estimate beyond the
// gate where the symbol sums lose all significant digits.
class SingularMatrix : public Error {
public:
  using Error::Error;
};

class SizeOverflow : public Error {
public:
  using Error::Error;
};

// The periodized symbol vanished numerically: the solvability hypothesis
// of the cardinal construction fails at some evaluation point.
class DegenerateSymbol : public Error {
public:
  using Error::Error;
};

// The coefficient table does not reproduce the symbol reciprocal off-grid;
// the Fourier-series representation is not numerically valid at this N.
class ReconstructionFailure : public Error {
public:
  using Error::Error;
};

class IllConditioned : public Error {
public:
  using Error::Error;
};

}  // namespace sks

#endif
