#ifndef IREAL_ERRORS_HPP
#define IREAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ireal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument to a library operation (division by zero, empty set,
// negative delta, precondition failure of a decision procedure).
struct DomainError : Error {
  using Error::Error;
};

// Text that does not parse; carries the byte offset of the failure.
struct ParseError : Error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : Error(what), position(pos) {}
};

// A search bounded by an explicit budget ran out before succeeding.
struct BudgetError : Error {
  using Error::Error;
};

// A totality / positivity certificate could not be established.
struct CertificateError : Error {
  using Error::Error;
};

// A lazily evaluated sequence violated its declared monotonicity.
struct ChainError : Error {
  using Error::Error;
};

// A finite set that must be consistent is not.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace ireal

#endif
