#ifndef G1JAC_ERRORS_HPP
#define G1JAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace g1jac {

// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or out-of-domain input (bad JSON, wrong dimensions, singular
// Weierstrass coefficients, ...).  CLI exit code 2.
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

// Structurally valid input that is not a smooth genus one model: a kernel
// dimension comes out wrong, a proportionality certificate fails, or the
// emitted Jacobian would be singular.  CLI exit code 3.
class DegenerateModel : public Error {
 public:
  explicit DegenerateModel(const std::string& msg) : Error(msg) {}
};

// A condition the underlying theory guarantees failed to hold.  CLI exit
// code 4.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace g1jac

#endif
