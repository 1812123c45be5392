#ifndef GAUDINLAB_ERRORS_HPP
#define GAUDINLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gaudinlab {

// All failures surface as typed exceptions so verification drivers can
// distinguish "identity is false" from "input outside contract".

struct DivisionByZero : std::runtime_error {
  explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct ContextMismatch : std::logic_error {
  explicit ContextMismatch(const std::string& what) : std::logic_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct BoundExceeded : std::invalid_argument {
  explicit BoundExceeded(const std::string& what) : std::invalid_argument(what) {}
};

// Substitution maps a variable with a negative exponent to a non-unit image.
struct NonInvertibleImage : std::runtime_error {
  explicit NonInvertibleImage(const std::string& what) : std::runtime_error(what) {}
};

// A value that had to be a polynomial kept a negative exponent.
struct NegativeExponentResidue : std::runtime_error {
  explicit NegativeExponentResidue(const std::string& what) : std::runtime_error(what) {}
};

// Two symmetric functions expected to agree up to a scalar do not.
struct NotProportional : std::runtime_error {
  explicit NotProportional(const std::string& what) : std::runtime_error(what) {}
};

struct WeightMismatch : std::invalid_argument {
  explicit WeightMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace gaudinlab

#endif
