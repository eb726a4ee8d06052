#ifndef DUNKL_ERRORS_HPP
#define DUNKL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dunkl {

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an integrand produces a non-finite value at a quadrature node.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double node)
      : std::runtime_error(what), node_(node) {}

  double node() const noexcept { return node_; }

 private:
  double node_;
};

}  // namespace dunkl

#endif  // DUNKL_ERRORS_HPP
