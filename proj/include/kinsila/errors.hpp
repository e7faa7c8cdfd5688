#pragma once

#include <stdexcept>
#include <string>

namespace kinsila {

/// A structural theorem failed on input that passed validation. Carries a
/// human-readable certificate of the violation; only an implementation bug
/// (or a non-Lie input slipping past validation) can produce one.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& theorem, const std::string& certificate)
      : std::runtime_error(theorem + ": " + certificate), theorem_(theorem), certificate_(certificate) {}

  const std::string& theorem() const { return theorem_; }
  const std::string& certificate() const { return certificate_; }

 private:
  std::string theorem_;
  std::string certificate_;
};

/// Input outside the supported method (e.g. Levi factor with non-abelian radical).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structure constants that do not define a Lie algebra.
class InvalidLieAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace kinsila
