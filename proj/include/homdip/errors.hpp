#pragma once

#include <stdexcept>
#include <string>

namespace homdip {

// Fourier kernel undersampled on the given grid (spacing * |tau| too large).
class AliasingError : public std::runtime_error {
 public:
  explicit AliasingError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two objects that must live on the same frequency grid do not.
class GridMismatchError : public std::runtime_error {
 public:
  explicit GridMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical post-condition failed (probability out of range, complex residue
// where a real value is required, non-finite data).
class ContractViolation : public std::runtime_error {
 public:
  explicit ContractViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or invalid scenario document.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace homdip
