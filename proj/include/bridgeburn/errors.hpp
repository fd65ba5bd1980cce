#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bridgeburn {

// Malformed or out-of-contract input (bad graph, bad parameters, bad state).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input for which the requested quantity is undefined,
// e.g. capture time on a graph that one cop cannot win.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search hit its explored-state cap before finishing.
// Never a statement about who wins.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t explored)
      : std::runtime_error(what), explored_(explored) {}
  std::uint64_t explored() const noexcept { return explored_; }

 private:
  std::uint64_t explored_;
};

// A policy produced a move that is illegal in the current position.
class PolicyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bridgeburn
