#pragma once

#include <stdexcept>
#include <string>

namespace fatcat {

/// Malformed or inconsistent input: unknown ids, schema violations, bad
/// parameters. The CLI maps this to exit code 1.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request that has no defined answer (support over zero
/// objects, an unreachable density target, an oversized exact enumeration).
/// The CLI maps this to exit code 2.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace fatcat
