#pragma once

#include <stdexcept>
#include <string>

namespace resurgence {

/// Thrown when a search exceeds its node budget.  Callers that can report
/// partial results catch this and set a truncation flag instead of failing;
/// the CLI maps it to a dedicated exit code.
class ResourceGuardError : public std::runtime_error {
public:
  explicit ResourceGuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace resurgence
