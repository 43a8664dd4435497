#pragma once

#include "cusg/named.hpp"

#include <optional>
#include <string>

namespace cusg {

struct IdentityResult {
  std::optional<NamedCu> result;  // nullopt: Unsupported
  std::string rule;               // the identity applied, or why none applies
};

// Closed-form Cu tensor products of named semirings. Never guesses: anything outside
// the identity table is reported as unsupported.
IdentityResult cu_tensor_identity(const NamedCu& lhs, const NamedCu& rhs);

}  // namespace cusg
