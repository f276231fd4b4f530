#pragma once

#include "lbiso/scheme.hpp"

#include <vector>

namespace lbiso {

/// Names of the schemes shipped with the library, in registration order.
const std::vector<std::string>& builtin_scheme_names();

/// Returns the cached built-in scheme; throws Error for unknown names.
const Scheme& builtin_scheme(const std::string& name);

}  // namespace lbiso
