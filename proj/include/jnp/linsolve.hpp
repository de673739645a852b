// Exact rational linear algebra, fraction-free elimination.
#pragma once

#include <optional>
#include <vector>

#include "jnp/rational.hpp"

namespace jnp {

// One solution of A x = b, free variables set to zero; nullopt when the
// system is inconsistent. A is rectangular, rows are equations.
std::optional<std::vector<Q>> solve_linear(std::vector<std::vector<Q>> A, std::vector<Q> b);

}  // namespace jnp
