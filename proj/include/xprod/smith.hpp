#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace xprod {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Diagonalisation U*A*V = D with unimodular U, V. diag holds the diagonal of
/// D. Pivots are selected deterministically (smallest absolute value, then
/// smallest row and column).
struct SmithForm {
  IntMatrix u, v;
  std::vector<std::int64_t> diag;
};
SmithForm smith_form(IntMatrix a);

/// Solves A x = b (mod m) over Z_m via an integer Smith normal form of the
/// augmented matrix [A | m I]. Returns a solution with entries in [0, m), or
/// nullopt when the system is inconsistent.
std::optional<std::vector<std::int64_t>> solve_mod(const IntMatrix& a,
                                                   const std::vector<std::int64_t>& b,
                                                   std::int64_t m);

}  // namespace xprod
