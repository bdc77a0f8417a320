#pragma once

#include <cstddef>
#include <vector>

#include "zariski/int_matrix.hpp"
#include "zariski/rat.hpp"

namespace zariski::linalg {

// Exact determinant via fraction-free (Bareiss) elimination with row
// pivoting. No rational intermediates, no rounding.
Int det(const IntMatrix& m);

// S^adj with m * adjugate(m) == det(m) * I, computed from exact cofactors.
// adjugate of a 1x1 matrix is [[1]] by the empty-minor convention.
IntMatrix adjugate(const IntMatrix& m);

// Unique exact solution of S x = b. Fraction-free forward elimination on the
// augmented matrix, rational back-substitution. Throws SingularMatrix when
// det(S) == 0 and DimensionMismatch when sizes disagree. Every entry of the
// result, multiplied by det(S), is an integer (Cramer).
RatVector solve(const IntMatrix& s, const IntVector& b);

// Leading principal minors d_1, ..., d_n from a single fraction-free sweep
// without pivoting. Stops after the first zero minor (the sweep cannot
// continue past it), so the result may be a proper prefix ending in 0.
std::vector<Int> leading_principal_minors(const IntMatrix& m);

// Symmetric S is negative definite iff (-1)^j * d_j > 0 for every leading
// principal minor d_j. Exact integer sign tests; throws NotSymmetric.
bool is_negative_definite(const IntMatrix& s);

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Inertia of a symmetric form, via exact rational congruence reduction
// (diagonalization by symmetric row/column operations). Throws NotSymmetric.
Inertia signature(const IntMatrix& g);

}  // namespace zariski::linalg
