#pragma once

#include <cstdint>
#include <vector>

#include "zariski/surface.hpp"

namespace zariski::bounds {

inline constexpr std::uintmax_t kDefaultMaxSubsets = std::uintmax_t{1} << 20;

// max over registered curves of -C^2; 0 when the registry is empty.
Int negativity_bound(const SurfaceModel& x);

// (-tr(S)/k)^k for a symmetric negative definite k x k matrix: the exact
// arithmetic-geometric-mean ceiling on |det(S)|.
// Throws NotNegativeDefinite (or NotSymmetric via the definiteness test).
Rat amgm_det_bound(const IntMatrix& s);

// Intersection matrix of all registered curves, in registry order.
IntMatrix curve_intersection_matrix(const SurfaceModel& x);

// max |det| over all negative definite principal submatrices of the full
// curve intersection matrix, over sizes 1..max_size. max_size == 0 selects
// the default min(curve count, rank-1). Returns 1 for an empty registry.
// Throws EnumerationTooLarge (carrying the required subset count) instead of
// silently truncating when the enumeration would exceed max_subsets.
Int enumerate_denominator_bound(const SurfaceModel& x, std::size_t max_size = 0,
                                std::uintmax_t max_subsets = kDefaultMaxSubsets);

// b^(rho-1); requires b >= 1, rho >= 1.
Int theorem_d_bound(const Int& b, std::size_t rho);

// d * d! * |delta|, with the factorial computed exactly; requires d >= 1.
Int theorem_b_bound(const Int& d, const Int& delta_abs);

struct PrimitiveDecomposition {
    DivisorClass primitive;  // gcd of coordinates is 1
    Int k;                   // original class = k * primitive
};

// Splits a nonzero integral class into its primitive generator and the
// positive multiple. Throws ZeroClass on the zero class.
PrimitiveDecomposition primitive_decomposition(const DivisorClass& c);

struct RealizedDenominator {
    DivisorClass divisor;  // A + k C
    Int denominator;       // -C^2 / gcd(C^2, A.C), the predicted Zariski denominator
    Int k;                 // smallest integer > alpha, so the negative part is nonzero
    Rat alpha;             // -A.C / C^2
};

// Builds the divisor A + k C whose decomposition is (A + alpha C) + (k - alpha) C
// and realizes the predicted denominator on the support {C}.
RealizedDenominator realize_denominator(const SurfaceModel& x, std::size_t curve_index);

// Whether t divides every entry of c^t * gram, i.e. t | D.C for every
// integral divisor class D (the standard basis generates them all).
bool adjugate_divisibility_check(const SurfaceModel& x, const DivisorClass& c, const Int& t);

// The bound sheet for one surface.
struct SurfaceBounds {
    Int b;            // negativity bound
    std::size_t rho;  // lattice rank
    Int delta_abs;    // |det(gram)|
    Int d_enum;       // enumerated denominator bound
    Int d_theorem;    // b^(rho-1) (1 when no curves are registered)
    Int b_theorem;    // d_enum * d_enum! * |delta|
};

SurfaceBounds compute_bounds(const SurfaceModel& x, std::size_t max_size = 0,
                             std::uintmax_t max_subsets = kDefaultMaxSubsets);

}  // namespace zariski::bounds
