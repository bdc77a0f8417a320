#pragma once

#include <string>
#include <vector>

#include "zariski/surface.hpp"

namespace zariski::gallery {

// Blow-up of r >= 2 collinear points in the plane. Basis (H, E1..Er),
// gram diag(1,-1,...,-1); negative curves are the E_i and the strict line
// transform Lt = H - sum E_i.
SurfaceModel build_collinear(long r);

// Blow-up of k1 + k2 points, k1 on one line and k2 on another (k1, k2 >= 2).
// Negative curves: the E_i and the two strict transforms L1, L2 with
// L1.L2 = 1.
SurfaceModel build_two_lines(long k1, long k2);

// Rank-2 sublattice model of a product of a genus-g curve with itself in
// characteristic p: basis (F2, Gamma), gram [[0,1],[1,gamma]] with
// gamma = p^n(2-2g); the Frobenius graph Gamma is the only negative class.
// Each n is a separate model. Requires p prime, g >= 2, n >= 1.
SurfaceModel build_frobenius_model(long p, long g, long n);

// Blow-up of r general points, 1 <= r <= 8; the negative curves are exactly
// the classes with C^2 = C.K = -1, found by exhaustive search.
SurfaceModel build_del_pezzo(long r);

// The (-1)-class enumeration behind build_del_pezzo, exposed so tests can
// check stability: the search expands the degree window until two
// consecutive expansions add nothing, then keeps going extra_expansions
// more. Classes come back canonically sorted.
std::vector<DivisorClass> minus_one_classes(long r, long extra_expansions = 0);

struct FamilyScanRow {
    std::vector<long> params;
    Int b;          // negativity bound
    Int d_enum;     // enumerated denominator bound
    Int realized;   // denominator of the family's demonstration divisor
    Int delta_abs;  // |discriminant|
    std::size_t rho;
};

struct FamilyScan {
    std::string family;
    std::vector<std::string> param_names;
    std::vector<FamilyScanRow> rows;
};

FamilyScan scan_collinear(long r_lo, long r_hi);
FamilyScan scan_two_lines(long k1_lo, long k1_hi, long k2_lo, long k2_hi, bool coprime_only);
FamilyScan scan_frobenius(long p, long g, long n_lo, long n_hi);

// The divisor each family's scan decomposes: H + Lt, H + L1 + L2, or
// F2 + Gamma, resolved on the given model.
DivisorClass demo_divisor(const SurfaceModel& x);

// Parses "family:params" shorthand: collinear:R, two-lines:K1,K2,
// frobenius:P,G,N, del-pezzo:R. Throws ParseError on unknown specs.
SurfaceModel build_from_spec(const std::string& spec);

}  // namespace zariski::gallery
