#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zariski/surface.hpp"

namespace zariski {

// The linear system determining the negative-part coefficients over a fixed
// support: S is the intersection matrix of the support curves, b the vector
// of pairings of D against them.
struct NegativePartSystem {
    std::vector<std::size_t> support;  // curve indices, strictly increasing
    IntMatrix S;
    IntVector b;
};

NegativePartSystem negative_part_system(const SurfaceModel& x, const DivisorClass& d,
                                        std::span<const std::size_t> support);

struct NegativeTerm {
    std::size_t curve;  // index into SurfaceModel::curves
    Rat coeff;          // > 0

    friend bool operator==(const NegativeTerm&, const NegativeTerm&) = default;
};

// D = P + sum a_i C_i with P nef, the support intersection matrix negative
// definite, and P orthogonal to every support curve. Coefficients are exact;
// denominator is the lcm of their reduced denominators (1 when N = 0).
struct ZariskiDecomposition {
    RationalDivisor positive;
    std::vector<NegativeTerm> negative;  // ascending curve index
    Int denominator;

    std::vector<std::size_t> support() const;
    RationalDivisor negative_part(const SurfaceModel& x) const;

    friend bool operator==(const ZariskiDecomposition&, const ZariskiDecomposition&) = default;
};

// lcm of the reduced coefficient denominators; 1 for an empty negative part.
Int denominator_of(const std::vector<NegativeTerm>& terms);
inline Int denominator_of(const ZariskiDecomposition& z) { return denominator_of(z.negative); }

// Computes the Zariski decomposition of the integral divisor class d.
//
// Iterative support construction: starting from the empty support, solve the
// negative-part system, subtract, and add every registered curve that still
// pairs negatively with the remainder; repeat until none does. Support
// growth is monotone, so the loop runs at most rank-1 rounds.
//
// Throws NotPseudoEffective (with the failed check as witness) when the
// support matrix stops being negative definite, a solved coefficient turns
// negative, or the final remainder fails P^2 >= 0 or P.A >= 0.
ZariskiDecomposition decompose(const SurfaceModel& x, const DivisorClass& d);

// Rational input: clears denominators, decomposes the integral multiple and
// scales back. The denominator field is recomputed from the scaled
// coefficients; the headline denominator statistic is defined for integral
// input only.
ZariskiDecomposition decompose(const SurfaceModel& x, const RationalDivisor& d);

// Empty iff z is the valid Zariski decomposition of d on x: D = P + N
// exactly, all coefficients positive, support matrix negative definite,
// (D - N) orthogonal to every support curve and nef, |support| <= rank-1,
// and the stored denominator consistent.
std::vector<Violation> verify(const SurfaceModel& x, const DivisorClass& d,
                              const ZariskiDecomposition& z);

// Brute-force subset oracle. Enumerates every subset of registered curves
// with negative definite intersection matrix (in ascending bitmask order),
// solves for the coefficients, and accepts a subset iff all coefficients are
// >= 0 and the remainder is nef. Uniqueness of the decomposition makes all
// accepted candidates agree; the oracle checks that and returns the common
// answer with zero-coefficient curves dropped.
//
// The negative definite subset list depends only on the model, so it can be
// computed once and reused across many divisors.
struct OracleContext {
    const SurfaceModel* model = nullptr;
    IntMatrix full;                       // intersection matrix of all curves
    std::vector<std::uint64_t> nd_masks;  // ascending; includes the empty mask
};

inline constexpr std::size_t kOracleCurveLimit = 16;

// Throws OracleLimitExceeded when the model has more than `limit` curves.
OracleContext make_oracle_context(const SurfaceModel& x, std::size_t limit = kOracleCurveLimit);

ZariskiDecomposition decompose_oracle(const OracleContext& ctx, const DivisorClass& d);
ZariskiDecomposition decompose_oracle(const SurfaceModel& x, const DivisorClass& d,
                                      std::size_t limit = kOracleCurveLimit);

}  // namespace zariski
