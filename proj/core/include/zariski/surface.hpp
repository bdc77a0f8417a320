#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zariski/divisor.hpp"
#include "zariski/int_matrix.hpp"
#include "zariski/linalg.hpp"

namespace zariski {

// A registered negative curve. self_int caches cls^2 and is recomputed, never
// trusted from input files.
struct CurveRecord {
    std::string name;
    DivisorClass cls;
    Int self_int;

    friend bool operator==(const CurveRecord&, const CurveRecord&) = default;
};

struct Violation {
    std::string invariant;
    std::string detail;
};

// A lattice model of a smooth projective surface: the numerical divisor
// class group with its intersection form, a distinguished ample class, and a
// complete registry of the negative curves. Nefness is decidable here by a
// finite test: only registered curves can witness a failure.
//
// Immutable after construction/load by convention; all queries are const.
struct SurfaceModel {
    std::string name;
    std::size_t rank = 0;
    IntMatrix gram;
    DivisorClass ample;
    std::vector<CurveRecord> curves;
    // Names of the lattice basis vectors, used by the CLI divisor expression
    // syntax; defaults to e0, e1, ... when absent from a file.
    std::vector<std::string> basis;

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

    Int pairing(const DivisorClass& u, const DivisorClass& v) const;
    Rat pairing(const RationalDivisor& u, const RationalDivisor& v) const;

    Int discriminant() const { return linalg::det(gram); }

    // P is nef iff P^2 >= 0, P.A >= 0 and P.C >= 0 for every registered curve.
    bool is_nef(const RationalDivisor& p) const;

    // Empty iff every model invariant holds; entries name the failed
    // invariant together with a witness.
    std::vector<Violation> validate() const;

    std::optional<std::size_t> find_curve(const std::string& curve_name) const;

    // Resolves a curve or basis name to its class (curves win ties; gallery
    // models only tie where the two classes coincide).
    std::optional<DivisorClass> resolve_name(const std::string& ident) const;

    static std::vector<std::string> default_basis_names(std::size_t rank);
};

// Builds a model, recomputing curve self-intersections and filling in
// default basis names. Throws ValidationError if the result fails validate().
SurfaceModel make_surface(std::string name, IntMatrix gram, DivisorClass ample,
                          std::vector<std::pair<std::string, DivisorClass>> curves,
                          std::vector<std::string> basis = {});

}  // namespace zariski
