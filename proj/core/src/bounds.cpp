#include "zariski/bounds.hpp"

#include <algorithm>
#include <limits>

#include "zariski/errors.hpp"
#include "zariski/linalg.hpp"

namespace zariski::bounds {

namespace {

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Visits all size-k index combinations of {0,...,n-1} in lexicographic order.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace

Int negativity_bound(const SurfaceModel& x) {
    Int b = 0;
    for (const auto& c : x.curves) b = std::max(b, Int(-c.self_int));
    return b;
}

Rat amgm_det_bound(const IntMatrix& s) {
    if (s.dim() == 0) throw InvalidParameter("amgm_det_bound: empty matrix");
    if (!linalg::is_negative_definite(s))
        throw NotNegativeDefinite("amgm_det_bound: matrix is not negative definite");
    const std::size_t k = s.dim();
    return Rat(pow_int(-s.trace(), k), pow_int(Int(k), k));
}

IntMatrix curve_intersection_matrix(const SurfaceModel& x) {
    const std::size_t n = x.curves.size();
    IntMatrix full(n);
    for (std::size_t i = 0; i < n; ++i) {
        full.at(i, i) = x.curves[i].self_int;
        for (std::size_t j = i + 1; j < n; ++j) {
            full.at(i, j) = x.pairing(x.curves[i].cls, x.curves[j].cls);
            full.at(j, i) = full.at(i, j);
        }
    }
    return full;
}

Int enumerate_denominator_bound(const SurfaceModel& x, std::size_t max_size,
                                std::uintmax_t max_subsets) {
    const std::size_t n = x.curves.size();
    if (n == 0) return 1;
    if (max_size == 0) max_size = std::min(n, x.rank - 1);
    max_size = std::min(max_size, n);

    Int total = 0;
    for (std::size_t k = 1; k <= max_size; ++k) {
        Int c;
        mpz_bin_uiui(c.get_mpz_t(), n, k);
        total += c;
    }
    if (total > Int(static_cast<unsigned long>(max_subsets)))
        throw EnumerationTooLarge(
            "enumerate_denominator_bound: " + total.get_str() + " subsets needed, cap is " +
                std::to_string(max_subsets),
            total.fits_ulong_p() ? static_cast<std::uintmax_t>(total.get_ui())
                                 : std::numeric_limits<std::uintmax_t>::max());

    const IntMatrix full = curve_intersection_matrix(x);
    Int best = 1;
    for (std::size_t k = 1; k <= max_size; ++k) {
        for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
            const auto sub = full.principal_submatrix(idx);
            const auto minors = linalg::leading_principal_minors(sub);
            if (minors.size() < k) return;  // zero leading minor: not definite
            for (std::size_t j = 0; j < k; ++j)
                if (sgn(minors[j]) != ((j % 2 == 0) ? -1 : 1)) return;
            best = std::max(best, Int(abs(minors.back())));
        });
    }
    return best;
}

Int theorem_d_bound(const Int& b, std::size_t rho) {
    if (b < 1 || rho < 1) throw InvalidParameter("theorem_d_bound: requires b >= 1 and rho >= 1");
    return pow_int(b, static_cast<unsigned long>(rho - 1));
}

Int theorem_b_bound(const Int& d, const Int& delta_abs) {
    if (d < 1) throw InvalidParameter("theorem_b_bound: requires d >= 1");
    if (delta_abs < 1) throw InvalidParameter("theorem_b_bound: requires |delta| >= 1");
    if (!d.fits_ulong_p())
        throw InvalidParameter("theorem_b_bound: factorial argument does not fit a machine word");
    Int fac;
    mpz_fac_ui(fac.get_mpz_t(), d.get_ui());
    return d * fac * delta_abs;
}

PrimitiveDecomposition primitive_decomposition(const DivisorClass& c) {
    if (c.is_zero()) throw ZeroClass("primitive_decomposition: zero class has no primitive ray");
    Int k = 0;
    for (const auto& v : c.coords) k = gcd(k, v);
    PrimitiveDecomposition out;
    out.k = k;
    out.primitive = DivisorClass(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        mpz_divexact(out.primitive.coords[i].get_mpz_t(), c.coords[i].get_mpz_t(), k.get_mpz_t());
    return out;
}

RealizedDenominator realize_denominator(const SurfaceModel& x, std::size_t curve_index) {
    if (curve_index >= x.curves.size())
        throw InvalidParameter("realize_denominator: curve index out of range");
    const auto& c = x.curves[curve_index];
    const Int ac = x.pairing(x.ample, c.cls);  // > 0 by the model invariants

    RealizedDenominator out;
    out.alpha = Rat(ac, -c.self_int);
    out.denominator = out.alpha.den();  // == -C^2 / gcd(C^2, A.C)
    out.k = out.alpha.floor() + 1;      // smallest integer > alpha: keeps C in the support

    RationalDivisor p(x.ample);
    p = p + out.alpha * RationalDivisor(c.cls);
    if (!x.is_nef(p))
        throw NotPseudoEffective(
            "realize_denominator: A + alpha*C is not nef; curve '" + c.name +
            "' pairs negatively with another registered curve");

    out.divisor = x.ample + out.k * c.cls;
    return out;
}

bool adjugate_divisibility_check(const SurfaceModel& x, const DivisorClass& c, const Int& t) {
    if (t < 1) throw InvalidParameter("adjugate_divisibility_check: t must be positive");
    if (c.size() != x.rank)
        throw DimensionMismatch("adjugate_divisibility_check: class length != rank");
    const IntVector row = x.gram.premul(c.coords);
    for (const auto& v : row)
        if (!mpz_divisible_p(v.get_mpz_t(), t.get_mpz_t())) return false;
    return true;
}

SurfaceBounds compute_bounds(const SurfaceModel& x, std::size_t max_size,
                             std::uintmax_t max_subsets) {
    SurfaceBounds sb;
    sb.b = negativity_bound(x);
    sb.rho = x.rank;
    sb.delta_abs = abs(x.discriminant());
    sb.d_enum = enumerate_denominator_bound(x, max_size, max_subsets);
    // A curve-free registry admits only trivial (integral) decompositions.
    sb.d_theorem = x.curves.empty() ? Int(1) : theorem_d_bound(sb.b, sb.rho);
    sb.b_theorem = theorem_b_bound(sb.d_enum, sb.delta_abs);
    return sb;
}

}  // namespace zariski::bounds
