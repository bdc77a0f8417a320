#include "zariski/zariski.hpp"

#include <algorithm>
#include <stdexcept>

#include "zariski/errors.hpp"
#include "zariski/linalg.hpp"

namespace zariski {

namespace {

std::string support_names(const SurfaceModel& x, std::span<const std::size_t> support) {
    std::string s = "{";
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (i) s += ", ";
        s += x.curves[support[i]].name;
    }
    return s + "}";
}

RationalDivisor subtract_terms(const SurfaceModel& x, const DivisorClass& d,
                               std::span<const std::size_t> support, const RatVector& coeffs) {
    RationalDivisor p(d);
    for (std::size_t t = 0; t < support.size(); ++t) {
        if (coeffs[t].is_zero()) continue;
        const auto& cls = x.curves[support[t]].cls;
        for (std::size_t j = 0; j < x.rank; ++j)
            p.coords[j] -= coeffs[t] * Rat(cls.coords[j]);
    }
    return p;
}

ZariskiDecomposition build_decomposition(RationalDivisor p, std::span<const std::size_t> support,
                                         const RatVector& coeffs) {
    ZariskiDecomposition z;
    z.positive = std::move(p);
    for (std::size_t t = 0; t < support.size(); ++t)
        if (!coeffs[t].is_zero()) z.negative.push_back({support[t], coeffs[t]});
    z.denominator = denominator_of(z.negative);
    return z;
}

}  // namespace

NegativePartSystem negative_part_system(const SurfaceModel& x, const DivisorClass& d,
                                        std::span<const std::size_t> support) {
    NegativePartSystem sys;
    sys.support.assign(support.begin(), support.end());
    const std::size_t k = support.size();
    sys.S = IntMatrix(k);
    sys.b.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& ci = x.curves[support[i]].cls;
        sys.b[i] = x.pairing(d, ci);
        for (std::size_t j = 0; j < k; ++j)
            sys.S.at(i, j) = (i == j) ? x.curves[support[i]].self_int
                                      : x.pairing(ci, x.curves[support[j]].cls);
    }
    return sys;
}

std::vector<std::size_t> ZariskiDecomposition::support() const {
    std::vector<std::size_t> out;
    out.reserve(negative.size());
    for (const auto& t : negative) out.push_back(t.curve);
    return out;
}

RationalDivisor ZariskiDecomposition::negative_part(const SurfaceModel& x) const {
    RationalDivisor n(x.rank);
    for (const auto& t : negative)
        for (std::size_t j = 0; j < x.rank; ++j)
            n.coords[j] += t.coeff * Rat(x.curves[t.curve].cls.coords[j]);
    return n;
}

Int denominator_of(const std::vector<NegativeTerm>& terms) {
    Int l = 1;
    for (const auto& t : terms) l = lcm(l, t.coeff.den());
    return l;
}

ZariskiDecomposition decompose(const SurfaceModel& x, const DivisorClass& d) {
    if (d.size() != x.rank) throw DimensionMismatch("decompose: divisor length != rank");

    std::vector<std::size_t> support;
    std::vector<bool> in_support(x.curves.size(), false);
    RatVector coeffs;
    RationalDivisor p{d};

    for (;;) {
        if (!support.empty()) {
            const auto sys = negative_part_system(x, d, support);
            if (!linalg::is_negative_definite(sys.S))
                throw NotPseudoEffective(
                    "support " + support_names(x, support) +
                    " has a non-negative-definite intersection matrix");
            coeffs = linalg::solve(sys.S, sys.b);
            for (std::size_t t = 0; t < support.size(); ++t)
                if (coeffs[t].sign() < 0)
                    throw NotPseudoEffective("solved coefficient of curve '" +
                                             x.curves[support[t]].name + "' is negative (" +
                                             coeffs[t].str() + ")");
            p = subtract_terms(x, d, support, coeffs);
        }

        // Support curves satisfy P.C = 0 exactly, so only outsiders can violate.
        std::vector<std::size_t> violators;
        for (std::size_t c = 0; c < x.curves.size(); ++c)
            if (!in_support[c] && x.pairing(p, RationalDivisor(x.curves[c].cls)).sign() < 0)
                violators.push_back(c);
        if (violators.empty()) break;
        for (std::size_t c : violators) {
            in_support[c] = true;
            support.push_back(c);
        }
        std::sort(support.begin(), support.end());
    }

    if (x.pairing(p, p).sign() < 0)
        throw NotPseudoEffective("remainder has negative self-intersection (" +
                                 x.pairing(p, p).str() + ") after removing the negative part");
    if (x.pairing(p, RationalDivisor(x.ample)).sign() < 0)
        throw NotPseudoEffective("remainder pairs negatively with the ample class");

    auto z = build_decomposition(std::move(p), support, coeffs);
    if (const auto violations = verify(x, d, z); !violations.empty())
        throw std::logic_error("decompose: output fails verification: [" +
                               violations.front().invariant + "] " + violations.front().detail);
    return z;
}

ZariskiDecomposition decompose(const SurfaceModel& x, const RationalDivisor& d) {
    Int clear = 1;
    for (const auto& c : d.coords) clear = lcm(clear, c.den());
    DivisorClass scaled(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        scaled.coords[i] = (Rat(clear) * d.coords[i]).num();
    auto z = decompose(x, scaled);
    const Rat inv(Int(1), clear);
    z.positive = inv * z.positive;
    for (auto& t : z.negative) t.coeff *= inv;
    z.denominator = denominator_of(z.negative);
    return z;
}

std::vector<Violation> verify(const SurfaceModel& x, const DivisorClass& d,
                              const ZariskiDecomposition& z) {
    std::vector<Violation> out;
    auto add = [&](std::string inv, std::string detail) {
        out.push_back({std::move(inv), std::move(detail)});
    };

    if (d.size() != x.rank || z.positive.size() != x.rank) {
        add("dimension", "divisor or positive part length != rank");
        return out;
    }
    for (std::size_t t = 0; t < z.negative.size(); ++t) {
        if (z.negative[t].curve >= x.curves.size()) {
            add("support-valid", "curve index " + std::to_string(z.negative[t].curve) +
                                     " out of range");
            return out;
        }
        if (t > 0 && z.negative[t].curve <= z.negative[t - 1].curve)
            add("support-valid", "support indices not strictly increasing");
    }

    for (const auto& t : z.negative)
        if (t.coeff.sign() <= 0)
            add("effective", "coefficient of curve '" + x.curves[t.curve].name +
                                 "' is " + t.coeff.str());

    const auto support = z.support();
    const RationalDivisor n = z.negative_part(x);
    RationalDivisor p_eff(d);
    p_eff = p_eff - n;

    if (!(z.positive == p_eff)) add("sum", "P + N differs from D");

    if (!support.empty()) {
        const auto sys = negative_part_system(x, d, support);
        if (!linalg::is_negative_definite(sys.S))
            add("negative-definite",
                "support " + support_names(x, support) + " intersection matrix is not negative definite");
    }

    for (std::size_t idx : support) {
        const Rat v = x.pairing(p_eff, RationalDivisor(x.curves[idx].cls));
        if (!v.is_zero())
            add("orthogonality",
                "P pairs with support curve '" + x.curves[idx].name + "' as " + v.str());
    }

    if (!x.is_nef(p_eff)) add("nef", "positive part fails the finite nefness test");

    if (support.size() + 1 > x.rank)
        add("support-bound", "support size " + std::to_string(support.size()) +
                                 " exceeds rank-1 = " + std::to_string(x.rank - 1));

    if (z.denominator != denominator_of(z.negative))
        add("denominator", "stored denominator " + z.denominator.get_str() +
                               " != lcm of coefficient denominators " +
                               denominator_of(z.negative).get_str());
    return out;
}

OracleContext make_oracle_context(const SurfaceModel& x, std::size_t limit) {
    const std::size_t n = x.curves.size();
    if (n > limit || n >= 64)
        throw OracleLimitExceeded("oracle limit is " + std::to_string(limit) + " curves, model '" +
                                  x.name + "' has " + std::to_string(n));
    OracleContext ctx;
    ctx.model = &x;

    ctx.full = IntMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            ctx.full.at(i, j) = x.pairing(x.curves[i].cls, x.curves[j].cls);

    const std::uint64_t end = std::uint64_t{1} << n;
    std::vector<std::size_t> idx;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        idx.clear();
        for (std::size_t c = 0; c < n; ++c)
            if (mask >> c & 1) idx.push_back(c);
        if (idx.empty() || linalg::is_negative_definite(ctx.full.principal_submatrix(idx)))
            ctx.nd_masks.push_back(mask);
    }
    return ctx;
}

ZariskiDecomposition decompose_oracle(const OracleContext& ctx, const DivisorClass& d) {
    const SurfaceModel& x = *ctx.model;
    if (d.size() != x.rank) throw DimensionMismatch("decompose_oracle: divisor length != rank");

    IntVector b_full(x.curves.size());
    for (std::size_t c = 0; c < x.curves.size(); ++c)
        b_full[c] = x.pairing(d, x.curves[c].cls);

    bool have = false;
    ZariskiDecomposition best;
    std::vector<std::size_t> support;
    for (const std::uint64_t mask : ctx.nd_masks) {
        support.clear();
        for (std::size_t c = 0; c < x.curves.size(); ++c)
            if (mask >> c & 1) support.push_back(c);

        RatVector coeffs;
        if (!support.empty()) {
            IntVector b(support.size());
            for (std::size_t t = 0; t < support.size(); ++t) b[t] = b_full[support[t]];
            // never singular: the support matrix is negative definite
            coeffs = linalg::solve(ctx.full.principal_submatrix(support), b);
            bool nonneg = true;
            for (const auto& a : coeffs)
                if (a.sign() < 0) {
                    nonneg = false;
                    break;
                }
            if (!nonneg) continue;
        }
        RationalDivisor p = subtract_terms(x, d, support, coeffs);
        if (!x.is_nef(p)) continue;

        auto z = build_decomposition(std::move(p), support, coeffs);
        if (!have) {
            best = std::move(z);
            have = true;
        } else if (!(best == z)) {
            throw std::logic_error("decompose_oracle: two distinct decompositions accepted for '" +
                                   x.name + "' (uniqueness violated)");
        }
    }
    if (!have)
        throw NotPseudoEffective("no curve subset yields nef remainder and non-negative coefficients");
    return best;
}

ZariskiDecomposition decompose_oracle(const SurfaceModel& x, const DivisorClass& d,
                                      std::size_t limit) {
    return decompose_oracle(make_oracle_context(x, limit), d);
}

}  // namespace zariski
