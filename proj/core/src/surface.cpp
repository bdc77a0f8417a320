#include "zariski/surface.hpp"

#include <utility>

#include "zariski/errors.hpp"

namespace zariski {

Int SurfaceModel::pairing(const DivisorClass& u, const DivisorClass& v) const {
    if (u.size() != rank || v.size() != rank)
        throw DimensionMismatch("pairing: coordinate length != rank");
    Int acc = 0;
    for (std::size_t i = 0; i < rank; ++i) {
        if (u.coords[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < rank; ++j) row += gram.at(i, j) * v.coords[j];
        acc += u.coords[i] * row;
    }
    return acc;
}

Rat SurfaceModel::pairing(const RationalDivisor& u, const RationalDivisor& v) const {
    if (u.size() != rank || v.size() != rank)
        throw DimensionMismatch("pairing: coordinate length != rank");
    Rat acc;
    for (std::size_t i = 0; i < rank; ++i) {
        if (u.coords[i].is_zero()) continue;
        Rat row;
        for (std::size_t j = 0; j < rank; ++j)
            row += Rat(gram.at(i, j)) * v.coords[j];
        acc += u.coords[i] * row;
    }
    return acc;
}

bool SurfaceModel::is_nef(const RationalDivisor& p) const {
    const Rat zero;
    if (pairing(p, p) < zero) return false;
    if (pairing(p, RationalDivisor(ample)) < zero) return false;
    for (const auto& c : curves)
        if (pairing(p, RationalDivisor(c.cls)) < zero) return false;
    return true;
}

std::vector<Violation> SurfaceModel::validate() const {
    std::vector<Violation> out;
    auto add = [&](std::string inv, std::string detail) {
        out.push_back({std::move(inv), std::move(detail)});
    };

    if (rank == 0) {
        add("rank-positive", "rank is 0");
        return out;
    }
    if (gram.dim() != rank) {
        add("gram-dimension", "gram is " + std::to_string(gram.dim()) + "x" +
                                  std::to_string(gram.dim()) + ", rank is " + std::to_string(rank));
        return out;  // nothing below is meaningful with a misshapen form
    }
    if (!gram.is_symmetric()) {
        add("gram-symmetric", "intersection form is not symmetric");
        return out;
    }

    const auto inertia = linalg::signature(gram);
    if (!(inertia == linalg::Inertia{1, rank - 1, 0}))
        add("signature", "expected (1," + std::to_string(rank - 1) + ",0), got (" +
                             std::to_string(inertia.positive) + "," + std::to_string(inertia.negative) +
                             "," + std::to_string(inertia.zero) + ")");

    if (ample.size() != rank) {
        add("ample-dimension", "ample class has " + std::to_string(ample.size()) + " coordinates");
        return out;
    }
    if (pairing(ample, ample) <= 0)
        add("ample-positive", "ample^2 = " + pairing(ample, ample).get_str());

    if (basis.size() != rank)
        add("basis-names", "expected " + std::to_string(rank) + " basis names, got " +
                               std::to_string(basis.size()));

    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& c = curves[i];
        if (c.cls.size() != rank) {
            add("curve-dimension", "curve '" + c.name + "' has " + std::to_string(c.cls.size()) +
                                       " coordinates");
            continue;
        }
        const Int self = pairing(c.cls, c.cls);
        if (c.self_int != self)
            add("curve-self-int-cache",
                "curve '" + c.name + "' caches " + c.self_int.get_str() + ", pairing gives " + self.get_str());
        if (self >= 0)
            add("curve-negative", "curve '" + c.name + "' has C^2 = " + self.get_str());
        if (pairing(ample, c.cls) <= 0)
            add("ample-positive-on-curve",
                "A.C = " + pairing(ample, c.cls).get_str() + " for curve '" + c.name + "'");
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            if (curves[j].cls == c.cls)
                add("curves-distinct", "curves '" + c.name + "' and '" + curves[j].name +
                                           "' share the same class");
    }
    return out;
}

std::optional<std::size_t> SurfaceModel::find_curve(const std::string& curve_name) const {
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (curves[i].name == curve_name) return i;
    return std::nullopt;
}

std::optional<DivisorClass> SurfaceModel::resolve_name(const std::string& ident) const {
    if (auto ci = find_curve(ident)) return curves[*ci].cls;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == ident) {
            DivisorClass d(rank);
            d.coords[i] = 1;
            return d;
        }
    return std::nullopt;
}

std::vector<std::string> SurfaceModel::default_basis_names(std::size_t rank) {
    std::vector<std::string> names;
    names.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) names.push_back("e" + std::to_string(i));
    return names;
}

SurfaceModel make_surface(std::string name, IntMatrix gram, DivisorClass ample,
                          std::vector<std::pair<std::string, DivisorClass>> curves,
                          std::vector<std::string> basis) {
    SurfaceModel x;
    x.name = std::move(name);
    x.rank = gram.dim();
    x.gram = std::move(gram);
    x.ample = std::move(ample);
    x.basis = basis.empty() ? SurfaceModel::default_basis_names(x.rank) : std::move(basis);
    x.curves.reserve(curves.size());
    for (auto& [cname, cls] : curves) {
        CurveRecord rec;
        rec.name = std::move(cname);
        rec.self_int = x.pairing(cls, cls);
        rec.cls = std::move(cls);
        x.curves.push_back(std::move(rec));
    }
    if (const auto violations = x.validate(); !violations.empty()) {
        std::string msg = "surface '" + x.name + "' fails validation:";
        for (const auto& v : violations) msg += "\n  [" + v.invariant + "] " + v.detail;
        throw ValidationError(msg);
    }
    return x;
}

}  // namespace zariski
