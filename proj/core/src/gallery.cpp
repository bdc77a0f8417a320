#include "zariski/gallery.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "zariski/bounds.hpp"
#include "zariski/errors.hpp"
#include "zariski/zariski.hpp"

namespace zariski::gallery {

namespace {

Int pair_with(const IntMatrix& gram, const IntVector& u, const IntVector& v) {
    Int acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < v.size(); ++j) row += gram.at(i, j) * v[j];
        acc += u[i] * row;
    }
    return acc;
}

// Smallest degree d such that A = d*H - sum E_i has A^2 > 0 and pairs
// positively with every curve on a diag(1,-1,...,-1) blow-up lattice.
DivisorClass minimal_ample(const IntMatrix& gram,
                           const std::vector<std::pair<std::string, DivisorClass>>& curves) {
    const std::size_t rank = gram.dim();
    for (long d = 1; d <= 1'000'000; ++d) {
        DivisorClass a(rank);
        a.coords[0] = d;
        for (std::size_t i = 1; i < rank; ++i) a.coords[i] = -1;
        if (pair_with(gram, a.coords, a.coords) <= 0) continue;
        bool ok = true;
        for (const auto& [name, cls] : curves)
            if (pair_with(gram, a.coords, cls.coords) <= 0) {
                ok = false;
                break;
            }
        if (ok) return a;
    }
    throw InvalidParameter("minimal_ample: no ample class of the form d*H - sum E_i found");
}

IntMatrix blowup_gram(std::size_t rank) {
    IntMatrix g(rank);
    g.at(0, 0) = 1;
    for (std::size_t i = 1; i < rank; ++i) g.at(i, i) = -1;
    return g;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

long isqrt_floor(long v) {
    long r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// All integer vectors (c_1..c_m) with sum of squares q and sum s, appended
// to acc and emitted through f. Prunes on the Cauchy-Schwarz bound.
template <typename F>
void sum_square_vectors(std::size_t m, long q, long s, std::vector<long>& acc, F&& f) {
    if (m == 0) {
        if (q == 0 && s == 0) f(acc);
        return;
    }
    if (q < 0 || s * s > static_cast<long>(m) * q) return;
    const long cap = isqrt_floor(q);
    for (long c = -cap; c <= cap; ++c) {
        acc.push_back(c);
        sum_square_vectors(m - 1, q - c * c, s - c, acc, f);
        acc.pop_back();
    }
}

// Classes of degree c0 with C^2 = -1 and C.K = -1 on the rank r+1 blow-up
// lattice: sum c_i^2 = c0^2 + 1 and sum c_i = 1 - 3 c0.
std::vector<DivisorClass> minus_one_classes_of_degree(long r, long c0) {
    std::vector<DivisorClass> out;
    std::vector<long> acc;
    sum_square_vectors(
        static_cast<std::size_t>(r), c0 * c0 + 1, 1 - 3 * c0, acc, [&](const std::vector<long>& tail) {
            DivisorClass c(static_cast<std::size_t>(r) + 1);
            c.coords[0] = c0;
            long sq = c0 * c0, lin = -3 * c0;
            for (long i = 0; i < r; ++i) {
                c.coords[static_cast<std::size_t>(i) + 1] = tail[static_cast<std::size_t>(i)];
                sq -= tail[static_cast<std::size_t>(i)] * tail[static_cast<std::size_t>(i)];
                lin -= tail[static_cast<std::size_t>(i)];
            }
            assert(sq == -1 && lin == -1);  // gram constraints, by construction
            out.push_back(std::move(c));
        });
    return out;
}

bool lex_less(const DivisorClass& a, const DivisorClass& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
    return false;
}

FamilyScanRow make_row(const SurfaceModel& x, std::vector<long> params) {
    FamilyScanRow row;
    row.params = std::move(params);
    row.b = bounds::negativity_bound(x);
    row.d_enum = bounds::enumerate_denominator_bound(x);
    row.realized = decompose(x, demo_divisor(x)).denominator;
    row.delta_abs = abs(x.discriminant());
    row.rho = x.rank;
    return row;
}

}  // namespace

SurfaceModel build_collinear(long r) {
    if (r < 2) throw InvalidParameter("build_collinear: r must be >= 2");
    const auto rank = static_cast<std::size_t>(r) + 1;
    auto gram = blowup_gram(rank);

    std::vector<std::string> basis{"H"};
    std::vector<std::pair<std::string, DivisorClass>> curves;
    for (long i = 1; i <= r; ++i) {
        basis.push_back("E" + std::to_string(i));
        DivisorClass e(rank);
        e.coords[static_cast<std::size_t>(i)] = 1;
        curves.emplace_back("E" + std::to_string(i), std::move(e));
    }
    DivisorClass lt(rank);
    lt.coords[0] = 1;
    for (std::size_t i = 1; i < rank; ++i) lt.coords[i] = -1;
    curves.emplace_back("Lt", std::move(lt));

    auto ample = minimal_ample(gram, curves);
    return make_surface("collinear:" + std::to_string(r), std::move(gram), std::move(ample),
                        std::move(curves), std::move(basis));
}

SurfaceModel build_two_lines(long k1, long k2) {
    if (k1 < 2 || k2 < 2) throw InvalidParameter("build_two_lines: k1, k2 must be >= 2");
    const auto rank = static_cast<std::size_t>(k1 + k2) + 1;
    auto gram = blowup_gram(rank);

    std::vector<std::string> basis{"H"};
    std::vector<std::pair<std::string, DivisorClass>> curves;
    for (long i = 1; i <= k1 + k2; ++i) {
        basis.push_back("E" + std::to_string(i));
        DivisorClass e(rank);
        e.coords[static_cast<std::size_t>(i)] = 1;
        curves.emplace_back("E" + std::to_string(i), std::move(e));
    }
    DivisorClass l1(rank), l2(rank);
    l1.coords[0] = 1;
    l2.coords[0] = 1;
    for (long i = 1; i <= k1; ++i) l1.coords[static_cast<std::size_t>(i)] = -1;
    for (long i = k1 + 1; i <= k1 + k2; ++i) l2.coords[static_cast<std::size_t>(i)] = -1;
    curves.emplace_back("L1", std::move(l1));
    curves.emplace_back("L2", std::move(l2));

    auto ample = minimal_ample(gram, curves);
    return make_surface("two-lines:" + std::to_string(k1) + "," + std::to_string(k2),
                        std::move(gram), std::move(ample), std::move(curves), std::move(basis));
}

SurfaceModel build_frobenius_model(long p, long g, long n) {
    if (!is_prime(p)) throw InvalidParameter("build_frobenius_model: p must be prime");
    if (g < 2) throw InvalidParameter("build_frobenius_model: g must be >= 2");
    if (n < 1) throw InvalidParameter("build_frobenius_model: n must be >= 1");

    Int pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
    const Int gamma = pn * (2 - 2 * g);  // Gamma^2 < 0

    IntMatrix gram(2);
    gram.at(0, 1) = 1;
    gram.at(1, 0) = 1;
    gram.at(1, 1) = gamma;

    DivisorClass curve(2);
    curve.coords[1] = 1;
    // (1-gamma)*F2 + Gamma pairs with Gamma as 1 and has self-intersection
    // 2 - gamma > 0: the minimal ample of this shape.
    DivisorClass ample(2);
    ample.coords[0] = 1 - gamma;
    ample.coords[1] = 1;

    std::vector<std::pair<std::string, DivisorClass>> curves;
    curves.emplace_back("Gamma", std::move(curve));
    return make_surface(
        "frobenius:" + std::to_string(p) + "," + std::to_string(g) + "," + std::to_string(n),
        std::move(gram), std::move(ample), std::move(curves), {"F2", "Gamma"});
}

std::vector<DivisorClass> minus_one_classes(long r, long extra_expansions) {
    if (r < 1 || r > 8) throw InvalidParameter("minus_one_classes: r must be in 1..8");
    std::vector<DivisorClass> found;
    long consecutive_empty = 0;
    long degree = 0;
    auto scan_degree = [&](long b) {
        std::size_t added = 0;
        for (const long c0 : (b == 0) ? std::vector<long>{0} : std::vector<long>{b, -b}) {
            auto classes = minus_one_classes_of_degree(r, c0);
            added += classes.size();
            for (auto& c : classes) found.push_back(std::move(c));
        }
        return added;
    };
    for (;; ++degree) {
        consecutive_empty = (scan_degree(degree) == 0) ? consecutive_empty + 1 : 0;
        if (consecutive_empty >= 2) break;
    }
    for (long e = 0; e < extra_expansions; ++e) scan_degree(++degree);

    std::sort(found.begin(), found.end(), lex_less);
    return found;
}

SurfaceModel build_del_pezzo(long r) {
    if (r < 1 || r > 8) throw InvalidParameter("build_del_pezzo: r must be in 1..8");
    const auto rank = static_cast<std::size_t>(r) + 1;
    auto gram = blowup_gram(rank);

    std::vector<std::string> basis{"H"};
    for (long i = 1; i <= r; ++i) basis.push_back("E" + std::to_string(i));

    std::vector<std::pair<std::string, DivisorClass>> curves;
    long generic = 0;
    for (auto& cls : minus_one_classes(r)) {
        std::string name;
        if (cls.coords[0] == 0) {
            // degree-0 classes here are exactly the basis units E_i
            std::size_t i = 1;
            while (cls.coords[i] == 0) ++i;
            name = "E" + std::to_string(i);
        } else {
            name = "C" + std::to_string(++generic);
        }
        curves.emplace_back(std::move(name), std::move(cls));
    }

    auto ample = minimal_ample(gram, curves);
    return make_surface("del-pezzo:" + std::to_string(r), std::move(gram), std::move(ample),
                        std::move(curves), std::move(basis));
}

DivisorClass demo_divisor(const SurfaceModel& x) {
    auto resolve = [&](const char* n) {
        auto d = x.resolve_name(n);
        if (!d) throw InvalidParameter("demo_divisor: model '" + x.name + "' has no class named '" +
                                       std::string(n) + "'");
        return *d;
    };
    if (x.find_curve("Lt")) return resolve("H") + resolve("Lt");
    if (x.find_curve("L1") && x.find_curve("L2"))
        return resolve("H") + resolve("L1") + resolve("L2");
    if (x.find_curve("Gamma")) return resolve("F2") + resolve("Gamma");
    throw InvalidParameter("demo_divisor: no demonstration divisor for model '" + x.name + "'");
}

FamilyScan scan_collinear(long r_lo, long r_hi) {
    if (r_lo < 2 || r_hi < r_lo) throw InvalidParameter("scan_collinear: need 2 <= r_lo <= r_hi");
    FamilyScan scan{"collinear", {"r"}, {}};
    for (long r = r_lo; r <= r_hi; ++r) scan.rows.push_back(make_row(build_collinear(r), {r}));
    return scan;
}

FamilyScan scan_two_lines(long k1_lo, long k1_hi, long k2_lo, long k2_hi, bool coprime_only) {
    if (k1_lo < 2 || k1_hi < k1_lo || k2_lo < 2 || k2_hi < k2_lo)
        throw InvalidParameter("scan_two_lines: need 2 <= lo <= hi for both ranges");
    FamilyScan scan{"two-lines", {"k1", "k2"}, {}};
    for (long k1 = k1_lo; k1 <= k1_hi; ++k1)
        for (long k2 = k2_lo; k2 <= k2_hi; ++k2) {
            if (coprime_only && std::gcd(k1, k2) != 1) continue;
            scan.rows.push_back(make_row(build_two_lines(k1, k2), {k1, k2}));
        }
    return scan;
}

FamilyScan scan_frobenius(long p, long g, long n_lo, long n_hi) {
    if (n_lo < 1 || n_hi < n_lo) throw InvalidParameter("scan_frobenius: need 1 <= n_lo <= n_hi");
    FamilyScan scan{"frobenius", {"p", "g", "n"}, {}};
    for (long n = n_lo; n <= n_hi; ++n)
        scan.rows.push_back(make_row(build_frobenius_model(p, g, n), {p, g, n}));
    return scan;
}

SurfaceModel build_from_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("gallery spec '" + spec + "': expected family:params");
    const std::string family = spec.substr(0, colon);

    std::vector<long> params;
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        const auto comma = rest.find(',', pos);
        const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
        try {
            std::size_t used = 0;
            params.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("gallery spec '" + spec + "': bad parameter '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    auto expect = [&](std::size_t n) {
        if (params.size() != n)
            throw ParseError("gallery spec '" + spec + "': expected " + std::to_string(n) +
                             " parameter(s)");
    };
    try {
        if (family == "collinear") {
            expect(1);
            return build_collinear(params[0]);
        }
        if (family == "two-lines") {
            expect(2);
            return build_two_lines(params[0], params[1]);
        }
        if (family == "frobenius") {
            expect(3);
            return build_frobenius_model(params[0], params[1], params[2]);
        }
        if (family == "del-pezzo") {
            expect(1);
            return build_del_pezzo(params[0]);
        }
    } catch (const InvalidParameter& e) {
        throw ParseError("gallery spec '" + spec + "': " + e.what());
    }
    throw ParseError("gallery spec '" + spec + "': unknown family '" + family + "'");
}

}  // namespace zariski::gallery
