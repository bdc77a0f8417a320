#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "test_util.hpp"
#include "zariski/bounds.hpp"
#include "zariski/errors.hpp"
#include "zariski/gallery.hpp"
#include "zariski/zariski.hpp"

using namespace zariski;
using namespace zariski::gallery;

namespace {

DivisorClass named(const SurfaceModel& x, const std::string& n) {
    auto d = x.resolve_name(n);
    REQUIRE(d);
    return *d;
}

}  // namespace

TEST_CASE("every builder output validates cleanly") {
    CHECK(build_collinear(2).validate().empty());
    CHECK(build_collinear(12).validate().empty());
    CHECK(build_two_lines(2, 2).validate().empty());
    CHECK(build_two_lines(5, 9).validate().empty());
    CHECK(build_frobenius_model(2, 2, 1).validate().empty());
    CHECK(build_frobenius_model(5, 3, 2).validate().empty());
    for (long r = 1; r <= 8; ++r) CHECK(build_del_pezzo(r).validate().empty());
}

TEST_CASE("collinear family facts") {
    const auto x5 = build_collinear(5);
    CHECK(x5.rank == 6);
    CHECK(x5.curves.size() == 6);  // E1..E5 and Lt
    DivisorClass expected_ample = Int(6) * named(x5, "H");
    for (int i = 1; i <= 5; ++i)
        expected_ample = expected_ample - named(x5, "E" + std::to_string(i));
    CHECK(x5.ample == expected_ample);

    // r=3 carries a (-2)-curve
    const auto x3 = build_collinear(3);
    CHECK(x3.curves[*x3.find_curve("Lt")].self_int == -2);

    // r=2: everything is a (-1)-curve, the enumerated bound collapses to 1
    const auto x2 = build_collinear(2);
    CHECK(x2.curves[*x2.find_curve("Lt")].self_int == -1);
    CHECK(bounds::enumerate_denominator_bound(x2) == 1);

    // coefficient (r-2)/(r-1) across the family
    for (long r = 3; r <= 12; ++r) {
        const auto x = build_collinear(r);
        const auto z = decompose(x, named(x, "H") + named(x, "Lt"));
        REQUIRE(z.negative.size() == 1);
        CHECK(z.negative[0].coeff == Rat(r - 2, r - 1));
        CHECK(z.denominator == r - 1);
    }
}

TEST_CASE("two-line family facts") {
    const auto x = build_two_lines(4, 5);
    CHECK(x.rank == 10);
    CHECK(x.pairing(named(x, "L1"), named(x, "L2")) == 1);
    CHECK(bounds::negativity_bound(x) == 4);
    CHECK(decompose(x, named(x, "H") + named(x, "L1") + named(x, "L2")).denominator == 11);

    // (2,2): the decomposition of H + L1 + L2 is integral (the divisor is nef)
    const auto x22 = build_two_lines(2, 2);
    const auto z22 = decompose(x22, named(x22, "H") + named(x22, "L1") + named(x22, "L2"));
    CHECK(z22.denominator == 1);

    // coprime pairs: denominator k1 k2 - k1 - k2 with coprime numerators
    for (long k1 = 4; k1 <= 9; ++k1)
        for (long k2 = k1 + 1; k2 <= 9; ++k2) {
            if (std::gcd(k1, k2) != 1) continue;
            const auto m = build_two_lines(k1, k2);
            const auto z = decompose(m, named(m, "H") + named(m, "L1") + named(m, "L2"));
            const long expect = k1 * k2 - k1 - k2;
            CHECK(z.denominator == expect);
            REQUIRE(z.negative.size() == 2);
            for (const auto& t : z.negative) {
                CHECK(t.coeff.den() == expect);
                CHECK(gcd(t.coeff.num(), t.coeff.den()) == 1);
            }
        }
}

TEST_CASE("frobenius family facts") {
    const auto x = build_frobenius_model(2, 2, 1);
    CHECK(x.rank == 2);
    CHECK(x.curves.size() == 1);
    CHECK(x.curves[0].self_int == -4);  // 2^1 (2 - 4)
    CHECK(decompose(x, named(x, "F2") + named(x, "Gamma")).denominator == 4);

    const auto x331 = build_frobenius_model(3, 3, 1);
    CHECK(x331.curves[0].self_int == -12);  // 3 (2 - 6)
    const auto z = decompose(x331, named(x331, "F2") + named(x331, "Gamma"));
    CHECK(z.denominator == 12);  // gcd(1 + gamma, gamma) = 1

    // denominators strictly increase with n
    Int last = 0;
    for (long n = 1; n <= 10; ++n) {
        const auto m = build_frobenius_model(2, 2, n);
        const auto d = decompose(m, named(m, "F2") + named(m, "Gamma")).denominator;
        Int expect;
        mpz_ui_pow_ui(expect.get_mpz_t(), 2, static_cast<unsigned long>(n));
        CHECK(d == expect * 2);
        CHECK(d > last);
        last = d;
    }
}

TEST_CASE("del pezzo curve registries") {
    const long expected_counts[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
    for (long r = 1; r <= 8; ++r) {
        const auto classes = minus_one_classes(r);
        CHECK(std::ssize(classes) == expected_counts[r]);
        // stable under pushing the degree search window further out
        CHECK(minus_one_classes(r, 3).size() == classes.size());
    }

    // every registered class has C^2 = -1 and C.K = -1
    for (long r : {1L, 3L, 6L}) {
        const auto x = build_del_pezzo(r);
        DivisorClass canonical(x.rank);
        canonical.coords[0] = -3;
        for (std::size_t i = 1; i < x.rank; ++i) canonical.coords[i] = 1;
        for (const auto& c : x.curves) {
            CHECK(c.self_int == -1);
            CHECK(x.pairing(c.cls, canonical) == -1);
        }
    }

    // r=3: three exceptional curves and the three lines through point pairs
    const auto x3 = build_del_pezzo(3);
    CHECK(x3.curves.size() == 6);
    std::size_t degree_zero = 0, degree_one = 0;
    for (const auto& c : x3.curves) {
        if (c.cls.coords[0] == 0) ++degree_zero;
        if (c.cls.coords[0] == 1) ++degree_one;
    }
    CHECK(degree_zero == 3);
    CHECK(degree_one == 3);
}

TEST_CASE("scan_collinear reports b = d_enum = realized = r-1") {
    const auto scan = scan_collinear(3, 12);
    REQUIRE(scan.rows.size() == 10);
    for (const auto& row : scan.rows) {
        const long r = row.params[0];
        CHECK(row.b == r - 1);
        CHECK(row.d_enum == r - 1);
        CHECK(row.realized == r - 1);
        CHECK(row.delta_abs == 1);
        CHECK(row.rho == static_cast<std::size_t>(r) + 1);
        CHECK(row.realized <= row.d_enum);
    }
}

TEST_CASE("scan_two_lines over coprime pairs realizes k1 k2 - k1 - k2") {
    const auto scan = scan_two_lines(4, 6, 5, 9, true);
    CHECK(!scan.rows.empty());
    for (const auto& row : scan.rows) {
        const long k1 = row.params[0], k2 = row.params[1];
        CHECK(std::gcd(k1, k2) == 1);
        CHECK(row.realized == k1 * k2 - k1 - k2);
        CHECK(row.b == std::max(k1, k2) - 1);
        CHECK(row.realized <= row.d_enum);
    }
}

TEST_CASE("scan_frobenius tabulates the geometric growth") {
    const auto scan = scan_frobenius(2, 2, 1, 8);
    REQUIRE(scan.rows.size() == 8);
    Int expect = 4;
    for (const auto& row : scan.rows) {
        CHECK(row.realized == expect);
        CHECK(row.d_enum == expect);
        CHECK(row.realized <= row.d_enum);
        expect *= 2;
    }
}

TEST_CASE("builder parameter validation") {
    CHECK_THROWS_AS(build_collinear(1), InvalidParameter);
    CHECK_THROWS_AS(build_two_lines(1, 5), InvalidParameter);
    CHECK_THROWS_AS(build_frobenius_model(4, 2, 1), InvalidParameter);  // 4 is not prime
    CHECK_THROWS_AS(build_frobenius_model(2, 1, 1), InvalidParameter);
    CHECK_THROWS_AS(build_frobenius_model(2, 2, 0), InvalidParameter);
    CHECK_THROWS_AS(build_del_pezzo(0), InvalidParameter);
    CHECK_THROWS_AS(build_del_pezzo(9), InvalidParameter);
    CHECK_THROWS_AS(scan_collinear(5, 4), InvalidParameter);
}

TEST_CASE("gallery spec strings") {
    CHECK(build_from_spec("collinear:5").name == "collinear:5");
    CHECK(build_from_spec("two-lines:4,5").name == "two-lines:4,5");
    CHECK(build_from_spec("frobenius:2,2,1").name == "frobenius:2,2,1");
    CHECK(build_from_spec("del-pezzo:3").name == "del-pezzo:3");
    CHECK_THROWS_AS(build_from_spec("collinear"), ParseError);
    CHECK_THROWS_AS(build_from_spec("collinear:x"), ParseError);
    CHECK_THROWS_AS(build_from_spec("collinear:4,5"), ParseError);
    CHECK_THROWS_AS(build_from_spec("moebius:1"), ParseError);
    CHECK_THROWS_AS(build_from_spec("collinear:1"), ParseError);  // InvalidParameter -> ParseError
}

TEST_CASE("demo divisors resolve per family") {
    const auto c = build_collinear(4);
    CHECK(demo_divisor(c) == named(c, "H") + named(c, "Lt"));
    const auto t = build_two_lines(2, 3);
    CHECK(demo_divisor(t) == named(t, "H") + named(t, "L1") + named(t, "L2"));
    const auto f = build_frobenius_model(2, 2, 2);
    CHECK(demo_divisor(f) == named(f, "F2") + named(f, "Gamma"));
    CHECK_THROWS_AS(demo_divisor(build_del_pezzo(2)), InvalidParameter);
}
