#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "zariski/errors.hpp"
#include "zariski/gallery.hpp"
#include "zariski/linalg.hpp"
#include "zariski/zariski.hpp"

using namespace zariski;

namespace {

DivisorClass named(const SurfaceModel& x, const std::string& n) {
    auto d = x.resolve_name(n);
    REQUIRE(d);
    return *d;
}

}  // namespace

TEST_CASE("collinear r=5: H + Lt sheds 3/4 of the line transform") {
    const auto x = gallery::build_collinear(5);
    const auto d = named(x, "H") + named(x, "Lt");
    const auto z = decompose(x, d);

    REQUIRE(z.negative.size() == 1);
    CHECK(x.curves[z.negative[0].curve].name == "Lt");
    CHECK(z.negative[0].coeff == Rat(3, 4));  // (r-2)/(r-1)
    CHECK(z.denominator == 4);

    RationalDivisor expect(named(x, "H"));
    expect = expect + Rat(1, 4) * RationalDivisor(named(x, "Lt"));
    CHECK(z.positive == expect);
}

TEST_CASE("ample classes are nef: empty negative part") {
    for (const auto& x : {gallery::build_collinear(4), gallery::build_del_pezzo(3),
                          gallery::build_frobenius_model(2, 2, 1)}) {
        const auto z = decompose(x, x.ample);
        CHECK(z.negative.empty());
        CHECK(z.positive == RationalDivisor(x.ample));
        CHECK(z.denominator == 1);
    }
}

TEST_CASE("frobenius model (2,2,1): denominator 4 = p^n(2g-2)") {
    const auto x = gallery::build_frobenius_model(2, 2, 1);
    const auto z = decompose(x, named(x, "F2") + named(x, "Gamma"));
    REQUIRE(z.negative.size() == 1);
    CHECK(z.negative[0].coeff == Rat(3, 4));  // (1+gamma)/gamma with gamma=-4
    CHECK(z.denominator == 4);
}

TEST_CASE("two-line surface (4,5): denominator k1 k2 - k1 - k2 = 11") {
    const auto x = gallery::build_two_lines(4, 5);
    const auto z = decompose(x, named(x, "H") + named(x, "L1") + named(x, "L2"));
    REQUIRE(z.negative.size() == 2);
    CHECK(x.curves[z.negative[0].curve].name == "L1");
    CHECK(x.curves[z.negative[1].curve].name == "L2");
    // frozen from the closed-form 2x2 solve of [[-3,1],[1,-4]] a = (-1,-2)
    CHECK(z.negative[0].coeff == Rat(6, 11));
    CHECK(z.negative[1].coeff == Rat(7, 11));
    CHECK(z.denominator == 11);
}

TEST_CASE("verify accepts engine output and flags tampering") {
    const auto x = gallery::build_collinear(5);
    const auto d = named(x, "H") + named(x, "Lt");
    auto z = decompose(x, d);
    CHECK(verify(x, d, z).empty());

    SUBCASE("perturbed coefficient breaks orthogonality") {
        z.negative[0].coeff += Rat(1);
        bool orth = false;
        for (const auto& v : verify(x, d, z)) orth |= v.invariant == "orthogonality";
        CHECK(orth);
    }
    SUBCASE("wrong stored denominator is caught") {
        z.denominator = 5;
        bool den = false;
        for (const auto& v : verify(x, d, z)) den |= v.invariant == "denominator";
        CHECK(den);
    }
}

TEST_CASE("verify flags a support with non-definite intersection matrix") {
    // On the (2,2) two-line surface L1.L2 = 1 and both have self-intersection
    // -1, so {L1, L2} has singular intersection matrix and is no valid support.
    const auto x = gallery::build_two_lines(2, 2);
    const auto d = named(x, "H") + named(x, "L1") + named(x, "L2");
    ZariskiDecomposition z;
    z.positive = RationalDivisor(named(x, "H"));
    z.negative.push_back({*x.find_curve("L1"), Rat(1)});
    z.negative.push_back({*x.find_curve("L2"), Rat(1)});
    z.denominator = 1;
    bool nd = false;
    for (const auto& v : verify(x, d, z)) nd |= v.invariant == "negative-definite";
    CHECK(nd);
}

TEST_CASE("oracle equals engine on pinned examples") {
    const auto c5 = gallery::build_collinear(5);
    const auto d = named(c5, "H") + named(c5, "Lt");
    CHECK(decompose_oracle(c5, d) == decompose(c5, d));

    CHECK(decompose_oracle(c5, c5.ample).negative.empty());

    const auto tl = gallery::build_two_lines(4, 5);
    const auto dtl = named(tl, "H") + named(tl, "L1") + named(tl, "L2");
    const auto zo = decompose_oracle(tl, dtl);
    REQUIRE(zo.negative.size() == 2);
    CHECK(tl.curves[zo.negative[0].curve].name == "L1");
    CHECK(tl.curves[zo.negative[1].curve].name == "L2");
}

TEST_CASE("oracle limit") {
    const auto dp6 = gallery::build_del_pezzo(6);  // 27 curves
    CHECK_THROWS_AS(make_oracle_context(dp6), OracleLimitExceeded);
}

TEST_CASE("denominator_of on pinned runs") {
    const auto c5 = gallery::build_collinear(5);
    CHECK(decompose(c5, named(c5, "H") + named(c5, "Lt")).denominator == 4);

    // only (-1)-curves in the support: integral coefficients
    const auto dp = gallery::build_del_pezzo(2);
    testutil::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto d = testutil::random_effective_divisor(dp, rng);
        CHECK(decompose(dp, d).denominator == 1);
    }

    const auto fr = gallery::build_frobenius_model(3, 2, 2);  // gamma = -18
    CHECK(decompose(fr, named(fr, "F2") + named(fr, "Gamma")).denominator == 18);
}

TEST_CASE("engine and oracle agree on randomized effective divisors") {
    testutil::Rng rng(40403);
    for (const auto& x : {gallery::build_collinear(3), gallery::build_collinear(5),
                          gallery::build_two_lines(2, 3), gallery::build_two_lines(4, 5),
                          gallery::build_frobenius_model(2, 2, 1), gallery::build_del_pezzo(3)}) {
        const auto ctx = make_oracle_context(x);
        for (int trial = 0; trial < 40; ++trial) {
            const auto d = testutil::random_effective_divisor(x, rng);
            const auto z = decompose(x, d);
            CHECK(z == decompose_oracle(ctx, d));
            CHECK(verify(x, d, z).empty());
        }
    }
}

TEST_CASE("decomposition invariants on randomized divisors") {
    testutil::Rng rng(505);
    const auto x = gallery::build_two_lines(4, 5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto d = testutil::random_effective_divisor(x, rng);
        const auto z = decompose(x, d);

        // Cramer: the denominator divides |det(S_support)|
        const auto support = z.support();
        if (!support.empty()) {
            const Int ds = linalg::det(negative_part_system(x, d, support).S);
            CHECK(mpz_divisible_p(ds.get_mpz_t(), z.denominator.get_mpz_t()));
        }
        CHECK(support.size() <= x.rank - 1);

        // scaling: decompose(m*D) = m * decompose(D)
        for (long m = 2; m <= 6; ++m) {
            const auto zm = decompose(x, Int(m) * d);
            CHECK(zm.positive == Rat(m) * z.positive);
            REQUIRE(zm.negative.size() == z.negative.size());
            for (std::size_t t = 0; t < z.negative.size(); ++t) {
                CHECK(zm.negative[t].curve == z.negative[t].curve);
                CHECK(zm.negative[t].coeff == Rat(m) * z.negative[t].coeff);
            }
            CHECK(mpz_divisible_p(z.denominator.get_mpz_t(), zm.denominator.get_mpz_t()));
        }

        // clearing denominators yields an integral decomposition
        const auto zc = decompose(x, z.denominator * d);
        for (const auto& t : zc.negative) CHECK(t.coeff.is_integer());
    }
}

TEST_CASE("engine and oracle agree on arbitrary divisors, including rejections") {
    testutil::Rng rng(321321);
    std::uniform_int_distribution<long> coord(-3, 4);
    for (const auto& x : {gallery::build_collinear(4), gallery::build_two_lines(2, 3),
                          gallery::build_frobenius_model(2, 2, 2), gallery::build_del_pezzo(2)}) {
        const auto ctx = make_oracle_context(x);
        int rejected = 0;
        for (int trial = 0; trial < 60; ++trial) {
            DivisorClass d(x.rank);
            for (auto& c : d.coords) c = coord(rng);

            std::optional<ZariskiDecomposition> ze, zo;
            try {
                ze = decompose(x, d);
            } catch (const NotPseudoEffective&) {
            }
            try {
                zo = decompose_oracle(ctx, d);
            } catch (const NotPseudoEffective&) {
            }
            CHECK(ze.has_value() == zo.has_value());
            if (ze && zo) CHECK(*ze == *zo);
            if (!ze) ++rejected;
        }
        CHECK(rejected > 0);  // the coordinate box reaches outside the effective cone
    }
}

TEST_CASE("negative_part_system shape") {
    const auto x = gallery::build_two_lines(4, 5);
    const auto d = named(x, "H") + named(x, "L1") + named(x, "L2");
    const std::vector<std::size_t> support = {*x.find_curve("L1"), *x.find_curve("L2")};
    const auto sys = negative_part_system(x, d, support);
    CHECK(sys.support == support);
    CHECK(sys.S.dim() == 2);
    CHECK(sys.b.size() == 2);
    CHECK(sys.S == IntMatrix{{-3, 1}, {1, -4}});
    CHECK(sys.b == IntVector{-1, -2});
    CHECK(sys.S.is_symmetric());
    CHECK(linalg::is_negative_definite(sys.S));
}

TEST_CASE("rational input divisors are cleared and rescaled") {
    const auto x = gallery::build_collinear(5);
    const auto d = named(x, "H") + named(x, "Lt");
    const auto z = decompose(x, d);

    RationalDivisor half(x.rank);
    for (std::size_t i = 0; i < x.rank; ++i) half.coords[i] = Rat(d.coords[i], Int(2));
    const auto zh = decompose(x, half);
    CHECK(zh.positive == Rat(1, 2) * z.positive);
    REQUIRE(zh.negative.size() == 1);
    CHECK(zh.negative[0].coeff == Rat(3, 8));
}

TEST_CASE("non-pseudo-effective inputs are rejected with a witness") {
    const auto fr = gallery::build_frobenius_model(2, 2, 1);
    // -F2 - Gamma has negative self-intersection and stays negative
    DivisorClass bad(IntVector{-1, -1});
    CHECK_THROWS_AS(decompose(fr, bad), NotPseudoEffective);

    // -F2: remainder pairs negatively with the ample class
    DivisorClass minus_fiber(IntVector{-1, 0});
    CHECK_THROWS_AS(decompose(fr, minus_fiber), NotPseudoEffective);
    CHECK_THROWS_AS(decompose_oracle(fr, minus_fiber), NotPseudoEffective);

    // collinear: minus the ample pulls every curve into the support until
    // negative definiteness fails
    const auto c4 = gallery::build_collinear(4);
    DivisorClass neg_ample = Int(-1) * c4.ample;
    CHECK_THROWS_AS(decompose(c4, neg_ample), NotPseudoEffective);
}
